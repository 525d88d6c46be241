#include "deepfmea/records.hpp"

namespace deepfmea {

namespace {

Record base(const char* type, const Id& id) {
    Record r;
    r["type"] = type;
    r["id"] = id;
    return r;
}

const Record& field(const Record& r, const char* key) {
    auto it = r.find(key);
    if (it == r.end())
        fail("parse", std::string("record missing field '") + key + "'");
    return *it;
}

}  // namespace

Record to_record(const SystemElement& e) {
    Record r = base("system_element", e.id);
    r["name"] = e.name;
    if (e.parent_id)
        r["parent"] = *e.parent_id;
    else
        r["parent"] = nullptr;
    return r;
}

SystemElement system_element_from_record(const Record& r) {
    SystemElement e;
    e.id = field(r, "id").get<std::string>();
    e.name = field(r, "name").get<std::string>();
    const auto& parent = field(r, "parent");
    if (!parent.is_null()) e.parent_id = parent.get<std::string>();
    return e;
}

Record to_record(const Asset& e) {
    Record r = base("asset", e.id);
    r["root_element"] = e.root_element_id;
    r["label"] = e.label;
    return r;
}

Asset asset_from_record(const Record& r) {
    Asset e;
    e.id = field(r, "id").get<std::string>();
    e.root_element_id = field(r, "root_element").get<std::string>();
    e.label = field(r, "label").get<std::string>();
    return e;
}

Record to_record(const Signal& e) {
    Record r = base("signal", e.id);
    r["name"] = e.name;
    r["elements"] = e.element_ids;
    r["sampling_rate_hz"] = e.sampling_rate_hz;
    r["unit"] = e.unit;
    r["source"] = to_string(e.source);
    return r;
}

Signal signal_from_record(const Record& r) {
    Signal e;
    e.id = field(r, "id").get<std::string>();
    e.name = field(r, "name").get<std::string>();
    e.element_ids = field(r, "elements").get<std::vector<std::string>>();
    e.sampling_rate_hz = field(r, "sampling_rate_hz").get<double>();
    e.unit = field(r, "unit").get<std::string>();
    e.source = signal_source_from_string(field(r, "source").get<std::string>());
    return e;
}

Record to_record(const Segment& e) {
    Record r = base("segment", e.id);
    r["name"] = e.name;
    r["method"] = to_string(e.method);
    r["params"] = {{"start_s", e.start_s}, {"end_s", e.end_s}};
    return r;
}

Segment segment_from_record(const Record& r) {
    Segment e;
    e.id = field(r, "id").get<std::string>();
    e.name = field(r, "name").get<std::string>();
    e.method = segment_method_from_string(field(r, "method").get<std::string>());
    const auto& params = field(r, "params");
    e.start_s = field(params, "start_s").get<double>();
    e.end_s = field(params, "end_s").get<double>();
    return e;
}

Record to_record(const VirtualSensor& e) {
    Record r = base("virtual_sensor", e.id);
    r["name"] = e.name;
    r["elements"] = e.element_ids;
    r["output"] = e.output_node_id;
    Record nodes = Record::array();
    for (const auto& n : e.nodes) {
        Record node;
        node["id"] = n.id;
        node["op"] = to_string(n.op);
        Record inputs = Record::array();
        for (const auto& in : n.inputs) {
            Record input;
            input["ref"] = in.ref;
            if (in.segment_id) input["segment"] = *in.segment_id;
            inputs.push_back(input);
        }
        node["inputs"] = inputs;
        nodes.push_back(node);
    }
    r["nodes"] = nodes;
    return r;
}

VirtualSensor virtual_sensor_from_record(const Record& r) {
    VirtualSensor e;
    e.id = field(r, "id").get<std::string>();
    e.name = field(r, "name").get<std::string>();
    e.element_ids = field(r, "elements").get<std::vector<std::string>>();
    e.output_node_id = field(r, "output").get<std::string>();
    for (const auto& node : field(r, "nodes")) {
        OperationNode n;
        n.id = field(node, "id").get<std::string>();
        n.op = operator_from_string(field(node, "op").get<std::string>());
        for (const auto& input : field(node, "inputs")) {
            OperationInput in;
            in.ref = field(input, "ref").get<std::string>();
            if (input.contains("segment")) in.segment_id = input["segment"].get<std::string>();
            n.inputs.push_back(std::move(in));
        }
        e.nodes.push_back(std::move(n));
    }
    return e;
}

Record to_record(const FailureMode& e) {
    Record r = base("failure_mode", e.id);
    r["name"] = e.name;
    r["element"] = e.element_id;
    r["P"] = e.prob_per_interval;
    r["S"] = e.severity;
    r["D"] = e.baseline_detection;
    r["CD"] = e.cost_detected;
    r["CU"] = e.cost_undetected;
    r["reference_interval"] = e.reference_interval;
    return r;
}

FailureMode failure_mode_from_record(const Record& r) {
    FailureMode e;
    e.id = field(r, "id").get<std::string>();
    e.name = field(r, "name").get<std::string>();
    e.element_id = field(r, "element").get<std::string>();
    e.prob_per_interval = field(r, "P").get<double>();
    e.severity = field(r, "S").get<double>();
    e.baseline_detection = field(r, "D").get<double>();
    e.cost_detected = field(r, "CD").get<double>();
    e.cost_undetected = field(r, "CU").get<double>();
    e.reference_interval = field(r, "reference_interval").get<std::string>();
    return e;
}

Record to_record(const Intervention& e) {
    Record r = base("intervention", e.id);
    r["failure_mode"] = e.failure_mode_id;
    r["kind"] = to_string(e.kind);
    r["cost"] = e.cost;
    r["description"] = e.description;
    return r;
}

Intervention intervention_from_record(const Record& r) {
    Intervention e;
    e.id = field(r, "id").get<std::string>();
    e.failure_mode_id = field(r, "failure_mode").get<std::string>();
    e.kind = intervention_kind_from_string(field(r, "kind").get<std::string>());
    e.cost = field(r, "cost").get<double>();
    e.description = field(r, "description").get<std::string>();
    return e;
}

Record to_record(const FailureIncident& e) {
    Record r = base("failure_incident", e.id);
    r["asset"] = e.asset_id;
    r["failure_mode"] = e.failure_mode_id;
    r["cycle_range"] = {e.first_cycle, e.last_cycle};
    r["status"] = to_string(e.status);
    return r;
}

FailureIncident failure_incident_from_record(const Record& r) {
    FailureIncident e;
    e.id = field(r, "id").get<std::string>();
    e.asset_id = field(r, "asset").get<std::string>();
    e.failure_mode_id = field(r, "failure_mode").get<std::string>();
    const auto& range = field(r, "cycle_range");
    e.first_cycle = range.at(0).get<long>();
    e.last_cycle = range.at(1).get<long>();
    e.status = incident_status_from_string(field(r, "status").get<std::string>());
    return e;
}

Record to_record(const DetectionMethod& e) {
    Record r = base("detection_method", e.id);
    r["kind"] = to_string(e.kind);
    r["input_signals"] = e.input_signal_ids;
    r["input_virtual_sensors"] = e.input_virtual_sensor_ids;
    r["scope_elements"] = e.scope_element_ids;
    r["scope_failure_modes"] = e.scope_failure_mode_ids;
    r["threshold"] = e.threshold;
    r["operating_cost"] = e.operating_cost;
    return r;
}

DetectionMethod detection_method_from_record(const Record& r) {
    DetectionMethod e;
    e.id = field(r, "id").get<std::string>();
    e.kind = detection_kind_from_string(field(r, "kind").get<std::string>());
    e.input_signal_ids = field(r, "input_signals").get<std::vector<std::string>>();
    e.input_virtual_sensor_ids = field(r, "input_virtual_sensors").get<std::vector<std::string>>();
    e.scope_element_ids = field(r, "scope_elements").get<std::vector<std::string>>();
    e.scope_failure_mode_ids = field(r, "scope_failure_modes").get<std::vector<std::string>>();
    e.threshold = field(r, "threshold").get<double>();
    e.operating_cost = field(r, "operating_cost").get<double>();
    return e;
}

Record to_record(const CycleLabel& e) {
    Record r = base("cycle_label", e.id);
    r["cycle_index"] = e.cycle_index;
    r["condition_values"] = e.condition_values;
    r["stable"] = e.stable;
    r["healthy"] = e.healthy;
    r["candidate_modes"] = e.candidate_mode_ids;
    return r;
}

CycleLabel cycle_label_from_record(const Record& r) {
    CycleLabel e;
    e.id = field(r, "id").get<std::string>();
    e.cycle_index = field(r, "cycle_index").get<long>();
    e.condition_values = field(r, "condition_values").get<std::vector<double>>();
    e.stable = field(r, "stable").get<bool>();
    e.healthy = field(r, "healthy").get<bool>();
    e.candidate_mode_ids = field(r, "candidate_modes").get<std::vector<std::string>>();
    return e;
}

}  // namespace deepfmea
