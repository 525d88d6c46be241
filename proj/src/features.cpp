#include "deepfmea/features.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "deepfmea/csv.hpp"
#include "deepfmea/util.hpp"

namespace deepfmea {

double Value::as_scalar() const {
    if (!scalar) fail("shape-mismatch", "expected a scalar value");
    return samples[0];
}

Value Value::make_vector(std::vector<double> samples, std::vector<double> offsets) {
    if (samples.size() != offsets.size())
        fail("shape-mismatch", "sample/offset length mismatch");
    if (samples.empty()) fail("empty-input", "vector value needs at least one sample");
    return Value{false, std::move(samples), std::move(offsets)};
}

Value restrict_to_segment(const Measurement& m, const Segment& segment) {
    std::vector<double> samples;
    std::vector<double> offsets;
    for (std::size_t i = 0; i < m.values.size(); ++i) {
        double t = m.start_offset_s + static_cast<double>(i) / m.sampling_rate_hz;
        if (t >= segment.start_s && t <= segment.end_s) {
            samples.push_back(m.values[i]);
            offsets.push_back(t);
        }
    }
    if (samples.empty())
        fail("empty-window", "segment '" + segment.id + "' [" + format_double(segment.start_s) +
                                 ", " + format_double(segment.end_s) +
                                 "] contains no sample of signal '" + m.signal_id + "'");
    return Value::make_vector(std::move(samples), std::move(offsets));
}

Value restrict_value(const Value& v, const Segment& segment) {
    if (v.scalar)
        fail("shape-mismatch", "cannot restrict a scalar value to segment '" + segment.id + "'");
    std::vector<double> samples;
    std::vector<double> offsets;
    for (std::size_t i = 0; i < v.samples.size(); ++i) {
        if (v.offsets_s[i] >= segment.start_s && v.offsets_s[i] <= segment.end_s) {
            samples.push_back(v.samples[i]);
            offsets.push_back(v.offsets_s[i]);
        }
    }
    if (samples.empty())
        fail("empty-window", "segment '" + segment.id + "' contains no sample of the input value");
    return Value::make_vector(std::move(samples), std::move(offsets));
}

namespace {

// Elementwise combination with scalar broadcasting; two vectors must agree in
// length (resampling across rates is deliberately not implicit).
template <typename F>
Value elementwise(const Value& a, const Value& b, F&& f) {
    if (a.scalar && b.scalar) return Value::make_scalar(f(a.samples[0], b.samples[0]));
    if (a.scalar) {
        std::vector<double> out(b.samples.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(a.samples[0], b.samples[i]);
        return Value::make_vector(std::move(out), b.offsets_s);
    }
    if (b.scalar) {
        std::vector<double> out(a.samples.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(a.samples[i], b.samples[0]);
        return Value::make_vector(std::move(out), a.offsets_s);
    }
    if (a.samples.size() != b.samples.size())
        fail("shape-mismatch", "vector lengths differ: " + std::to_string(a.samples.size()) +
                                   " vs " + std::to_string(b.samples.size()) +
                                   " (downsample explicitly before combining)");
    std::vector<double> out(a.samples.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(a.samples[i], b.samples[i]);
    return Value::make_vector(std::move(out), a.offsets_s);
}

double median(std::vector<double> v) {
    if (v.empty()) fail("empty-input", "median of empty vector");
    std::sort(v.begin(), v.end());
    std::size_t mid = v.size() / 2;
    if (v.size() % 2 == 1) return v[mid];
    return (v[mid - 1] + v[mid]) / 2.0;
}

double mean_of(const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

}  // namespace

Value apply_operator(Operator op, const std::vector<Value>& inputs) {
    if (inputs.size() != operator_arity(op))
        fail("arity", std::string(to_string(op)) + " takes " +
                          std::to_string(operator_arity(op)) + " input(s), got " +
                          std::to_string(inputs.size()));

    switch (op) {
        case Operator::DIFF:
            return elementwise(inputs[0], inputs[1], [](double a, double b) { return a - b; });
        case Operator::DIV:
            return elementwise(inputs[0], inputs[1], [](double a, double b) {
                if (std::fabs(b) < kDivEpsilon)
                    fail("division", "divisor magnitude below " + format_double(kDivEpsilon));
                return a / b;
            });
        case Operator::ABS: {
            const Value& a = inputs[0];
            std::vector<double> out(a.samples.size());
            for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::fabs(a.samples[i]);
            if (a.scalar) return Value::make_scalar(out[0]);
            return Value::make_vector(std::move(out), a.offsets_s);
        }
        case Operator::ME:
            return Value::make_scalar(median(inputs[0].samples));
        case Operator::MEAN:
            return Value::make_scalar(mean_of(inputs[0].samples));
        case Operator::SUM: {
            double sum = 0.0;
            for (double x : inputs[0].samples) sum += x;
            return Value::make_scalar(sum);
        }
        case Operator::MIN:
            return Value::make_scalar(*std::min_element(inputs[0].samples.begin(), inputs[0].samples.end()));
        case Operator::MAX:
            return Value::make_scalar(*std::max_element(inputs[0].samples.begin(), inputs[0].samples.end()));
        case Operator::STD: {
            const auto& v = inputs[0].samples;
            double mu = mean_of(v);
            double acc = 0.0;
            for (double x : v) acc += (x - mu) * (x - mu);
            return Value::make_scalar(std::sqrt(acc / static_cast<double>(v.size())));
        }
        case Operator::SLOPE: {
            // Least-squares line slope over the sample index.
            const auto& v = inputs[0].samples;
            if (v.size() < 2) fail("slope-undefined", "SLOPE needs at least 2 samples");
            double n = static_cast<double>(v.size());
            double ibar = (n - 1.0) / 2.0;
            double xbar = mean_of(v);
            double num = 0.0, den = 0.0;
            for (std::size_t i = 0; i < v.size(); ++i) {
                double di = static_cast<double>(i) - ibar;
                num += di * (v[i] - xbar);
                den += di * di;
            }
            return Value::make_scalar(num / den);
        }
    }
    fail("internal", "unhandled operator");
}

std::vector<Id> topological_order(const VirtualSensor& vs) {
    std::map<Id, const OperationNode*> nodes;
    for (const auto& n : vs.nodes) {
        if (!nodes.emplace(n.id, &n).second)
            fail("duplicate-id", "node id '" + n.id + "' repeated in virtual sensor '" + vs.id + "'");
    }

    std::map<Id, std::vector<Id>> dependents;  // node -> nodes that consume it
    std::map<Id, std::size_t> pending;         // node -> unresolved local inputs
    for (const auto& n : vs.nodes) {
        std::size_t count = 0;
        for (const auto& in : n.inputs) {
            if (nodes.count(in.ref)) {
                dependents[in.ref].push_back(n.id);
                ++count;
            }
        }
        pending[n.id] = count;
    }

    std::vector<Id> order;
    order.reserve(vs.nodes.size());
    std::vector<Id> ready;
    for (const auto& n : vs.nodes)
        if (pending[n.id] == 0) ready.push_back(n.id);

    while (!ready.empty()) {
        Id cur = ready.back();
        ready.pop_back();
        order.push_back(cur);
        for (const auto& next : dependents[cur]) {
            if (--pending[next] == 0) ready.push_back(next);
        }
    }

    if (order.size() != vs.nodes.size()) {
        // Recover one concrete cycle for the error message.
        std::set<Id> remaining;
        for (const auto& [id, cnt] : pending)
            if (cnt > 0) remaining.insert(id);
        Id start = *remaining.begin();
        std::vector<Id> walk{start};
        std::set<Id> seen{start};
        Id cur = start;
        while (true) {
            const OperationNode* node = nodes[cur];
            Id next;
            for (const auto& in : node->inputs) {
                if (remaining.count(in.ref)) {
                    next = in.ref;
                    break;
                }
            }
            if (seen.count(next)) {
                walk.push_back(next);
                break;
            }
            walk.push_back(next);
            seen.insert(next);
            cur = next;
        }
        std::string cycle;
        for (const auto& id : walk) {
            if (!cycle.empty()) cycle += " -> ";
            cycle += id;
        }
        fail("cycle", "virtual sensor '" + vs.id + "' graph has a cycle: " + cycle);
    }
    return order;
}

EvalModel eval_model(const Snapshot& snapshot) {
    EvalModel m;
    m.signals = &snapshot.entities().signals;
    m.segments = &snapshot.entities().segments;
    m.virtual_sensors = &snapshot.entities().virtual_sensors;
    return m;
}

Value GraphEvaluator::evaluate(const Id& virtual_sensor_id) {
    auto it = model_.virtual_sensors->find(virtual_sensor_id);
    if (it == model_.virtual_sensors->end())
        fail("unknown-id", "unknown virtual sensor '" + virtual_sensor_id + "'");
    return evaluate(it->second);
}

Value GraphEvaluator::evaluate(const VirtualSensor& vs) {
    auto memo = vs_memo_.find(vs.id);
    if (memo != vs_memo_.end()) return memo->second;
    if (!in_progress_.insert(vs.id).second)
        fail("cycle", "virtual sensor '" + vs.id + "' participates in a reference cycle");

    std::map<Id, const OperationNode*> nodes;
    for (const auto& n : vs.nodes) nodes[n.id] = &n;

    std::map<Id, Value> node_values;
    for (const auto& node_id : topological_order(vs)) {
        const OperationNode& node = *nodes[node_id];
        std::vector<Value> inputs;
        inputs.reserve(node.inputs.size());
        for (const auto& in : node.inputs) inputs.push_back(resolve_input(vs, in, node_values));
        try {
            node_values.emplace(node_id, apply_operator(node.op, inputs));
        } catch (const Error& e) {
            in_progress_.erase(vs.id);
            throw Error(e.code(), std::string(e.what()) + " [virtual sensor '" + vs.id +
                                      "', node '" + node_id + "']");
        }
    }

    auto out = node_values.find(vs.output_node_id);
    if (out == node_values.end())
        fail("unknown-id", "output node '" + vs.output_node_id + "' not found in virtual sensor '" +
                               vs.id + "'");
    in_progress_.erase(vs.id);
    vs_memo_.emplace(vs.id, out->second);
    return out->second;
}

Value GraphEvaluator::resolve_input(const VirtualSensor& vs, const OperationInput& input,
                                    const std::map<Id, Value>& node_values) {
    if (auto it = node_values.find(input.ref); it != node_values.end()) {
        if (input.segment_id) {
            auto seg = model_.segments->find(*input.segment_id);
            if (seg == model_.segments->end())
                fail("unknown-id", "unknown segment '" + *input.segment_id + "'");
            return restrict_value(it->second, seg->second);
        }
        return it->second;
    }
    if (auto sig = model_.signals->find(input.ref); sig != model_.signals->end()) {
        if (!input.segment_id)
            fail("missing-segment",
                 "signal input '" + input.ref + "' in virtual sensor '" + vs.id +
                     "' needs a segment");
        auto seg = model_.segments->find(*input.segment_id);
        if (seg == model_.segments->end())
            fail("unknown-id", "unknown segment '" + *input.segment_id + "'");
        Measurement m = source_.measurement(input.ref, cycle_);
        return restrict_to_segment(m, seg->second);
    }
    if (auto nested = model_.virtual_sensors->find(input.ref); nested != model_.virtual_sensors->end()) {
        Value v = evaluate(nested->second);
        if (input.segment_id) {
            auto seg = model_.segments->find(*input.segment_id);
            if (seg == model_.segments->end())
                fail("unknown-id", "unknown segment '" + *input.segment_id + "'");
            return restrict_value(v, seg->second);
        }
        return v;
    }
    fail("unknown-id", "input '" + input.ref + "' of virtual sensor '" + vs.id +
                           "' resolves to no node, signal, or virtual sensor");
}

std::size_t FeatureMatrix::column_of(const Id& sensor_id) const {
    for (std::size_t i = 0; i < sensor_ids.size(); ++i)
        if (sensor_ids[i] == sensor_id) return i;
    fail("unknown-id", "sensor '" + sensor_id + "' not in feature matrix");
}

FeatureMatrix compute_feature_matrix(const Snapshot& snapshot, const Id& asset_id,
                                     const std::vector<Id>& virtual_sensor_ids,
                                     const std::vector<long>& cycles) {
    FeatureMatrix fm;
    fm.cycles = cycles;
    fm.provenance = snapshot.meta().spec_hash;
    for (const auto& id : virtual_sensor_ids) {
        const auto& vs = snapshot.virtual_sensor(id);
        fm.sensor_ids.push_back(vs.id);
        fm.sensor_names.push_back(vs.name);
    }
    fm.values = Matrix::zeros(cycles.size(), virtual_sensor_ids.size());

    EvalModel model = eval_model(snapshot);
    SnapshotMeasurementSource source(snapshot, asset_id);
    for (std::size_t r = 0; r < cycles.size(); ++r) {
        GraphEvaluator evaluator(model, source, cycles[r]);
        for (std::size_t c = 0; c < virtual_sensor_ids.size(); ++c) {
            try {
                Value v = evaluator.evaluate(virtual_sensor_ids[c]);
                if (!v.scalar)
                    fail("vector-valued", "virtual sensor '" + virtual_sensor_ids[c] +
                                              "' is vector-valued and cannot be a feature column");
                fm.values.at(r, c) = v.as_scalar();
            } catch (const Error& e) {
                if (e.code() == "vector-valued") throw;
                fm.values.at(r, c) = std::numeric_limits<double>::quiet_NaN();
                fm.warnings.push_back("cycle " + std::to_string(cycles[r]) + ", sensor '" +
                                      virtual_sensor_ids[c] + "': " + e.what());
            }
        }
    }

    // A column with no finite cell carries no information and violates the
    // matrix contract.
    for (std::size_t c = 0; c < fm.sensor_ids.size(); ++c) {
        bool any_finite = fm.cycles.empty();
        for (std::size_t r = 0; r < fm.cycles.size() && !any_finite; ++r)
            any_finite = std::isfinite(fm.values.at(r, c));
        if (!any_finite)
            fail("all-non-finite", "feature column '" + fm.sensor_ids[c] +
                                       "' evaluated to no finite value on any cycle");
    }
    return fm;
}

std::string feature_matrix_to_csv(const FeatureMatrix& fm) {
    CsvWriter csv;
    csv.field("cycle");
    for (const auto& name : fm.sensor_names) csv.field(name);
    csv.end_row();
    for (std::size_t r = 0; r < fm.cycles.size(); ++r) {
        csv.field(fm.cycles[r]);
        for (std::size_t c = 0; c < fm.sensor_ids.size(); ++c) csv.field(fm.values.at(r, c));
        csv.end_row();
    }
    return csv.str();
}

std::vector<Id> default_feature_sensors(const Snapshot& snapshot) {
    std::vector<Id> from_methods;
    for (const auto& [id, method] : snapshot.entities().detection_methods)
        for (const auto& vs_id : method.input_virtual_sensor_ids)
            if (std::find(from_methods.begin(), from_methods.end(), vs_id) == from_methods.end())
                from_methods.push_back(vs_id);
    if (!from_methods.empty()) {
        std::sort(from_methods.begin(), from_methods.end());
        return from_methods;
    }
    std::vector<Id> all;
    for (const auto& [id, vs] : snapshot.entities().virtual_sensors) all.push_back(id);
    return all;
}

}  // namespace deepfmea
