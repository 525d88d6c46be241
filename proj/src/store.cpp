#include "deepfmea/store.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "deepfmea/features.hpp"
#include "deepfmea/records.hpp"
#include "deepfmea/util.hpp"

namespace deepfmea {

namespace {

constexpr const char* kCollectionNames[] = {
    "system_elements", "assets",        "signals",           "segments",
    "virtual_sensors", "failure_modes", "interventions",     "failure_incidents",
    "detection_methods", "cycle_labels",
};

template <typename T>
bool contains(const std::map<Id, T>& m, const Id& id) {
    return m.count(id) > 0;
}

}  // namespace

std::string serialize_matrix(const Matrix& m) {
    std::string out;
    out.reserve(m.rows * m.cols * 12);
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (c) out.push_back('\t');
            out.append(format_double(m.at(r, c)));
        }
        out.push_back('\n');
    }
    return out;
}

Matrix parse_matrix(const std::string& text, const std::string& origin) {
    Matrix m;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line(text.data() + pos, (eol == std::string::npos ? text.size() : eol) - pos);
        pos = (eol == std::string::npos) ? text.size() : eol + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        auto fields = split_view(line, '\t');
        if (m.cols == 0) m.cols = fields.size();
        if (fields.size() != m.cols)
            fail("shape-mismatch", origin + ": row " + std::to_string(m.rows + 1) + " has " +
                                       std::to_string(fields.size()) + " values, expected " +
                                       std::to_string(m.cols));
        for (auto f : fields) m.data.push_back(parse_double(f));
        ++m.rows;
    }
    return m;
}

const Id& entity_id(const Entity& e) {
    return std::visit([](const auto& v) -> const Id& { return v.id; }, e);
}

const char* entity_type(const Entity& e) {
    return std::visit(
        [](const auto& v) -> const char* {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, SystemElement>) return "system_element";
            else if constexpr (std::is_same_v<T, Asset>) return "asset";
            else if constexpr (std::is_same_v<T, Signal>) return "signal";
            else if constexpr (std::is_same_v<T, Segment>) return "segment";
            else if constexpr (std::is_same_v<T, VirtualSensor>) return "virtual_sensor";
            else if constexpr (std::is_same_v<T, FailureMode>) return "failure_mode";
            else if constexpr (std::is_same_v<T, Intervention>) return "intervention";
            else if constexpr (std::is_same_v<T, FailureIncident>) return "failure_incident";
            else if constexpr (std::is_same_v<T, DetectionMethod>) return "detection_method";
            else return "cycle_label";
        },
        e);
}

namespace {

struct IntegrityChecker {
    const EntityCollections& c;
    std::vector<IntegrityViolation> out;

    void flag(std::string code, std::string message) {
        out.push_back({std::move(code), std::move(message)});
    }

    void require(bool present, const Id& target, const std::string& owner) {
        if (!present)
            flag("dangling-reference", owner + " references missing id '" + target + "'");
    }

    void run(const std::vector<Id>& measured_signal_ids) {
        auto tree = validate_hierarchy([&] {
            std::vector<SystemElement> v;
            for (const auto& [id, e] : c.elements) v.push_back(e);
            return v;
        }());
        if (!tree.ok)
            for (const auto& v : tree.violations)
                flag(v.rule, "system element hierarchy: " + v.detail);

        Id root_id;
        for (const auto& [id, e] : c.elements)
            if (!e.parent_id) root_id = id;

        for (const auto& [id, a] : c.assets) {
            require(contains(c.elements, a.root_element_id), a.root_element_id, "asset '" + id + "'");
            if (contains(c.elements, a.root_element_id) && a.root_element_id != root_id)
                flag("not-root", "asset '" + id + "' must reference the tree root '" + root_id + "'");
        }

        for (const auto& [id, s] : c.signals) {
            if (s.element_ids.empty())
                flag("invariant", "signal '" + id + "' references no system element");
            for (const auto& eid : s.element_ids)
                require(contains(c.elements, eid), eid, "signal '" + id + "'");
            if (!(s.sampling_rate_hz > 0.0))
                flag("invariant", "signal '" + id + "' sampling rate must be positive");
        }

        for (const auto& [id, s] : c.segments) {
            if (!(s.start_s >= 0.0 && s.start_s < s.end_s))
                flag("invariant", "segment '" + id + "' window must satisfy 0 <= start < end");
        }

        for (const auto& [id, vs] : c.virtual_sensors) check_virtual_sensor(vs);

        for (const auto& [id, fm] : c.failure_modes) {
            require(contains(c.elements, fm.element_id), fm.element_id, "failure mode '" + id + "'");
            if (fm.prob_per_interval < 0.0 || fm.prob_per_interval > 1.0)
                flag("invariant", "failure mode '" + id + "': P must lie in [0,1]");
            if (fm.baseline_detection < 0.0 || fm.baseline_detection > 1.0)
                flag("invariant", "failure mode '" + id + "': D must lie in [0,1]");
            if (fm.severity < 0.0 || fm.cost_detected < 0.0 || fm.cost_undetected < 0.0)
                flag("invariant", "failure mode '" + id + "': S, CD, CU must be non-negative");
        }

        for (const auto& [id, iv] : c.interventions) {
            require(contains(c.failure_modes, iv.failure_mode_id), iv.failure_mode_id,
                    "intervention '" + id + "'");
            if (iv.cost < 0.0) flag("invariant", "intervention '" + id + "' cost must be non-negative");
        }

        for (const auto& [id, fi] : c.failure_incidents) {
            require(contains(c.assets, fi.asset_id), fi.asset_id, "failure incident '" + id + "'");
            require(contains(c.failure_modes, fi.failure_mode_id), fi.failure_mode_id,
                    "failure incident '" + id + "'");
            if (fi.first_cycle > fi.last_cycle)
                flag("invariant", "failure incident '" + id + "' cycle range is reversed");
        }

        for (const auto& [id, dm] : c.detection_methods) {
            for (const auto& sid : dm.input_signal_ids)
                require(contains(c.signals, sid), sid, "detection method '" + id + "'");
            for (const auto& vid : dm.input_virtual_sensor_ids)
                require(contains(c.virtual_sensors, vid), vid, "detection method '" + id + "'");
            bool monitoring = dm.kind == DetectionKind::monitoring;
            if (monitoring && (dm.scope_element_ids.empty() || !dm.scope_failure_mode_ids.empty()))
                flag("invariant", "monitoring method '" + id + "' must scope system elements only");
            if (!monitoring && (dm.scope_failure_mode_ids.empty() || !dm.scope_element_ids.empty()))
                flag("invariant",
                     "diagnostic/prognostic method '" + id + "' must scope failure modes only");
            for (const auto& eid : dm.scope_element_ids)
                require(contains(c.elements, eid), eid, "detection method '" + id + "'");
            for (const auto& fid : dm.scope_failure_mode_ids)
                require(contains(c.failure_modes, fid), fid, "detection method '" + id + "'");
            if (dm.operating_cost < 0.0)
                flag("invariant", "detection method '" + id + "' operating cost must be non-negative");
        }

        for (const auto& [id, label] : c.cycle_labels) {
            if (label.cycle_index < 0)
                flag("invariant", "cycle label '" + id + "' cycle index must be non-negative");
            for (const auto& fid : label.candidate_mode_ids)
                require(contains(c.failure_modes, fid), fid, "cycle label '" + id + "'");
        }

        for (const auto& sid : measured_signal_ids)
            require(contains(c.signals, sid), sid, "measurement matrix");
    }

    void check_virtual_sensor(const VirtualSensor& vs) {
        const std::string owner = "virtual sensor '" + vs.id + "'";
        if (vs.element_ids.empty()) flag("invariant", owner + " references no system element");
        for (const auto& eid : vs.element_ids) require(contains(c.elements, eid), eid, owner);
        if (vs.nodes.empty()) {
            flag("invariant", owner + " has no operation nodes");
            return;
        }

        std::set<Id> node_ids;
        for (const auto& n : vs.nodes) {
            if (!node_ids.insert(n.id).second)
                flag("duplicate-id", owner + " repeats node id '" + n.id + "'");
        }
        if (!node_ids.count(vs.output_node_id))
            flag("invariant", owner + " output node '" + vs.output_node_id + "' does not exist");

        for (const auto& n : vs.nodes) {
            if (n.inputs.size() != operator_arity(n.op))
                flag("arity", owner + " node '" + n.id + "': " + to_string(n.op) + " takes " +
                                  std::to_string(operator_arity(n.op)) + " input(s)");
            for (const auto& in : n.inputs) {
                bool is_node = node_ids.count(in.ref) > 0;
                bool is_signal = contains(c.signals, in.ref);
                bool is_vs = contains(c.virtual_sensors, in.ref) && in.ref != vs.id;
                if (in.ref == vs.id)
                    flag("cycle", owner + " node '" + n.id + "' references its own sensor");
                if (!is_node && !is_signal && !is_vs)
                    flag("dangling-reference", owner + " node '" + n.id + "' references missing id '" +
                                                   in.ref + "'");
                if (is_signal && !in.segment_id)
                    flag("invariant", owner + " node '" + n.id + "': signal input '" + in.ref +
                                          "' needs a segment");
                if (is_node && in.segment_id)
                    flag("invariant", owner + " node '" + n.id + "': node input '" + in.ref +
                                          "' cannot carry a segment");
                if (in.segment_id && !contains(c.segments, *in.segment_id))
                    flag("dangling-reference",
                         owner + " node '" + n.id + "' references missing id '" + *in.segment_id + "'");
            }
        }

        try {
            topological_order(vs);
        } catch (const Error& e) {
            flag(e.code(), e.what());
        }

        // Cross-sensor references must stay acyclic as well; walk them.
        std::set<Id> visiting{vs.id}, done;
        if (has_vs_cycle(vs, visiting, done))
            flag("cycle", owner + " participates in a cross-sensor reference cycle");
    }

    bool has_vs_cycle(const VirtualSensor& vs, std::set<Id>& visiting, std::set<Id>& done) {
        for (const auto& n : vs.nodes) {
            for (const auto& in : n.inputs) {
                auto it = c.virtual_sensors.find(in.ref);
                if (it == c.virtual_sensors.end() || in.ref == vs.id) continue;
                if (done.count(in.ref)) continue;
                if (visiting.count(in.ref)) return true;
                visiting.insert(in.ref);
                if (has_vs_cycle(it->second, visiting, done)) return true;
                visiting.erase(in.ref);
                done.insert(in.ref);
            }
        }
        return false;
    }
};

}  // namespace

std::vector<IntegrityViolation> check_integrity(const EntityCollections& c,
                                                const std::vector<Id>& measured_signal_ids) {
    IntegrityChecker checker{c, {}};
    checker.run(measured_signal_ids);
    return checker.out;
}

// ---------------------------------------------------------------------------
// Snapshot

struct Snapshot::MatrixPool {
    std::filesystem::path measurements_dir;
    mutable std::mutex mutex;
    mutable std::map<Id, std::shared_ptr<const Matrix>> loaded;
};

std::vector<SystemElement> Snapshot::element_list() const {
    std::vector<SystemElement> v;
    for (const auto& [id, e] : entities_->elements) v.push_back(e);
    return v;
}

std::vector<Signal> Snapshot::signal_list() const {
    std::vector<Signal> v;
    for (const auto& [id, e] : entities_->signals) v.push_back(e);
    return v;
}

Hierarchy Snapshot::hierarchy() const { return Hierarchy(element_list()); }

bool Snapshot::has_measurements(const Id& signal_id) const {
    std::lock_guard<std::mutex> lock(pool_->mutex);
    if (pool_->loaded.count(signal_id)) return true;
    return std::filesystem::exists(pool_->measurements_dir / (signal_id + ".mat"));
}

std::shared_ptr<const Matrix> Snapshot::measurements(const Id& signal_id) const {
    std::lock_guard<std::mutex> lock(pool_->mutex);
    auto it = pool_->loaded.find(signal_id);
    if (it != pool_->loaded.end()) return it->second;
    auto path = pool_->measurements_dir / (signal_id + ".mat");
    if (!std::filesystem::exists(path))
        fail("missing-measurement", "no measurement matrix stored for signal '" + signal_id + "'");
    auto matrix = std::make_shared<Matrix>(parse_matrix(read_file(path), path.string()));
    pool_->loaded.emplace(signal_id, matrix);
    return matrix;
}

std::vector<Id> Snapshot::measured_signal_ids() const {
    std::set<Id> ids;
    {
        std::lock_guard<std::mutex> lock(pool_->mutex);
        for (const auto& [id, m] : pool_->loaded) ids.insert(id);
    }
    if (std::filesystem::exists(pool_->measurements_dir)) {
        for (const auto& entry : std::filesystem::directory_iterator(pool_->measurements_dir)) {
            if (entry.path().extension() == ".mat") ids.insert(entry.path().stem().string());
        }
    }
    return std::vector<Id>(ids.begin(), ids.end());
}

Measurement Snapshot::measurement(const Id& asset_id, const Id& signal_id, long cycle_index) const {
    const Signal& sig = signal(signal_id);
    auto matrix = measurements(signal_id);
    if (cycle_index < 0 || static_cast<std::size_t>(cycle_index) >= matrix->rows)
        fail("missing-measurement", "signal '" + signal_id + "' has no cycle " +
                                        std::to_string(cycle_index));
    auto row = matrix->row(static_cast<std::size_t>(cycle_index));
    Measurement m;
    m.asset_id = asset_id;
    m.signal_id = signal_id;
    m.cycle_index = cycle_index;
    m.start_offset_s = 0.0;
    m.sampling_rate_hz = sig.sampling_rate_hz;
    m.duration_s = static_cast<double>(matrix->cols) / sig.sampling_rate_hz;
    m.values.assign(row.begin(), row.end());
    return m;
}

namespace {

template <typename T>
const T& find_or_fail(const std::map<Id, T>& m, const Id& id, const char* what) {
    auto it = m.find(id);
    if (it == m.end()) fail("unknown-id", std::string("unknown ") + what + " '" + id + "'");
    return it->second;
}

}  // namespace

const Signal& Snapshot::signal(const Id& id) const {
    return find_or_fail(entities_->signals, id, "signal");
}
const Segment& Snapshot::segment(const Id& id) const {
    return find_or_fail(entities_->segments, id, "segment");
}
const VirtualSensor& Snapshot::virtual_sensor(const Id& id) const {
    return find_or_fail(entities_->virtual_sensors, id, "virtual sensor");
}
const DetectionMethod& Snapshot::detection_method(const Id& id) const {
    return find_or_fail(entities_->detection_methods, id, "detection method");
}
const FailureMode& Snapshot::failure_mode(const Id& id) const {
    return find_or_fail(entities_->failure_modes, id, "failure mode");
}

std::vector<CycleLabel> Snapshot::sorted_labels() const {
    std::vector<CycleLabel> labels;
    for (const auto& [id, l] : entities_->cycle_labels) labels.push_back(l);
    std::sort(labels.begin(), labels.end(),
              [](const CycleLabel& a, const CycleLabel& b) { return a.cycle_index < b.cycle_index; });
    return labels;
}

// ---------------------------------------------------------------------------
// Store

Store::Store(std::filesystem::path root_dir) : root_dir_(std::move(root_dir)) {
    std::filesystem::create_directories(root_dir_ / "entities");
    std::filesystem::create_directories(root_dir_ / "measurements");
    load();
}

namespace {

Entity entity_from_record(const Record& r) {
    std::string type = r.at("type").get<std::string>();
    if (type == "system_element") return system_element_from_record(r);
    if (type == "asset") return asset_from_record(r);
    if (type == "signal") return signal_from_record(r);
    if (type == "segment") return segment_from_record(r);
    if (type == "virtual_sensor") return virtual_sensor_from_record(r);
    if (type == "failure_mode") return failure_mode_from_record(r);
    if (type == "intervention") return intervention_from_record(r);
    if (type == "failure_incident") return failure_incident_from_record(r);
    if (type == "detection_method") return detection_method_from_record(r);
    if (type == "cycle_label") return cycle_label_from_record(r);
    fail("parse", "unknown record type '" + type + "'");
}

void insert_entity(EntityCollections& c, const Entity& e, bool replace) {
    const Id& id = entity_id(e);
    bool exists = contains(c.elements, id) || contains(c.assets, id) || contains(c.signals, id) ||
                  contains(c.segments, id) || contains(c.virtual_sensors, id) ||
                  contains(c.failure_modes, id) || contains(c.interventions, id) ||
                  contains(c.failure_incidents, id) || contains(c.detection_methods, id) ||
                  contains(c.cycle_labels, id);
    if (exists && !replace)
        fail("duplicate-id", std::string("id '") + id + "' already stored");
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, SystemElement>) c.elements[id] = v;
            else if constexpr (std::is_same_v<T, Asset>) c.assets[id] = v;
            else if constexpr (std::is_same_v<T, Signal>) c.signals[id] = v;
            else if constexpr (std::is_same_v<T, Segment>) c.segments[id] = v;
            else if constexpr (std::is_same_v<T, VirtualSensor>) c.virtual_sensors[id] = v;
            else if constexpr (std::is_same_v<T, FailureMode>) c.failure_modes[id] = v;
            else if constexpr (std::is_same_v<T, Intervention>) c.interventions[id] = v;
            else if constexpr (std::is_same_v<T, FailureIncident>) c.failure_incidents[id] = v;
            else if constexpr (std::is_same_v<T, DetectionMethod>) c.detection_methods[id] = v;
            else c.cycle_labels[id] = v;
        },
        e);
}

template <typename T, typename FromRecord>
void load_collection(const std::filesystem::path& file, std::map<Id, T>& into, FromRecord&& parse) {
    if (!std::filesystem::exists(file)) return;
    std::string content = read_file(file);
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < content.size()) {
        std::size_t eol = content.find('\n', pos);
        std::string line = content.substr(pos, (eol == std::string::npos ? content.size() : eol) - pos);
        pos = (eol == std::string::npos) ? content.size() : eol + 1;
        ++line_no;
        if (line.empty()) continue;
        Record r;
        try {
            r = Record::parse(line);
        } catch (const nlohmann::json::exception& e) {
            fail("parse", file.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
        T entity = parse(r);
        into[entity.id] = std::move(entity);
    }
}

template <typename T>
std::string dump_collection(const std::map<Id, T>& m) {
    std::string out;
    for (const auto& [id, e] : m) {
        out += to_record(e).dump();
        out.push_back('\n');
    }
    return out;
}

}  // namespace

void Store::load() {
    auto dir = root_dir_ / "entities";
    load_collection(dir / "system_elements.records", collections_.elements, system_element_from_record);
    load_collection(dir / "assets.records", collections_.assets, asset_from_record);
    load_collection(dir / "signals.records", collections_.signals, signal_from_record);
    load_collection(dir / "segments.records", collections_.segments, segment_from_record);
    load_collection(dir / "virtual_sensors.records", collections_.virtual_sensors,
                    virtual_sensor_from_record);
    load_collection(dir / "failure_modes.records", collections_.failure_modes,
                    failure_mode_from_record);
    load_collection(dir / "interventions.records", collections_.interventions,
                    intervention_from_record);
    load_collection(dir / "failure_incidents.records", collections_.failure_incidents,
                    failure_incident_from_record);
    load_collection(dir / "detection_methods.records", collections_.detection_methods,
                    detection_method_from_record);
    load_collection(dir / "cycle_labels.records", collections_.cycle_labels, cycle_label_from_record);

    auto meta_path = root_dir_ / "meta.json";
    if (std::filesystem::exists(meta_path)) {
        auto meta = nlohmann::json::parse(read_file(meta_path));
        meta_.cycle_duration_s = meta.value("cycle_duration_s", 0.0);
        meta_.spec_hash = meta.value("spec_hash", "");
    }
}

void Store::save_collection(const char* name) {
    std::string content;
    std::string n(name);
    if (n == "system_elements") content = dump_collection(collections_.elements);
    else if (n == "assets") content = dump_collection(collections_.assets);
    else if (n == "signals") content = dump_collection(collections_.signals);
    else if (n == "segments") content = dump_collection(collections_.segments);
    else if (n == "virtual_sensors") content = dump_collection(collections_.virtual_sensors);
    else if (n == "failure_modes") content = dump_collection(collections_.failure_modes);
    else if (n == "interventions") content = dump_collection(collections_.interventions);
    else if (n == "failure_incidents") content = dump_collection(collections_.failure_incidents);
    else if (n == "detection_methods") content = dump_collection(collections_.detection_methods);
    else content = dump_collection(collections_.cycle_labels);

    auto path = root_dir_ / "entities" / (n + ".records");
    if (content.empty()) {
        std::filesystem::remove(path);
    } else {
        write_file_atomic(path, content);
    }
}

void Store::commit(EntityCollections staged, const std::vector<const char*>& touched) {
    auto violations = check_integrity(staged, measured_ids());
    if (!violations.empty()) {
        std::string message;
        for (const auto& v : violations) {
            if (!message.empty()) message += "; ";
            message += v.message;
        }
        throw Error(violations.front().code, message);
    }
    collections_ = std::move(staged);
    for (const char* name : touched) save_collection(name);
}

namespace {

const char* collection_file_of(const Entity& e) {
    std::string type = entity_type(e);
    for (const char* name : kCollectionNames) {
        // collection files use the plural form of the record type
        if (std::string(name) == type + "s") return name;
    }
    fail("internal", "no collection for type '" + type + "'");
}

}  // namespace

Id Store::put(const Entity& entity) {
    EntityCollections staged = collections_;
    insert_entity(staged, entity, /*replace=*/false);
    commit(std::move(staged), {collection_file_of(entity)});
    return entity_id(entity);
}

void Store::upsert_bundle(const std::vector<Entity>& entities) {
    EntityCollections staged = collections_;
    for (const auto& e : entities) insert_entity(staged, e, /*replace=*/true);
    std::vector<const char*> touched(std::begin(kCollectionNames), std::end(kCollectionNames));
    commit(std::move(staged), touched);
}

void Store::remove(const Id& id) {
    EntityCollections staged = collections_;
    bool found = staged.elements.erase(id) || staged.assets.erase(id) || staged.signals.erase(id) ||
                 staged.segments.erase(id) || staged.virtual_sensors.erase(id) ||
                 staged.failure_modes.erase(id) || staged.interventions.erase(id) ||
                 staged.failure_incidents.erase(id) || staged.detection_methods.erase(id) ||
                 staged.cycle_labels.erase(id);
    if (!found) fail("unknown-id", "cannot delete unknown id '" + id + "'");

    // Anything still pointing at the id shows up as a dangling reference in
    // the staged state; report it as a dependency instead of committing.
    auto violations = check_integrity(staged, measured_ids());
    std::vector<std::string> dependents;
    for (const auto& v : violations) {
        if (v.code == "dangling-reference" && v.message.find("'" + id + "'") != std::string::npos)
            dependents.push_back(v.message);
    }
    if (!dependents.empty()) {
        std::string message = "cannot delete '" + id + "': ";
        for (std::size_t i = 0; i < dependents.size(); ++i) {
            if (i) message += "; ";
            message += dependents[i];
        }
        fail("dependent-exists", message);
    }
    commit(std::move(staged), std::vector<const char*>(std::begin(kCollectionNames),
                                                       std::end(kCollectionNames)));
}

void Store::put_measurement_matrix(const Id& signal_id, Matrix matrix, double cycle_duration_s) {
    auto it = collections_.signals.find(signal_id);
    if (it == collections_.signals.end())
        fail("dangling-reference", "measurement matrix references missing id '" + signal_id + "'");
    auto expected = static_cast<std::size_t>(
        std::llround(it->second.sampling_rate_hz * cycle_duration_s));
    if (matrix.rows > 0 && matrix.cols != expected)
        fail("shape-mismatch", "signal '" + signal_id + "' expects " + std::to_string(expected) +
                                   " samples per cycle, got " + std::to_string(matrix.cols));
    auto path = root_dir_ / "measurements" / (signal_id + ".mat");
    write_file_atomic(path, serialize_matrix(matrix));
    loaded_matrices_[signal_id] = std::make_shared<const Matrix>(std::move(matrix));
}

void Store::set_meta(const StoreMeta& meta) {
    meta_ = meta;
    nlohmann::ordered_json j;
    j["cycle_duration_s"] = meta.cycle_duration_s;
    j["spec_hash"] = meta.spec_hash;
    write_file_atomic(root_dir_ / "meta.json", j.dump() + "\n");
}

std::vector<Id> Store::measured_ids() const {
    std::set<Id> ids;
    for (const auto& [id, m] : loaded_matrices_) ids.insert(id);
    auto dir = root_dir_ / "measurements";
    if (std::filesystem::exists(dir)) {
        for (const auto& entry : std::filesystem::directory_iterator(dir))
            if (entry.path().extension() == ".mat") ids.insert(entry.path().stem().string());
    }
    return std::vector<Id>(ids.begin(), ids.end());
}

Snapshot Store::snapshot() const {
    Snapshot s;
    s.entities_ = std::make_shared<const EntityCollections>(collections_);
    s.meta_ = meta_;
    s.pool_ = std::make_shared<Snapshot::MatrixPool>();
    s.pool_->measurements_dir = root_dir_ / "measurements";
    s.pool_->loaded = loaded_matrices_;
    return s;
}

}  // namespace deepfmea
