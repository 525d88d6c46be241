#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "deepfmea/entities.hpp"
#include "deepfmea/hierarchy.hpp"

namespace deepfmea {

// Row-major numeric matrix; one row per cycle.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    std::span<const double> row(std::size_t i) const {
        return std::span<const double>(data).subspan(i * cols, cols);
    }
    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    static Matrix zeros(std::size_t rows, std::size_t cols) {
        return Matrix{rows, cols, std::vector<double>(rows * cols, 0.0)};
    }
};

std::string serialize_matrix(const Matrix& m);
Matrix parse_matrix(const std::string& text, const std::string& origin);

using Entity = std::variant<SystemElement, Asset, Signal, Segment, VirtualSensor, FailureMode,
                            Intervention, FailureIncident, DetectionMethod, CycleLabel>;

const Id& entity_id(const Entity& e);
const char* entity_type(const Entity& e);

struct EntityCollections {
    std::map<Id, SystemElement> elements;
    std::map<Id, Asset> assets;
    std::map<Id, Signal> signals;
    std::map<Id, Segment> segments;
    std::map<Id, VirtualSensor> virtual_sensors;
    std::map<Id, FailureMode> failure_modes;
    std::map<Id, Intervention> interventions;
    std::map<Id, FailureIncident> failure_incidents;
    std::map<Id, DetectionMethod> detection_methods;
    std::map<Id, CycleLabel> cycle_labels;
};

struct StoreMeta {
    double cycle_duration_s = 0.0;
    std::string spec_hash;
};

struct IntegrityViolation {
    std::string code;
    std::string message;
};

// Full-state check: tree invariants, per-type invariants, and every foreign
// key. Empty result means the state is consistent.
std::vector<IntegrityViolation> check_integrity(const EntityCollections& c,
                                                const std::vector<Id>& measured_signal_ids);

// Immutable read view. Entity collections are captured at snapshot time;
// measurement matrices load lazily and are cached inside the view.
class Snapshot {
public:
    const EntityCollections& entities() const { return *entities_; }
    const StoreMeta& meta() const { return meta_; }

    std::vector<SystemElement> element_list() const;
    std::vector<Signal> signal_list() const;
    Hierarchy hierarchy() const;

    bool has_measurements(const Id& signal_id) const;
    std::shared_ptr<const Matrix> measurements(const Id& signal_id) const;
    std::vector<Id> measured_signal_ids() const;

    // Materializes one cycle row of a signal as a Measurement.
    Measurement measurement(const Id& asset_id, const Id& signal_id, long cycle_index) const;

    const Signal& signal(const Id& id) const;
    const Segment& segment(const Id& id) const;
    const VirtualSensor& virtual_sensor(const Id& id) const;
    const DetectionMethod& detection_method(const Id& id) const;
    const FailureMode& failure_mode(const Id& id) const;

    std::vector<CycleLabel> sorted_labels() const;

private:
    friend class Store;
    struct MatrixPool;

    std::shared_ptr<const EntityCollections> entities_;
    StoreMeta meta_;
    std::shared_ptr<MatrixPool> pool_;
};

// File-backed store: one line-record file per entity type plus one numeric
// matrix file per measured signal. Single writer; integrity is re-checked
// against the staged state before every commit, so a failed write changes
// nothing.
class Store {
public:
    // Opens (creating directories if needed) a store rooted at root_dir.
    explicit Store(std::filesystem::path root_dir);

    const std::filesystem::path& root_dir() const { return root_dir_; }

    // Inserts one entity. Rejects duplicate ids and dangling references.
    Id put(const Entity& entity);

    // Inserts or replaces a batch atomically (used by model apply / ingest).
    void upsert_bundle(const std::vector<Entity>& entities);

    // Removes an entity; fails while anything still references it.
    void remove(const Id& id);

    // Stores the per-cycle matrix of a signal. Row length must equal
    // round(sampling_rate_hz * cycle_duration_s).
    void put_measurement_matrix(const Id& signal_id, Matrix matrix, double cycle_duration_s);

    void set_meta(const StoreMeta& meta);
    const StoreMeta& meta() const { return meta_; }

    Snapshot snapshot() const;

private:
    void load();
    void save_collection(const char* name);
    void commit(EntityCollections staged, const std::vector<const char*>& touched);
    std::vector<Id> measured_ids() const;

    std::filesystem::path root_dir_;
    EntityCollections collections_;
    StoreMeta meta_;
    std::map<Id, std::shared_ptr<const Matrix>> loaded_matrices_;
};

}  // namespace deepfmea
