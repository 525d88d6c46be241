#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "deepfmea/entities.hpp"
#include "deepfmea/store.hpp"

namespace deepfmea {

// Divisors below this magnitude raise a division error instead of producing
// huge meaningless ratios.
inline constexpr double kDivEpsilon = 1e-12;

// Intermediate result of an operation node: a scalar, or a sample vector that
// keeps its cycle offsets so later segment restrictions stay well-defined.
struct Value {
    bool scalar = false;
    std::vector<double> samples;
    std::vector<double> offsets_s;  // empty for scalars, else one offset per sample

    double as_scalar() const;
    std::size_t size() const { return samples.size(); }

    static Value make_scalar(double v) { return Value{true, {v}, {}}; }
    static Value make_vector(std::vector<double> samples, std::vector<double> offsets);
};

// Samples whose offset lies inside [start_s, end_s], both ends inclusive.
Value restrict_to_segment(const Measurement& m, const Segment& segment);
Value restrict_value(const Value& v, const Segment& segment);

Value apply_operator(Operator op, const std::vector<Value>& inputs);

// Node evaluation order of one graph; every node appears after its
// referenced nodes. Raises a cycle error naming one offending cycle.
std::vector<Id> topological_order(const VirtualSensor& vs);

// Where graph evaluation reads raw cycle data from.
class MeasurementSource {
public:
    virtual ~MeasurementSource() = default;
    virtual Measurement measurement(const Id& signal_id, long cycle_index) const = 0;
};

class SnapshotMeasurementSource : public MeasurementSource {
public:
    SnapshotMeasurementSource(const Snapshot& snapshot, Id asset_id)
        : snapshot_(snapshot), asset_id_(std::move(asset_id)) {}
    Measurement measurement(const Id& signal_id, long cycle_index) const override {
        return snapshot_.measurement(asset_id_, signal_id, cycle_index);
    }

private:
    const Snapshot& snapshot_;
    Id asset_id_;
};

struct EvalModel {
    const std::map<Id, Signal>* signals = nullptr;
    const std::map<Id, Segment>* segments = nullptr;
    const std::map<Id, VirtualSensor>* virtual_sensors = nullptr;
};

EvalModel eval_model(const Snapshot& snapshot);

// Evaluates one virtual sensor for one cycle. Node results and nested
// virtual-sensor outputs are memoized for the lifetime of the evaluator,
// which is meant to span exactly one cycle.
class GraphEvaluator {
public:
    GraphEvaluator(const EvalModel& model, const MeasurementSource& source, long cycle_index)
        : model_(model), source_(source), cycle_(cycle_index) {}

    Value evaluate(const VirtualSensor& vs);
    Value evaluate(const Id& virtual_sensor_id);

private:
    Value resolve_input(const VirtualSensor& vs, const OperationInput& input,
                        const std::map<Id, Value>& node_values);

    const EvalModel& model_;
    const MeasurementSource& source_;
    long cycle_;
    std::map<Id, Value> vs_memo_;
    std::set<Id> in_progress_;
};

// Per-cycle values of scalar virtual sensors. Failed cells are NaN with a
// warning entry; they are never silently dropped.
struct FeatureMatrix {
    std::vector<long> cycles;
    std::vector<Id> sensor_ids;
    std::vector<std::string> sensor_names;
    Matrix values;
    std::string provenance;  // model-spec hash
    std::vector<std::string> warnings;

    std::size_t column_of(const Id& sensor_id) const;
};

FeatureMatrix compute_feature_matrix(const Snapshot& snapshot, const Id& asset_id,
                                     const std::vector<Id>& virtual_sensor_ids,
                                     const std::vector<long>& cycles);

std::string feature_matrix_to_csv(const FeatureMatrix& fm);

// All scalar-valued entries of detection-method inputs, or every virtual
// sensor that evaluates to a scalar when ids is empty.
std::vector<Id> default_feature_sensors(const Snapshot& snapshot);

}  // namespace deepfmea
