#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deepfmea/error.hpp"

namespace deepfmea {

using Id = std::string;

// A node of the physical decomposition tree. The root carries no parent.
struct SystemElement {
    Id id;
    std::string name;
    std::optional<Id> parent_id;
};

// One physical instance of the root system element.
struct Asset {
    Id id;
    Id root_element_id;
    std::string label;
};

enum class SignalSource { intrinsic, control, external };

struct Signal {
    Id id;
    std::string name;
    std::vector<Id> element_ids;  // non-empty
    double sampling_rate_hz = 0.0;
    std::string unit;
    SignalSource source = SignalSource::intrinsic;
};

// One cycle-aligned time series of a signal on an asset. Samples are
// equidistant; sample i sits at offset start_offset_s + i / sampling_rate_hz.
struct Measurement {
    Id asset_id;
    Id signal_id;
    long cycle_index = 0;
    double start_offset_s = 0.0;
    double duration_s = 0.0;
    double sampling_rate_hz = 0.0;
    std::vector<double> values;
};

enum class SegmentMethod { fixed_interval };

// A recurring window within a cycle. Only fixed intervals are implemented;
// the type keeps method + params separate so other segmenters can slot in.
struct Segment {
    Id id;
    std::string name;
    SegmentMethod method = SegmentMethod::fixed_interval;
    double start_s = 0.0;
    double end_s = 0.0;
};

enum class Operator { DIFF, DIV, ME, MEAN, STD, MIN, MAX, SUM, SLOPE, ABS };

// Input of an operation node: a signal id (segment required), a virtual
// sensor id (segment optional), or another node id of the same graph.
struct OperationInput {
    Id ref;
    std::optional<Id> segment_id;
};

struct OperationNode {
    Id id;
    Operator op = Operator::MEAN;
    std::vector<OperationInput> inputs;
};

struct VirtualSensor {
    Id id;
    std::string name;
    std::vector<Id> element_ids;  // non-empty
    Id output_node_id;
    std::vector<OperationNode> nodes;
};

// Risk priors and consequence costs of one way a system element can fail.
struct FailureMode {
    Id id;
    std::string name;
    Id element_id;
    double prob_per_interval = 0.0;    // P in [0,1]
    double severity = 0.0;             // S >= 0
    double baseline_detection = 0.0;   // D in [0,1]
    double cost_detected = 0.0;        // CD
    double cost_undetected = 0.0;      // CU
    std::string reference_interval;
};

enum class InterventionKind { diagnostic, proactive, reactive };

struct Intervention {
    Id id;
    Id failure_mode_id;
    InterventionKind kind = InterventionKind::diagnostic;
    double cost = 0.0;  // CDI for diagnostic tasks
    std::string description;
};

enum class IncidentStatus { detected_prior, undetected, false_alarm, unreconciled };

struct FailureIncident {
    Id id;
    Id asset_id;
    Id failure_mode_id;
    long first_cycle = 0;
    long last_cycle = 0;
    IncidentStatus status = IncidentStatus::unreconciled;
};

enum class DetectionKind { monitoring, diagnostic, prognostic };

struct DetectionMethod {
    Id id;
    DetectionKind kind = DetectionKind::monitoring;
    std::vector<Id> input_signal_ids;
    std::vector<Id> input_virtual_sensor_ids;
    std::vector<Id> scope_element_ids;       // monitoring scope
    std::vector<Id> scope_failure_mode_ids;  // diagnostic / prognostic scope
    double threshold = 0.0;
    double operating_cost = 0.0;  // C_PHM per interval
};

// Per-cycle label derived from the dataset's condition profile. A cycle is
// healthy only when every condition column is nominal and the rig was stable;
// candidate_mode_ids lists the modes of all non-nominal columns (first one is
// the primary), and stays empty for nominal-but-unstable cycles.
struct CycleLabel {
    Id id;
    long cycle_index = 0;
    std::vector<double> condition_values;
    bool stable = true;
    bool healthy = true;
    std::vector<Id> candidate_mode_ids;
};

const char* to_string(SignalSource v);
const char* to_string(SegmentMethod v);
const char* to_string(Operator v);
const char* to_string(InterventionKind v);
const char* to_string(IncidentStatus v);
const char* to_string(DetectionKind v);

SignalSource signal_source_from_string(const std::string& s);
SegmentMethod segment_method_from_string(const std::string& s);
Operator operator_from_string(const std::string& s);
InterventionKind intervention_kind_from_string(const std::string& s);
IncidentStatus incident_status_from_string(const std::string& s);
DetectionKind detection_kind_from_string(const std::string& s);

// Required input count of an operation node (DIFF/DIV take 2, the rest 1).
std::size_t operator_arity(Operator op);

}  // namespace deepfmea
