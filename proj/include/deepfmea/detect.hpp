#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "deepfmea/features.hpp"
#include "deepfmea/hierarchy.hpp"
#include "deepfmea/store.hpp"

namespace deepfmea {

// Similarity-based monitor: mean squared Euclidean distance to the k nearest
// z-scored healthy reference rows. Squared distance decomposes per feature,
// which keeps element attribution exactly additive.
struct MonitorModel {
    Id method_id;
    std::vector<Id> feature_ids;  // retained features, column order of the model
    std::vector<std::string> feature_names;
    std::vector<double> means;
    std::vector<double> stds;
    std::vector<Id> dropped_features;  // zero variance on the training rows
    Matrix reference;                  // z-scored training rows
    std::vector<long> train_cycles;
    std::vector<long> test_cycles;
    std::size_t k = 5;
    std::uint64_t seed = 0;
    double ratio = 0.7;
    std::string provenance;
    std::vector<std::string> warnings;
};

struct ScoreRecord {
    long cycle_index = 0;
    double attention_index = 0.0;
    std::vector<double> contributions;  // per retained feature; sums to attention_index
    bool imputed = false;
};

struct AttributionEntry {
    Id element_id;
    double contribution = 0.0;
    double share = 0.0;  // contribution / attention_index
};

struct AttributionReport {
    long cycle_index = 0;
    double attention_index = 0.0;
    std::map<Id, double> element_contributions;
    std::vector<AttributionEntry> top;
};

struct SplitResult {
    std::vector<long> train;  // healthy cycles only
    std::vector<long> test;   // remaining healthy plus everything degraded
};

// Deterministic pseudo-random split of the healthy cycles; degraded cycles
// always land in the test set because the monitor trains unsupervised.
SplitResult split_cycles(const std::vector<CycleLabel>& labels, double ratio, std::uint64_t seed);

// Fits means/stds and the z-scored reference set on the training rows of the
// feature matrix. Rows with non-finite cells are excluded with a warning.
MonitorModel fit_monitor(const FeatureMatrix& fm, const std::vector<long>& train_cycles,
                         std::size_t k);

// Scores one raw feature row (aligned with model.feature_ids). Non-finite
// cells are imputed with the training mean and flagged.
ScoreRecord attention_index(const MonitorModel& model, const std::vector<double>& raw_row,
                            long cycle_index);

std::vector<ScoreRecord> score_cycles(const MonitorModel& model, const FeatureMatrix& fm,
                                      const std::vector<long>& cycles);

// Splits each feature contribution equally across the elements its virtual
// sensor references, then ranks the top-n elements.
AttributionReport attribute(const MonitorModel& model, const ScoreRecord& score,
                            const std::map<Id, std::vector<Id>>& sensor_elements,
                            std::size_t top_n = 3);

// Contribution of an element's whole subtree (attribution is additive).
double rollup_contribution(const AttributionReport& report, const Hierarchy& hierarchy,
                           const Id& element_id);

// Cycles whose attention index strictly exceeds the threshold.
std::vector<long> detect_cycles(const std::vector<ScoreRecord>& scores, double threshold);

struct ConfusionCounts {
    long tp = 0;
    long fp = 0;
    long fn = 0;
    long tn = 0;
};

struct ReconcileResult {
    std::vector<FailureIncident> incidents;  // statuses filled in
    std::vector<long> false_alarms;          // detections outside every lead window
    ConfusionCounts counts;                  // per-cycle, lead-window independent
};

// Marks each incident detected_prior when a detection falls into
// [first - lead_window, last], otherwise undetected; detections outside all
// such windows are false alarms. Per-cycle counts treat cycles inside any
// incident range as degraded.
ReconcileResult reconcile(const std::vector<long>& detections, const std::vector<long>& cycle_axis,
                          std::vector<FailureIncident> incidents, long lead_window);

// Model persistence under <store>/models/<method>.model.json.
void save_model(const std::filesystem::path& store_dir, const MonitorModel& model);
MonitorModel load_model(const std::filesystem::path& store_dir, const Id& method_id);

// Two-component principal projection of z-scored rows; plotting aid only.
struct Projection {
    std::vector<long> cycles;
    std::vector<double> pc1;
    std::vector<double> pc2;
};
Projection project2d(const MonitorModel& model, const FeatureMatrix& fm,
                     const std::vector<long>& cycles);

}  // namespace deepfmea
