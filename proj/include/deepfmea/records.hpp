#pragma once

#include <nlohmann/json.hpp>

#include "deepfmea/entities.hpp"

namespace deepfmea {

// Line-record encoding: every entity serializes to one JSON object whose
// first two fields are "type" and "id". Field order is fixed so that stored
// files are byte-stable.
using Record = nlohmann::ordered_json;

Record to_record(const SystemElement& e);
Record to_record(const Asset& e);
Record to_record(const Signal& e);
Record to_record(const Segment& e);
Record to_record(const VirtualSensor& e);
Record to_record(const FailureMode& e);
Record to_record(const Intervention& e);
Record to_record(const FailureIncident& e);
Record to_record(const DetectionMethod& e);
Record to_record(const CycleLabel& e);

SystemElement system_element_from_record(const Record& r);
Asset asset_from_record(const Record& r);
Signal signal_from_record(const Record& r);
Segment segment_from_record(const Record& r);
VirtualSensor virtual_sensor_from_record(const Record& r);
FailureMode failure_mode_from_record(const Record& r);
Intervention intervention_from_record(const Record& r);
FailureIncident failure_incident_from_record(const Record& r);
DetectionMethod detection_method_from_record(const Record& r);
CycleLabel cycle_label_from_record(const Record& r);

}  // namespace deepfmea
