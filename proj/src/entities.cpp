#include "deepfmea/entities.hpp"

namespace deepfmea {

const char* to_string(SignalSource v) {
    switch (v) {
        case SignalSource::intrinsic: return "intrinsic";
        case SignalSource::control: return "control";
        case SignalSource::external: return "external";
    }
    return "?";
}

const char* to_string(SegmentMethod v) {
    switch (v) {
        case SegmentMethod::fixed_interval: return "fixed_interval";
    }
    return "?";
}

const char* to_string(Operator v) {
    switch (v) {
        case Operator::DIFF: return "DIFF";
        case Operator::DIV: return "DIV";
        case Operator::ME: return "ME";
        case Operator::MEAN: return "MEAN";
        case Operator::STD: return "STD";
        case Operator::MIN: return "MIN";
        case Operator::MAX: return "MAX";
        case Operator::SUM: return "SUM";
        case Operator::SLOPE: return "SLOPE";
        case Operator::ABS: return "ABS";
    }
    return "?";
}

const char* to_string(InterventionKind v) {
    switch (v) {
        case InterventionKind::diagnostic: return "diagnostic";
        case InterventionKind::proactive: return "proactive";
        case InterventionKind::reactive: return "reactive";
    }
    return "?";
}

const char* to_string(IncidentStatus v) {
    switch (v) {
        case IncidentStatus::detected_prior: return "detected_prior";
        case IncidentStatus::undetected: return "undetected";
        case IncidentStatus::false_alarm: return "false_alarm";
        case IncidentStatus::unreconciled: return "unreconciled";
    }
    return "?";
}

const char* to_string(DetectionKind v) {
    switch (v) {
        case DetectionKind::monitoring: return "monitoring";
        case DetectionKind::diagnostic: return "diagnostic";
        case DetectionKind::prognostic: return "prognostic";
    }
    return "?";
}

namespace {

[[noreturn]] void bad_enum(const char* what, const std::string& s) {
    fail("parse", std::string("unknown ") + what + ": '" + s + "'");
}

}  // namespace

SignalSource signal_source_from_string(const std::string& s) {
    if (s == "intrinsic") return SignalSource::intrinsic;
    if (s == "control") return SignalSource::control;
    if (s == "external") return SignalSource::external;
    bad_enum("signal source", s);
}

SegmentMethod segment_method_from_string(const std::string& s) {
    if (s == "fixed_interval") return SegmentMethod::fixed_interval;
    bad_enum("segment method", s);
}

Operator operator_from_string(const std::string& s) {
    if (s == "DIFF") return Operator::DIFF;
    if (s == "DIV") return Operator::DIV;
    if (s == "ME") return Operator::ME;
    if (s == "MEAN") return Operator::MEAN;
    if (s == "STD") return Operator::STD;
    if (s == "MIN") return Operator::MIN;
    if (s == "MAX") return Operator::MAX;
    if (s == "SUM") return Operator::SUM;
    if (s == "SLOPE") return Operator::SLOPE;
    if (s == "ABS") return Operator::ABS;
    bad_enum("operator", s);
}

InterventionKind intervention_kind_from_string(const std::string& s) {
    if (s == "diagnostic") return InterventionKind::diagnostic;
    if (s == "proactive") return InterventionKind::proactive;
    if (s == "reactive") return InterventionKind::reactive;
    bad_enum("intervention kind", s);
}

IncidentStatus incident_status_from_string(const std::string& s) {
    if (s == "detected_prior") return IncidentStatus::detected_prior;
    if (s == "undetected") return IncidentStatus::undetected;
    if (s == "false_alarm") return IncidentStatus::false_alarm;
    if (s == "unreconciled") return IncidentStatus::unreconciled;
    bad_enum("incident status", s);
}

DetectionKind detection_kind_from_string(const std::string& s) {
    if (s == "monitoring") return DetectionKind::monitoring;
    if (s == "diagnostic") return DetectionKind::diagnostic;
    if (s == "prognostic") return DetectionKind::prognostic;
    bad_enum("detection kind", s);
}

std::size_t operator_arity(Operator op) {
    switch (op) {
        case Operator::DIFF:
        case Operator::DIV:
            return 2;
        default:
            return 1;
    }
}

}  // namespace deepfmea
