#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lifespan {

enum class ErrorKind {
    OddPointCount,
    UnsupportedDimension,
    InvalidArgument,
    NonIntegrableSingularity,
    EvaluationAtSingularity,
    KernelUnderresolved,
    SymmetryViolation,
    IntegralDiverges,
    CriticalOrSubcritical,
    SupercriticalForMeasures,
    HypothesisViolated,
    NegativeData,
    NoApplicableTheorem,
    DtUnderflow,
    NotContracting,
    InsufficientHistory,
    InsufficientData,
    DegenerateScaling,
    ConfigInvalid,
};

constexpr std::string_view to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::OddPointCount: return "OddPointCount";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonIntegrableSingularity: return "NonIntegrableSingularity";
    case ErrorKind::EvaluationAtSingularity: return "EvaluationAtSingularity";
    case ErrorKind::KernelUnderresolved: return "KernelUnderresolved";
    case ErrorKind::SymmetryViolation: return "SymmetryViolation";
    case ErrorKind::IntegralDiverges: return "IntegralDiverges";
    case ErrorKind::CriticalOrSubcritical: return "CriticalOrSubcritical";
    case ErrorKind::SupercriticalForMeasures: return "SupercriticalForMeasures";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NegativeData: return "NegativeData";
    case ErrorKind::NoApplicableTheorem: return "NoApplicableTheorem";
    case ErrorKind::DtUnderflow: return "DtUnderflow";
    case ErrorKind::NotContracting: return "NotContracting";
    case ErrorKind::InsufficientHistory: return "InsufficientHistory";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::DegenerateScaling: return "DegenerateScaling";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

} // namespace lifespan
