#pragma once

#include <stdexcept>
#include <string>

namespace urnlab {

enum class Err {
    NonStochasticRow,
    NegativeEntry,
    ThetaOutOfRange,
    BadInitial,
    SingularSystem,
    NoUniqueLimit,
    InternalInconsistency,
    EigenFailure,
    ReducibleInput,
    UnsupportedRegime,
    DimensionMismatch,
    TooFewReplicas,
    DegenerateVariance,
    EmptySample,
    MissingHistory,
    InvariantViolation,
    GammaZero,
    NotAStar,
    InapplicableSuite,
    BadSchedule,
    BadInput,
    IoError,
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::NonStochasticRow: return "non_stochastic_row";
        case Err::NegativeEntry: return "negative_entry";
        case Err::ThetaOutOfRange: return "theta_out_of_range";
        case Err::BadInitial: return "bad_initial";
        case Err::SingularSystem: return "singular_system";
        case Err::NoUniqueLimit: return "no_unique_limit";
        case Err::InternalInconsistency: return "internal_inconsistency";
        case Err::EigenFailure: return "eigen_failure";
        case Err::ReducibleInput: return "reducible_input";
        case Err::UnsupportedRegime: return "unsupported_regime";
        case Err::DimensionMismatch: return "dimension_mismatch";
        case Err::TooFewReplicas: return "too_few_replicas";
        case Err::DegenerateVariance: return "degenerate_variance";
        case Err::EmptySample: return "empty_sample";
        case Err::MissingHistory: return "missing_history";
        case Err::InvariantViolation: return "invariant_violation";
        case Err::GammaZero: return "gamma_zero";
        case Err::NotAStar: return "not_a_star";
        case Err::InapplicableSuite: return "inapplicable_suite";
        case Err::BadSchedule: return "bad_schedule";
        case Err::BadInput: return "bad_input";
        case Err::IoError: return "io_error";
    }
    return "unknown";
}

class UrnError : public std::runtime_error {
public:
    UrnError(Err code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void raise(Err code, const std::string& what) {
    throw UrnError(code, std::string(err_name(code)) + ": " + what);
}

}  // namespace urnlab
