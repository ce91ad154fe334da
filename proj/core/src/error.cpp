#include "swbesov/error.hpp"

namespace swbesov {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_dimension: return "invalid-dimension";
        case ErrorKind::non_power_of_two: return "non-power-of-two";
        case ErrorKind::non_positive_period: return "non-positive-period";
        case ErrorKind::grid_mismatch: return "grid-mismatch";
        case ErrorKind::undefined_at_zero: return "undefined-at-zero";
        case ErrorKind::nonzero_mean: return "nonzero-mean-without-flag";
        case ErrorKind::out_of_range: return "out-of-range";
        case ErrorKind::invalid_params: return "invalid-params";
        case ErrorKind::config_invariant: return "config-invariant-violation";
        case ErrorKind::cfl_violation: return "cfl-violation";
        case ErrorKind::vacuum_guard: return "vacuum-guard-violation";
        case ErrorKind::coefficient_bound: return "coefficient-bound-violation";
        case ErrorKind::empty_input: return "empty-input";
        case ErrorKind::io_failure: return "io-failure";
        case ErrorKind::validation: return "validation-error";
    }
    return "error";
}

}  // namespace swbesov
