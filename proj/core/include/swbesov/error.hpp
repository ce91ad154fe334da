#pragma once

#include <stdexcept>
#include <string>

namespace swbesov {

enum class ErrorKind {
    invalid_dimension,
    non_power_of_two,
    non_positive_period,
    grid_mismatch,
    undefined_at_zero,
    nonzero_mean,
    out_of_range,
    invalid_params,
    config_invariant,
    cfl_violation,
    vacuum_guard,
    coefficient_bound,
    empty_input,
    io_failure,
    validation,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace swbesov
