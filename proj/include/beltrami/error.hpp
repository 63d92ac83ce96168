#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace beltrami {

enum class ErrorKind {
    config,
    degenerate_lattice,
    resonance,
    zero_frequency,
    arity_mismatch,
    incompatible_fields,
    order_mismatch,
    range_violation,
    near_zero_divisor,
    transversality,
    convergence,
    degenerate_fit,
    io,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace beltrami
