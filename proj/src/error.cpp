#include "beltrami/error.hpp"

namespace beltrami {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::config: return "config";
        case ErrorKind::degenerate_lattice: return "degenerate_lattice";
        case ErrorKind::resonance: return "resonance";
        case ErrorKind::zero_frequency: return "zero_frequency";
        case ErrorKind::arity_mismatch: return "arity_mismatch";
        case ErrorKind::incompatible_fields: return "incompatible_fields";
        case ErrorKind::order_mismatch: return "order_mismatch";
        case ErrorKind::range_violation: return "range_violation";
        case ErrorKind::near_zero_divisor: return "near_zero_divisor";
        case ErrorKind::transversality: return "transversality";
        case ErrorKind::convergence: return "convergence";
        case ErrorKind::degenerate_fit: return "degenerate_fit";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

}  // namespace beltrami
