#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quintic {

enum class ErrorKind {
    InvalidInput,
    DegenerateInput,
    OutOfRange,
    ResidualTooLarge,
    MaxIterExceeded,
    PoleEvaluation,
    BracketFailure,
    VietaResidualFailure,
    NoConvergence,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorKind::MaxIterExceeded: return "MaxIterExceeded";
    case ErrorKind::PoleEvaluation: return "PoleEvaluation";
    case ErrorKind::BracketFailure: return "BracketFailure";
    case ErrorKind::VietaResidualFailure: return "VietaResidualFailure";
    case ErrorKind::NoConvergence: return "NoConvergence";
    }
    return "Unknown";
}

/// Base class for every failure raised by the solvers and reductions.
class SolverError : public std::runtime_error {
public:
    SolverError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace quintic
