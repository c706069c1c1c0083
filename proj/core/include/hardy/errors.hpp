#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

enum class ErrorKind {
    InvalidParameter,
    InvalidInput,
    SolverFailure,
    DensityInversionFailure,
    PointGeneration,
    InvalidSample,
    InvalidRegime,
    Io,
};

const char* to_string(ErrorKind kind);

/// Base exception for every failure raised by the library. `stage` names the
/// pipeline step (empty for standalone calls) so the CLI can report where a
/// run broke.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string stage = {})
        : std::runtime_error(message), kind_(kind), stage_(std::move(stage)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& stage() const noexcept { return stage_; }

    void set_stage(std::string stage) { stage_ = std::move(stage); }

private:
    ErrorKind kind_;
    std::string stage_;
};

class SolverFailure : public Error {
public:
    SolverFailure(const std::string& message, double last_iterate, double last_residual)
        : Error(ErrorKind::SolverFailure, message),
          last_iterate_(last_iterate),
          last_residual_(last_residual) {}

    double last_iterate() const noexcept { return last_iterate_; }
    double last_residual() const noexcept { return last_residual_; }

private:
    double last_iterate_;
    double last_residual_;
};

} // namespace hardy
