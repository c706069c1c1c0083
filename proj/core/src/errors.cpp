#include "hardy/errors.hpp"

namespace hardy {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::SolverFailure: return "solver-failure";
    case ErrorKind::DensityInversionFailure: return "density-inversion-failure";
    case ErrorKind::PointGeneration: return "point-generation";
    case ErrorKind::InvalidSample: return "invalid-sample";
    case ErrorKind::InvalidRegime: return "invalid-regime";
    case ErrorKind::Io: return "io";
    }
    return "unknown";
}

} // namespace hardy
