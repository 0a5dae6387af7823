#include "pathweights/error.hpp"

#include <sstream>

namespace pathweights {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IndexError: return "IndexError";
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NotAdapted: return "NotAdapted";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::PathExplosion: return "PathExplosion";
    case ErrorCode::UndefinedShare: return "UndefinedShare";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string explosion_message(std::size_t reached, std::size_t cap) {
  std::ostringstream os;
  os << "path enumeration exceeded cap of " << cap << " (reached " << reached
     << ")";
  return os.str();
}

std::string adapted_message(const std::vector<NonAdaptedEntry>& offending,
                            double tol) {
  std::ostringstream os;
  os << "concentration matrix not adapted to graph (tol " << tol << "):";
  for (const auto& e : offending)
    os << " {" << e.u << "," << e.v << "}=" << e.magnitude;
  return os.str();
}

std::string converged_message(std::size_t iterations, double change) {
  std::ostringstream os;
  os << "no convergence after " << iterations
     << " iterations (last max change " << change << ")";
  return os.str();
}

}  // namespace

PathExplosionError::PathExplosionError(std::size_t reached, std::size_t cap)
    : Error(ErrorCode::PathExplosion, explosion_message(reached, cap)),
      reached_(reached),
      cap_(cap) {}

NotAdaptedError::NotAdaptedError(std::vector<NonAdaptedEntry> offending,
                                 double tol)
    : Error(ErrorCode::NotAdapted, adapted_message(offending, tol)),
      offending_(std::move(offending)) {}

NotConvergedError::NotConvergedError(std::size_t iterations, double last_change)
    : Error(ErrorCode::NotConverged, converged_message(iterations, last_change)),
      iterations_(iterations),
      last_change_(last_change) {}

}  // namespace pathweights
