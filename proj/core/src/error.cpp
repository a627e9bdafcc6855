#include "surfgraph/error.hpp"

#include <cstdlib>
#include <limits>

namespace surfgraph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPermutation: return "NonPermutation";
    case ErrorKind::BadPairing: return "BadPairing";
    case ErrorKind::OddDartCount: return "OddDartCount";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::UnknownFace: return "UnknownFace";
    case ErrorKind::InvalidCycle: return "InvalidCycle";
    case ErrorKind::GraphMismatch: return "GraphMismatch";
    case ErrorKind::NotBoundaryAcyclic: return "NotBoundaryAcyclic";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NonIntegerCoefficients: return "NonIntegerCoefficients";
    case ErrorKind::NoFit: return "NoFit";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Limits Limits::unlimited() {
  Limits l;
  l.max_orientation_edges = 62;
  l.max_assignments = std::numeric_limits<std::uint64_t>::max();
  l.max_generator_edges = 8;
  return l;
}

Limits Limits::from_environment() {
  const char* env = std::getenv("SURFGRAPH_GUARD_OVERRIDE");
  if (env != nullptr && std::string_view(env) == "1") return unlimited();
  return Limits{};
}

const Limits& default_limits() {
  static const Limits limits = Limits::from_environment();
  return limits;
}

}  // namespace surfgraph
