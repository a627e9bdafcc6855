#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace surfgraph {

enum class ErrorKind {
  NonPermutation,
  BadPairing,
  OddDartCount,
  Parse,
  UnknownEdge,
  DuplicateEdge,
  UnknownFace,
  InvalidCycle,
  GraphMismatch,
  NotBoundaryAcyclic,
  BadModulus,
  TooLarge,
  NonIntegerCoefficients,
  NoFit,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure the library reports. `kind()` lets callers (the CLI in
/// particular) map failures to exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  bool is_validation() const noexcept {
    switch (kind_) {
      case ErrorKind::NonPermutation:
      case ErrorKind::BadPairing:
      case ErrorKind::OddDartCount:
      case ErrorKind::Parse:
      case ErrorKind::UnknownEdge:
      case ErrorKind::DuplicateEdge:
      case ErrorKind::UnknownFace:
      case ErrorKind::InvalidCycle:
      case ErrorKind::GraphMismatch:
      case ErrorKind::NotBoundaryAcyclic:
      case ErrorKind::BadModulus:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

/// Enumeration guards. Exponential scans refuse to start beyond these.
struct Limits {
  int max_orientation_edges = 20;           // 2^|E| orientation scans
  std::uint64_t max_assignments = 100000000;  // k^|E| per count
  int max_generator_edges = 5;              // (2m)! sigma scan

  /// Defaults, or unlimited when SURFGRAPH_GUARD_OVERRIDE=1.
  static Limits from_environment();
  static Limits unlimited();
};

const Limits& default_limits();

}  // namespace surfgraph
