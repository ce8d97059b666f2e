#pragma once

#include <stdexcept>
#include <string>

namespace nkicon {

enum class Errc {
  InvalidArgument,
  ParityMismatch,
  DegenerateTwist,
  IsoperimetryViolation,
  NoCaps,
  NonManifold,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* to_string(Errc c) {
  switch (c) {
    case Errc::InvalidArgument: return "INVALID_ARGUMENT";
    case Errc::ParityMismatch: return "PARITY_MISMATCH";
    case Errc::DegenerateTwist: return "DEGENERATE_TWIST";
    case Errc::IsoperimetryViolation: return "ISOPERIMETRY_VIOLATION";
    case Errc::NoCaps: return "NO_CAPS";
    case Errc::NonManifold: return "NON_MANIFOLD";
    case Errc::Io: return "IO";
  }
  return "UNKNOWN";
}

}  // namespace nkicon
