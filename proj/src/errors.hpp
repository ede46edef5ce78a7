// Error codes and the exception type shared by all modules.

#pragma once

#include <stdexcept>
#include <string>

namespace arq {

enum class Errc {
  InvalidArgument,
  InvalidRank,
  NoSuchAutomorphism,
  DiagramMismatch,
  NotRightward,
  NotTauStable,
  MissingCoveringData,
  WindowTooSmall,
  HypothesisViolated,
  RankTooSmall,
  ShapeMismatch,
  ParseError,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

// Internal-consistency check. A failure is a bug, not a usage error.
inline void require_internal(bool ok, const std::string& what) {
  if (!ok) fail(Errc::Internal, "internal error: " + what);
}

}  // namespace arq
