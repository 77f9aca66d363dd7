#pragma once

#include <stdexcept>
#include <string>

namespace dl {

enum class Errc {
  NoConstantTerm,
  EmptyWord,
  NotInadmissible,
  UnstableWord,
  UnsupportedFlavor,
  IndexOutOfRange,
  DegreeBeyondCap,
  CapTooSmall,
  MalformedIdentityArgs,
  NonHomogeneous,
  SyntaxError,
  UnknownGenerator,
  Unsupported,
};

const char* errc_name(Errc code);

/// All engine failures are reported as dl::Error carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dl
