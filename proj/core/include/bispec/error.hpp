#pragma once

#include <stdexcept>
#include <string>

namespace bispec {

// Error classes. The CLI maps each class to an exit code.
enum class ErrorKind {
  kDomain,                 // e.g. inverse of zero
  kUsage,                  // malformed call (mismatched orders, bad index)
  kUnsupportedInput,       // input outside the supported algebra
  kSpecInvalid,            // kernel spec violates congruence/multiplicity rules
  kRankDeficiency,         // linearly dependent kernel data
  kShape,                  // operator not of the required normal form
  kTruncationInsufficient, // series window too small for the request
  kCertification,          // exact certificate identity fails
  kVerification,           // series residual is nonzero
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace bispec
