#pragma once

#include <stdexcept>
#include <string>

namespace sgp {

/// Base of every exception thrown by the library. `kind()` is a stable short
/// tag used by the C API and the CLI to pick an error code.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define SGP_DEFINE_ERROR(Name, tag)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(tag, what) {}      \
  }

SGP_DEFINE_ERROR(InvalidOrder, "invalid-order");
SGP_DEFINE_ERROR(InvalidLift, "invalid-lift");
SGP_DEFINE_ERROR(InvalidParameter, "invalid-parameter");
SGP_DEFINE_ERROR(SizeLimitError, "size-limit");
SGP_DEFINE_ERROR(DomainError, "domain");
SGP_DEFINE_ERROR(UnsupportedError, "unsupported");
SGP_DEFINE_ERROR(IntegralityError, "integrality");
SGP_DEFINE_ERROR(OracleFailure, "oracle-failure");
// Raised when two independent computation paths disagree.
SGP_DEFINE_ERROR(InternalConsistencyError, "internal-consistency");
SGP_DEFINE_ERROR(ParseError, "parse");
SGP_DEFINE_ERROR(IoError, "io");

#undef SGP_DEFINE_ERROR

}  // namespace sgp
