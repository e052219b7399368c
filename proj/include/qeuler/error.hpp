#pragma once

#include <stdexcept>
#include <string>

namespace qeuler {

/// Broad class of a failure; the CLI maps it to an exit code.
enum class ErrorKind {
  validation,  // malformed or inconsistent input data
  arithmetic,  // a field operation or linear solve had no answer
};

/// Base of every error raised by the library. `name()` is the stable
/// identifier reported on the diagnostic stream (e.g. "NotAUnit").
class Error : public std::runtime_error {
 public:
  Error(std::string name, ErrorKind kind, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)), kind_(kind) {}

  const std::string& name() const noexcept { return name_; }
  ErrorKind kind() const noexcept { return kind_; }

 private:
  std::string name_;
  ErrorKind kind_;
};

namespace detail {
template <ErrorKind Kind>
struct NamedError : Error {
  NamedError(const char* name, const std::string& what) : Error(name, Kind, what) {}
};
}  // namespace detail

#define QEULER_DEFINE_ERROR(Name, Kind)                                     \
  struct Name : detail::NamedError<ErrorKind::Kind> {                       \
    explicit Name(const std::string& what)                                  \
        : detail::NamedError<ErrorKind::Kind>(#Name, what) {}               \
  }

// scalar / frobenius
QEULER_DEFINE_ERROR(DivisionByZero, arithmetic);
QEULER_DEFINE_ERROR(DegeneratePairing, arithmetic);
QEULER_DEFINE_ERROR(NotAUnit, arithmetic);
QEULER_DEFINE_ERROR(UnknownLabel, validation);
QEULER_DEFINE_ERROR(InvalidAlgebra, validation);
// grassmannian
QEULER_DEFINE_ERROR(InvalidShape, validation);
QEULER_DEFINE_ERROR(InvalidSpecialClass, validation);
// presented
QEULER_DEFINE_ERROR(SyntaxError, validation);
QEULER_DEFINE_ERROR(CyclicDefinition, validation);
QEULER_DEFINE_ERROR(MissingDefinition, validation);
QEULER_DEFINE_ERROR(InconsistentTable, validation);
// rootgkm
QEULER_DEFINE_ERROR(UnsupportedType, validation);
QEULER_DEFINE_ERROR(InvalidWeight, validation);
QEULER_DEFINE_ERROR(NotRegular, validation);
QEULER_DEFINE_ERROR(TooLarge, validation);

#undef QEULER_DEFINE_ERROR

}  // namespace qeuler
