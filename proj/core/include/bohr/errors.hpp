#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

/// Base of every error raised by the library. Each subclass names one failed
/// precondition or contract so callers (and the CLI) can react per kind.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define BOHR_DEFINE_ERROR(Name)                                       \
  class Name : public Error {                                         \
   public:                                                            \
    using Error::Error;                                               \
    const char* kind() const noexcept override { return #Name; }      \
  }

BOHR_DEFINE_ERROR(DomainError);
BOHR_DEFINE_ERROR(CertificationError);
BOHR_DEFINE_ERROR(UncertifiedTail);
BOHR_DEFINE_ERROR(NearZeroConstantTerm);
BOHR_DEFINE_ERROR(NonvanishingConstant);
BOHR_DEFINE_ERROR(InvalidSpec);
BOHR_DEFINE_ERROR(IndexOutOfRange);
BOHR_DEFINE_ERROR(EqualityNotAttained);
BOHR_DEFINE_ERROR(ConstraintViolation);
BOHR_DEFINE_ERROR(NoWitness);
BOHR_DEFINE_ERROR(NoBracket);
BOHR_DEFINE_ERROR(MaxIterations);
BOHR_DEFINE_ERROR(NonMonotone);
BOHR_DEFINE_ERROR(ParseError);

#undef BOHR_DEFINE_ERROR

}  // namespace bohr
