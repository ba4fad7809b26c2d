#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace solvzeta {

// Every failure mode carries a stable machine-readable name next to the
// human message; the CLI maps names to exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define SOLVZETA_DEFINE_ERROR(NAME)                          \
  class NAME : public Error {                                \
   public:                                                   \
    explicit NAME(const std::string& message)                \
        : Error(#NAME, message) {}                           \
  }

SOLVZETA_DEFINE_ERROR(SingularMatrix);
SOLVZETA_DEFINE_ERROR(NonSquarefreeInput);
SOLVZETA_DEFINE_ERROR(ZeroRoot);
SOLVZETA_DEFINE_ERROR(NotSemisimple);
SOLVZETA_DEFINE_ERROR(NotUnimodular);
SOLVZETA_DEFINE_ERROR(NotCommuting);
SOLVZETA_DEFINE_ERROR(IncompatiblePair);
SOLVZETA_DEFINE_ERROR(ConstraintViolated);
SOLVZETA_DEFINE_ERROR(PropertyCheckFailed);
SOLVZETA_DEFINE_ERROR(NotRankOneBase);
SOLVZETA_DEFINE_ERROR(HypothesesNotMet);
SOLVZETA_DEFINE_ERROR(InternalInconsistency);
SOLVZETA_DEFINE_ERROR(UnsupportedGroup);
SOLVZETA_DEFINE_ERROR(ZeroBaseDegree);
SOLVZETA_DEFINE_ERROR(IntegralityFailure);
SOLVZETA_DEFINE_ERROR(InvalidInput);

#undef SOLVZETA_DEFINE_ERROR

}  // namespace solvzeta
