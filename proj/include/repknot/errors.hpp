#pragma once

#include <stdexcept>
#include <string>

namespace repknot {

// Error taxonomy.  `Usage` errors come from bad input and map to exit code 2
// in the CLI; `Internal` errors mean two independent computations of the same
// quantity disagreed and map to exit code 3.  Everything else that a command
// can report (a refuted simplicity verdict, a non-converged seed) is data,
// not an error.
enum class ErrorKind { Usage, Internal };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

#define REPKNOT_ERROR(NAME, KIND)                                                                 \
  class NAME : public Error {                                                                     \
  public:                                                                                         \
    explicit NAME(const std::string& what) : Error(ErrorKind::KIND, #NAME ": " + what) {}         \
  }

REPKNOT_ERROR(MalformedNotation, Usage);
REPKNOT_ERROR(NonPlanarOrInconsistent, Usage);
REPKNOT_ERROR(LetterOutOfRange, Usage);
REPKNOT_ERROR(UnknownComponent, Usage);
REPKNOT_ERROR(ZeroDeterminant, Usage);
REPKNOT_ERROR(HypothesisViolation, Usage);
REPKNOT_ERROR(ChiUndefined, Usage);
REPKNOT_ERROR(FillingNotKilled, Usage);
REPKNOT_ERROR(IllConditioned, Usage);
REPKNOT_ERROR(CorpusError, Usage);
REPKNOT_ERROR(OracleMismatch, Internal);
REPKNOT_ERROR(TestDisagreement, Internal);

#undef REPKNOT_ERROR

}  // namespace repknot
