#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace zastava {

// Every domain failure carries a stable machine-readable name; the CLI
// surfaces it verbatim in {"error":{"name":...}} so callers can branch on it
// without parsing prose.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define ZASTAVA_DEFINE_ERROR(Type)                                  \
  class Type : public Error {                                       \
   public:                                                          \
    explicit Type(const std::string& what) : Error(#Type, what) {}  \
  }

// arithmetic layer
ZASTAVA_DEFINE_ERROR(ZeroDivision);
ZASTAVA_DEFINE_ERROR(DuplicateNode);
ZASTAVA_DEFINE_ERROR(ImproperFraction);
ZASTAVA_DEFINE_ERROR(InsufficientCoefficients);
ZASTAVA_DEFINE_ERROR(NonCoprime);
ZASTAVA_DEFINE_ERROR(RepeatedRoot);
ZASTAVA_DEFINE_ERROR(ConvergenceFailure);
ZASTAVA_DEFINE_ERROR(NonSplitting);

// root data
ZASTAVA_DEFINE_ERROR(InvalidCartan);
ZASTAVA_DEFINE_ERROR(NonDominant);

// zastava charts
ZASTAVA_DEFINE_ERROR(ChartInvalid);
ZASTAVA_DEFINE_ERROR(RegularLocusViolation);
ZASTAVA_DEFINE_ERROR(DisjointnessViolation);
ZASTAVA_DEFINE_ERROR(PoleAtCoincidence);
ZASTAVA_DEFINE_ERROR(CoincidentPoints);

// superpotential
ZASTAVA_DEFINE_ERROR(CriticalAtInfinity);

// sessions / wire formats
ZASTAVA_DEFINE_ERROR(SessionMismatch);
ZASTAVA_DEFINE_ERROR(SchemaError);

#undef ZASTAVA_DEFINE_ERROR

}  // namespace zastava
