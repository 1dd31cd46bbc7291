#ifndef BRUNONF_ERRORS_HPP
#define BRUNONF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace brunonf {

// Base for all library errors; `code()` is a stable machine-readable tag.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

struct ScalarMismatchError : Error {
  explicit ScalarMismatchError(const std::string& msg = "scalar variant mismatch")
      : Error("MixedScalars", msg) {}
};

struct DimensionMismatchError : Error {
  explicit DimensionMismatchError(const std::string& msg = "dimension mismatch")
      : Error("DimensionMismatch", msg) {}
};

struct NotAUnitError : Error {
  NotAUnitError() : Error("NotAUnit", "series has vanishing constant term") {}
};

struct NotLogarithmicError : Error {
  explicit NotLogarithmicError(int component, const std::string& term = "")
      : Error("NotLogarithmic",
              "component " + std::to_string(component) +
                  " is not divisible by its variable" +
                  (term.empty() ? "" : " (term " + term + ")")),
        component(component) {}
  int component;
};

struct SingularBasisError : Error {
  SingularBasisError() : Error("SingularBasis", "logarithmic basis vectors are dependent") {}
};

struct ResonantInputError : Error {
  ResonantInputError() : Error("ResonantInput", "right-hand side has a resonant term") {}
};

struct NotGradedZeroError : Error {
  explicit NotGradedZeroError(const std::string& msg = "f0 is not annihilated by S")
      : Error("NotGradedZero", msg) {}
};

struct NotInNormalFormError : Error {
  NotInNormalFormError() : Error("NotInNormalForm", "field has a non-resonant term") {}
};

struct NonDegenerateError : Error {
  NonDegenerateError() : Error("NonDegenerate", "semi-simple linear part vanishes") {}
};

struct NonSplitSpectrumError : Error {
  NonSplitSpectrumError() : Error("NonSplitSpectrum", "jet spectrum leaves the scalar field") {}
};

struct NotADerivationError : Error {
  NotADerivationError() : Error("NotADerivation", "matrix readback fails the Leibniz check") {}
};

struct BudgetExceededError : Error {
  explicit BudgetExceededError(long cap)
      : Error("BudgetExceeded", "enumeration shell exceeds cap " + std::to_string(cap)) {}
};

struct ZeroLambdaError : Error {
  ZeroLambdaError() : Error("ZeroLambda", "eigenvalue vector is zero") {}
};

struct ParseError : Error {
  ParseError(int line, int col, const std::string& msg)
      : Error("SyntaxError",
              "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
        line(line), col(col) {}
  int line, col;
};

struct UnknownVariableError : Error {
  explicit UnknownVariableError(const std::string& name)
      : Error("UnknownVariable", "unknown variable '" + name + "'") {}
};

}  // namespace brunonf

#endif
