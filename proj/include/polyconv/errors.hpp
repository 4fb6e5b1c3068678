#ifndef POLYCONV_ERRORS_HPP
#define POLYCONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyconv {

// Base of every error thrown by the library. `code()` is a stable
// machine-readable identifier used by the CLI's JSON error objects.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& what) : Error("invalid_input", what) {}
};

struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& what) : Error("invalid_parameter", what) {}
};

struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& what) : Error("degenerate_input", what) {}
};

struct CurveThroughOrigin : Error {
    explicit CurveThroughOrigin(const std::string& what) : Error("curve_through_origin", what) {}
};

struct UndersampledCurve : Error {
    explicit UndersampledCurve(const std::string& what) : Error("undersampled_curve", what) {}
};

struct NotTransverse : Error {
    explicit NotTransverse(const std::string& what) : Error("not_transverse", what) {}
};

struct NotTotallyReal : Error {
    explicit NotTotallyReal(const std::string& what) : Error("not_totally_real", what) {}
};

struct EigenvalueDegenerate : Error {
    explicit EigenvalueDegenerate(const std::string& what) : Error("eigenvalue_degenerate", what) {}
};

struct CommutatorNotPositive : Error {
    explicit CommutatorNotPositive(const std::string& what) : Error("commutator_not_positive", what) {}
};

// Carries the residual |a2^2 - 3 a1 a3| that failed the factorability test.
struct NotFactorable : Error {
    NotFactorable(const std::string& what, double residual)
        : Error("not_factorable", what), residual(residual) {}
    double residual;
};

struct BranchUndefined : Error {
    explicit BranchUndefined(const std::string& what) : Error("branch_undefined", what) {}
};

struct RootOnCircle : Error {
    explicit RootOnCircle(const std::string& what) : Error("root_on_circle", what) {}
};

struct NotIsolatedSingularity : Error {
    explicit NotIsolatedSingularity(const std::string& what) : Error("not_isolated_singularity", what) {}
};

struct Undersampled : Error {
    explicit Undersampled(const std::string& what) : Error("undersampled", what) {}
};

// Carries the name of the hypothesis that failed a certificate's gate.
struct HypothesisViolated : Error {
    HypothesisViolated(std::string hypothesis, const std::string& what)
        : Error("hypothesis_violated", what), hypothesis(std::move(hypothesis)) {}
    std::string hypothesis;
};

} // namespace polyconv

#endif
