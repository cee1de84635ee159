#pragma once

#include <stdexcept>
#include <string>

namespace skewfork {

// Base class for all laboratory errors so the CLI can map them to exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SymbolicDriver : Error {
    explicit SymbolicDriver(const std::string& what = "symbolic driver has no pointwise evaluation")
        : Error(what) {}
};

struct UnknownCoefficient : Error {
    explicit UnknownCoefficient(const std::string& id)
        : Error("unknown coefficient id: " + id) {}
};

struct NotDifferentiable : Error {
    explicit NotDifferentiable(const std::string& what = "coefficient has no derivative representation")
        : Error(what) {}
};

struct BlowUp : Error {
    double t_escape;
    explicit BlowUp(double t)
        : Error("solution escaped guard radius at t = " + std::to_string(t)), t_escape(t) {}
};

struct StepUnderflow : Error {
    explicit StepUnderflow(double t)
        : Error("integrator step underflow at t = " + std::to_string(t)) {}
};

struct NotCoercive : Error {
    explicit NotCoercive(const std::string& what = "dissipativity radius validation failed past cap")
        : Error(what) {}
};

struct NoConvergence : Error {
    double horizon_cap;
    explicit NoConvergence(double cap, const std::string& what = "no convergence within horizon cap")
        : Error(what), horizon_cap(cap) {}
};

struct AmbiguousBasin : Error {
    explicit AmbiguousBasin(const std::string& what = "orbit approaches neither attractor within horizon cap")
        : Error(what) {}
};

struct OrderingViolated : Error {
    explicit OrderingViolated(const std::string& what) : Error(what) {}
};

struct Inconclusive : Error {
    explicit Inconclusive(const std::string& reason) : Error(reason) {}
};

struct PatternUnresolved : Error {
    explicit PatternUnresolved(const std::string& what) : Error(what) {}
};

struct NotCPDriver : Error {
    explicit NotCPDriver(const std::string& what) : Error(what) {}
};

struct EstimatedSpectrumOnly : Error {
    explicit EstimatedSpectrumOnly(const std::string& what = "driver kind yields only estimated spectrum")
        : Error(what) {}
};

struct InconsistentBounds : Error {
    explicit InconsistentBounds(const std::string& what) : Error(what) {}
};

struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& what) : Error(what) {}
};

struct HypothesisHFails : Error {
    explicit HypothesisHFails(const std::string& which) : Error("hypothesis (H) fails: " + which) {}
};

struct RouteInequalityFails : Error {
    explicit RouteInequalityFails(const std::string& what) : Error(what) {}
};

struct NoSignChange : Error {
    explicit NoSignChange(const std::string& what = "coefficient does not change sign on the period")
        : Error(what) {}
};

struct BisectionFailed : Error {
    explicit BisectionFailed(const std::string& what) : Error(what) {}
};

struct EpsilonTooLarge : Error {
    explicit EpsilonTooLarge(const std::string& what) : Error(what) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what = "projection matrix fails the invertibility check")
        : Error(what) {}
};

struct TargetUnreachable : Error {
    explicit TargetUnreachable(const std::string& what) : Error(what) {}
};

struct BracketFailed : Error {
    explicit BracketFailed(const std::string& what) : Error(what) {}
};

struct LawViolated : Error {
    std::string which;
    double witness;
    LawViolated(const std::string& w, double value)
        : Error("law violated: " + w + " (witness " + std::to_string(value) + ")"),
          which(w), witness(value) {}
};

struct ConfigInvalid : Error {
    std::string field;
    ConfigInvalid(const std::string& f, const std::string& what)
        : Error("invalid config at '" + f + "': " + what), field(f) {}
};

}  // namespace skewfork
