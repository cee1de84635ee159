#pragma once

#include <optional>
#include <string>

#include "skewfork/base_flow.hpp"
#include "skewfork/hterm.hpp"

namespace skewfork {

enum class FamilyForm { Cubic, GeneralH };

// Right-hand side x' = -a3 x^3 + (a2 + mu) x^2 + (a1 + lambda) x, optionally
// with the perturbation (-a3 + h) x^3 of the general form.
struct Family {
    FamilyForm form = FamilyForm::Cubic;
    std::string a3 = "a3";
    std::string a2 = "a2";
    std::string a1 = "a1";
    std::optional<HTerm> h;
    double lambda = 0.0;
    double mu = 0.0;
    // Test hook: replaces rhs by (a1 + lambda) x for integrator validation only.
    bool linear_test_mode = false;

    Family with_params(double lam, double m) const {
        Family f = *this;
        f.lambda = lam;
        f.mu = m;
        return f;
    }

    // Checks a3 min > 0 via bounds and h(w, 0) = 0.
    void validate(const Driver& d) const;
};

double rhs(const Family& f, const Driver& d, double t, double x);
double rhs_x(const Family& f, const Driver& d, double t, double x);

// Adaptive embedded RK 4(5) from (t0, x0) to t1 (t1 < t0 integrates backward).
// Throws BlowUp when |x| exceeds the guard radius, StepUnderflow when the step
// collapses. x0 = 0 short-circuits: the zero solution is exactly invariant.
double flow_map(const Family& f, const Driver& d, double t0, double x0, double t1,
                double tol, double guard = 1e8);

// Radius of an absorbing interval [-rho, rho], from the positive root of
// r1 rho^2 - |a2 + mu|_max rho - (k2 + lambda)_+ with a 10% margin, validated
// by sampling and doubled on failure.
double dissipativity_radius(const Family& f, const Driver& d);
double dissipativity_radius(const Family& f, const Driver& d, double lambda, double mu);

}  // namespace skewfork
