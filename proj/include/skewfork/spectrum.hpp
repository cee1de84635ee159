#pragma once

#include <optional>
#include <string>

#include "skewfork/attractor.hpp"

namespace skewfork {

struct SpectrumInterval {
    double lo = 0.0;
    double hi = 0.0;
    bool exact = false;
};

enum class Hyperbolicity { Attractive, Repulsive, Nonhyperbolic };

struct ExponentReport {
    double value = 0.0;
    Hyperbolicity classification = Hyperbolicity::Nonhyperbolic;
};

struct SpectrumConfig {
    double horizon = 4096.0;   // Birkhoff-average cap
    double tol = 1e-5;         // convergence of successive doubled averages
    double tol_hyp = 1e-3;     // hyperbolicity threshold
    double ode_tol = 1e-8;
};

ExponentReport classify_exponent(double value, double tol_hyp);

// Birkhoff average of rhs_x along the orbit through an equilibrium sample
// (eq == nullptr means the zero equilibrium, whose exponent is the a1-mean
// plus lambda). reversed = true integrates backward (repulsive copies).
ExponentReport lyapunov_on_equilibrium(const Family& f, const Driver& d,
                                       const EquilibriumSamples* eq, bool reversed,
                                       const SpectrumConfig& cfg = {});

// Sacker-Sell interval of a scalar coefficient: exact point for autonomous /
// periodic drivers, exact [min_i, max_i] for symbolic tables, sliding-window
// estimate for quasi-periodic drivers.
SpectrumInterval sacker_sell(const Driver& d, const std::string& coeff,
                             double horizon = 4096.0, double window = 0.0);

struct ExponentSumReport {
    bool holds = false;
    double lhs = 0.0;
};

// Validator of the two-parameter exponent-sum inequality:
// avg(f_x(kappa1) + 2 mu kappa1) + avg(f_x(kappa2) - lambda0 + 2 nu kappa2) < 0.
ExponentSumReport check_exponent_sum(const Family& f, const Driver& d, double mu,
                                     double nu, double lambda0,
                                     const EquilibriumSamples& eq1,
                                     const EquilibriumSamples& eq2, double horizon,
                                     const SpectrumConfig& cfg = {});

}  // namespace skewfork
