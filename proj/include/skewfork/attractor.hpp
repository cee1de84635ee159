#pragma once

#include <string>
#include <vector>

#include "skewfork/dynamics.hpp"

namespace skewfork {

struct FiberGrid {
    std::vector<double> offsets;  // M >= 8, strictly increasing

    static FiberGrid uniform(const Driver& d, int m = 8);
    void validate() const;
};

struct AttractorSlice {
    struct Rec {
        double s = 0.0;
        double alpha = 0.0;
        double beta = 0.0;
    };
    std::vector<Rec> fibers;
    double horizon_used = 0.0;
    double residual = 0.0;  // last pullback increment (max over fibers)

    double beta_min() const;
    double beta_max() const;
    double alpha_abs_min() const;
    double alpha_abs_max() const;
};

struct EquilibriumSamples {
    std::vector<double> offsets;
    std::vector<double> values;
    std::vector<bool> converged;
};

struct PinchingMetrics {
    double upper_min = 0.0;
    double upper_max = 0.0;
    double lower_min = 0.0;  // of |alpha|
    double lower_max = 0.0;
};

struct AttractorConfig {
    double pullback_T0 = 8.0;
    int max_doublings = 16;  // horizon cap 2^16 * T0
    double ode_tol = 1e-8;
};

enum class BasinTarget { Lower, Upper };

// Pullback limits from +/- rho with horizon doubling; beta from +rho decreases
// monotonically, alpha from -rho increases; converged when the last increment
// drops below tol at every fiber.
AttractorSlice pullback_delimiters(const Family& f, const Driver& d, const FiberGrid& grid,
                                   double tol, const AttractorConfig& cfg = {});

// Basin-boundary equilibrium of the targeted attractive copy: bisection on the
// initial value, classifying forward orbits by which attractor they approach.
// target Upper -> kappa^2 = inf of the basin of beta; Lower -> kappa^1 = sup of
// the basin of alpha.
EquilibriumSamples basin_boundary(const Family& f, const Driver& d, const FiberGrid& grid,
                                  BasinTarget target, double tol,
                                  const AttractorConfig& cfg = {});

// Repulsive middle equilibrium by time-reversed integration from the midpoint
// of the two attractive copies (pullback in reversed time).
EquilibriumSamples repulsive_middle(const Family& f, const Driver& d, const FiberGrid& grid,
                                    double tol, const AttractorConfig& cfg = {});

PinchingMetrics pinching_metrics(const AttractorSlice& slice);

}  // namespace skewfork
