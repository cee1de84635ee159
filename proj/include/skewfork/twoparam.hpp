#pragma once

#include <vector>

#include "skewfork/diagram.hpp"

namespace skewfork {

struct TwoParamConfig {
    Interval lambda_window{-4.0, 1.0};
    Interval mu_window{-1.0, 6.0};
    std::vector<double> probe_offsets;  // empty -> {tol, 2 tol, 10 tol, 0.1, 1.0}
    double tol = 1e-3;                  // bisection resolution on the parameter
    double pull_tol = 1e-6;
    int fibers = 8;
    AttractorConfig attractor;
    SpectrumConfig spectrum;

    double tol_sep() const { return 1e3 * pull_tol; }
    double tol_pinch() const { return 10.0 * pull_tol; }
    std::vector<double> offsets() const {
        if (!probe_offsets.empty()) return probe_offsets;
        return {tol, 2.0 * tol, 10.0 * tol, 0.1, 1.0};
    }
};

// True iff the pullback upper delimiter stays uniformly separated from 0 and
// its exponent is not repulsive. Throws Inconclusive in the separation gray
// zone (between the pinch and separation thresholds) or when the pullback
// stalls; bisections treat that as "not yet established".
bool upper_copy_exists(const Family& f, const Driver& d, double lambda, double mu,
                       const TwoParamConfig& cfg = {});

// Threshold in mu (at fixed lambda0) above which the upper hyperbolic copy
// exists at every probe offset; bisection inside cfg.mu_window.
double mu_hat(const Family& f, const Driver& d, double lambda0,
              const TwoParamConfig& cfg = {});

// Symmetric threshold in lambda at fixed mu0.
double lambda_hat(const Family& f, const Driver& d, double mu0,
                  const TwoParamConfig& cfg = {});

struct LawReport {
    std::vector<double> mu_hats;          // per lambda0
    std::vector<double> round_trips;      // lambda_hat(mu_hat(lambda0))
    std::vector<double> lambda_hats;      // per mu in mu_list
    bool identity_ok = false;
    bool monotone_ok = false;
};

// Checks lambda_hat(mu_hat(l0)) = l0 within 2 tol and that lambda_hat is
// nonincreasing over mu_list; throws LawViolated on failure.
LawReport verify_laws(const Family& f, const Driver& d,
                      const std::vector<double>& lambda0_list,
                      const std::vector<double>& mu_list, const TwoParamConfig& cfg = {});

// Realizes the one-parameter family with mu = mu_hat(lambda0) and scans it in
// lambda; for symbolic drivers only the expected pattern is reported (the
// trajectory-level verification needs a pointwise-evaluable driver).
DiagramReport realize_diagram(const Family& f, const Driver& d, double lambda0,
                              const TwoParamConfig& cfg = {}, const ScanConfig& scan = {});

}  // namespace skewfork
