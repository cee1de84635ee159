#include "skewfork/twoparam.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "skewfork/errors.hpp"

namespace skewfork {

namespace {

// Fallback for horizon-capped pullbacks (algebraic decay near nonhyperbolic
// zero): decide the upper copy with constant semiequilibria. A constant c with
// rhs(., c) > 0 everywhere is a lower solution, so the upper delimiter stays
// above c; if instead rhs is negative on the whole band between the pinch
// threshold and the capped values, the delimiter keeps decreasing below it.
bool upper_copy_by_semiequilibria(const Family& fam, const Driver& d, const FiberGrid& grid,
                                  const TwoParamConfig& cfg) {
    const double rho = dissipativity_radius(fam, d);
    const double guard = 1e3 * rho;
    const double t_cap =
        cfg.attractor.pullback_T0 * std::ldexp(1.0, cfg.attractor.max_doublings);
    // Capped pullback values: monotone upper bounds for the true delimiters.
    std::vector<double> caps;
    for (double s : grid.offsets)
        caps.push_back(flow_map(fam, d, s - t_cap, rho, s, cfg.attractor.ode_tol, guard));
    const double bmin = *std::min_element(caps.begin(), caps.end());
    const double bmax = *std::max_element(caps.begin(), caps.end());
    if (bmin <= cfg.tol_pinch()) return false;

    const double span = d.natural_span();
    auto rhs_extreme = [&](double x, bool want_min) {
        double v = rhs(fam, d, 0.0, x);
        for (int i = 1; i < 64; ++i) {
            const double r = rhs(fam, d, span * i / 64.0, x);
            v = want_min ? std::min(v, r) : std::max(v, r);
        }
        return v;
    };
    if (bmin > cfg.tol_sep()) {
        // Look for a constant lower solution separating the copy from zero.
        for (int i = 1; i <= 24; ++i) {
            const double c =
                cfg.tol_sep() * std::pow(0.999 * bmin / cfg.tol_sep(), i / 24.0);
            if (rhs_extreme(c, true) > 0.0) {
                // The capped values bracket the copy between c and caps[j]; use
                // them as accepted exponent samples (the band tolerance absorbs
                // the near-threshold error).
                EquilibriumSamples eq;
                for (size_t j = 0; j < caps.size(); ++j) {
                    eq.offsets.push_back(grid.offsets[j]);
                    eq.values.push_back(caps[j]);
                    eq.converged.push_back(true);
                }
                const ExponentReport rep =
                    lyapunov_on_equilibrium(fam, d, &eq, false, cfg.spectrum);
                return rep.value < cfg.spectrum.tol_hyp;
            }
        }
    }
    // Look for a uniformly negative band: the delimiter then sinks to the pinch
    // threshold eventually even though the cap was reached first.
    bool all_negative = true;
    for (int i = 0; i <= 24 && all_negative; ++i) {
        const double x =
            cfg.tol_pinch() * std::pow(1.001 * bmax / cfg.tol_pinch(), i / 24.0);
        all_negative = rhs_extreme(x, false) < 0.0;
    }
    if (all_negative) return false;
    throw Inconclusive("upper_copy_exists: pullback stalled, no semiequilibrium certificate");
}

}  // namespace

bool upper_copy_exists(const Family& f, const Driver& d, double lambda, double mu,
                       const TwoParamConfig& cfg) {
    const Family fam = f.with_params(lambda, mu);
    const FiberGrid grid = FiberGrid::uniform(d, cfg.fibers);
    AttractorSlice slice;
    try {
        slice = pullback_delimiters(fam, d, grid, cfg.pull_tol, cfg.attractor);
    } catch (const NoConvergence&) {
        return upper_copy_by_semiequilibria(fam, d, grid, cfg);
    }
    const double bmin = slice.beta_min();
    if (bmin <= cfg.tol_pinch()) return false;
    if (bmin <= cfg.tol_sep())
        throw Inconclusive("upper_copy_exists: beta in the separation gray zone");
    EquilibriumSamples eq;
    for (const auto& r : slice.fibers) {
        eq.offsets.push_back(r.s);
        eq.values.push_back(r.beta);
        eq.converged.push_back(true);
    }
    const ExponentReport rep = lyapunov_on_equilibrium(fam, d, &eq, false, cfg.spectrum);
    // A genuinely repulsive exponent disqualifies the copy; values inside the
    // hyperbolicity band are accepted so the threshold itself (where the
    // exponent vanishes) is still counted as existing.
    return rep.value < cfg.spectrum.tol_hyp;
}

namespace {

enum class Tri { False, True, Unknown };

// All-probes predicate: False dominates Unknown (one failing probe settles it).
template <typename Pred>
Tri probe_all(const std::vector<double>& offsets, const Pred& one) {
    bool unknown = false;
    for (double off : offsets) {
        try {
            if (!one(off)) return Tri::False;
        } catch (const Inconclusive&) {
            unknown = true;
        }
    }
    return unknown ? Tri::Unknown : Tri::True;
}

// Threshold bisection with Unknown treated as not-yet-established, so the
// returned value is the infimum of solidly-true parameters.
template <typename Pred>
double bisect_threshold(double lo, double hi, double tol, const Pred& p,
                        const char* what) {
    if (p(hi) != Tri::True)
        throw BracketFailed(std::string(what) + ": predicate false at upper bracket");
    if (p(lo) == Tri::True)
        throw BracketFailed(std::string(what) + ": predicate already true at lower bracket");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (p(mid) == Tri::True)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double mu_hat(const Family& f, const Driver& d, double lambda0, const TwoParamConfig& cfg) {
    const SpectrumInterval sp = sacker_sell(d, f.a1);
    if (lambda0 > -sp.lo + cfg.tol)
        throw PreconditionFailed("mu_hat: lambda0 must not exceed lambda_+ of sp(a1)");
    const std::vector<double> offs = cfg.offsets();
    auto pred = [&](double mu) {
        return probe_all(offs, [&](double off) {
            return upper_copy_exists(f, d, lambda0, mu + off, cfg);
        });
    };
    return bisect_threshold(cfg.mu_window.lo, cfg.mu_window.hi, cfg.tol, pred, "mu_hat");
}

double lambda_hat(const Family& f, const Driver& d, double mu0, const TwoParamConfig& cfg) {
    const std::vector<double> offs = cfg.offsets();
    auto pred = [&](double lambda) {
        return probe_all(offs, [&](double off) {
            return upper_copy_exists(f, d, lambda, mu0 + off, cfg);
        });
    };
    return bisect_threshold(cfg.lambda_window.lo, cfg.lambda_window.hi, cfg.tol, pred,
                            "lambda_hat");
}

LawReport verify_laws(const Family& f, const Driver& d,
                      const std::vector<double>& lambda0_list,
                      const std::vector<double>& mu_list, const TwoParamConfig& cfg) {
    LawReport rep;
    for (double l0 : lambda0_list) {
        const double m = mu_hat(f, d, l0, cfg);
        const double back = lambda_hat(f, d, m, cfg);
        rep.mu_hats.push_back(m);
        rep.round_trips.push_back(back);
        if (std::fabs(back - l0) > 2.0 * cfg.tol)
            throw LawViolated("lambda_hat(mu_hat(lambda0)) = lambda0", back - l0);
    }
    rep.identity_ok = true;
    for (double m : mu_list) rep.lambda_hats.push_back(lambda_hat(f, d, m, cfg));
    for (size_t i = 1; i < rep.lambda_hats.size(); ++i)
        if (rep.lambda_hats[i] > rep.lambda_hats[i - 1] + 2.0 * cfg.tol)
            throw LawViolated("lambda_hat nonincreasing",
                              rep.lambda_hats[i] - rep.lambda_hats[i - 1]);
    rep.monotone_ok = true;
    return rep;
}

DiagramReport realize_diagram(const Family& f, const Driver& d, double lambda0,
                              const TwoParamConfig& cfg, const ScanConfig& scan) {
    const SpectrumInterval sp = sacker_sell(d, f.a1);
    const double lam_plus = -sp.lo, lam_minus = -sp.hi;
    if (lambda0 > lam_plus + cfg.tol)
        throw PreconditionFailed("realize_diagram: lambda0 must not exceed lambda_+");
    Pattern expected;
    if (lambda0 < lam_minus - cfg.tol)
        expected = Pattern::SaddleNodeTranscritical;
    else if (lambda0 < lam_plus - cfg.tol)
        expected = Pattern::GeneralizedPitchfork;
    else
        expected = Pattern::ClassicalPitchfork;

    DiagramReport rep;
    if (!d.trajectory()) {
        rep.pattern = Pattern::Unresolved;
        rep.expected_pattern = expected;
        rep.note =
            "symbolic driver: expected pattern only, trajectory-level verification "
            "unavailable";
        return rep;
    }
    const double m = mu_hat(f, d, lambda0, cfg);
    Family fam = f;
    fam.mu = m;
    fam.lambda = 0.0;
    const double lo = lambda0 - 0.75;
    const double hi = lam_plus + 0.5;
    rep = scan_lambda(fam, d, lo, hi, scan);
    rep.expected_pattern = expected;
    if (!rep.note.empty()) rep.note += "; ";
    rep.note += "realized with mu = mu_hat(lambda0) = " + std::to_string(m) +
                " (single-threshold bisection assumed)";
    return rep;
}

}  // namespace skewfork
