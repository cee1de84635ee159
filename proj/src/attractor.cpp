#include "skewfork/attractor.hpp"

#include <algorithm>
#include <cmath>

#include "skewfork/errors.hpp"

namespace skewfork {

FiberGrid FiberGrid::uniform(const Driver& d, int m) {
    FiberGrid g;
    const double span = d.natural_span();
    for (int j = 0; j < m; ++j) g.offsets.push_back(span * j / m);
    g.validate();
    return g;
}

void FiberGrid::validate() const {
    if (offsets.size() < 8) throw PreconditionFailed("FiberGrid: need M >= 8 fibers");
    for (size_t i = 1; i < offsets.size(); ++i)
        if (!(offsets[i] > offsets[i - 1]))
            throw PreconditionFailed("FiberGrid: offsets must be strictly increasing");
}

double AttractorSlice::beta_min() const {
    double v = fibers.front().beta;
    for (const auto& r : fibers) v = std::min(v, r.beta);
    return v;
}

double AttractorSlice::beta_max() const {
    double v = fibers.front().beta;
    for (const auto& r : fibers) v = std::max(v, r.beta);
    return v;
}

double AttractorSlice::alpha_abs_min() const {
    double v = std::fabs(fibers.front().alpha);
    for (const auto& r : fibers) v = std::min(v, std::fabs(r.alpha));
    return v;
}

double AttractorSlice::alpha_abs_max() const {
    double v = std::fabs(fibers.front().alpha);
    for (const auto& r : fibers) v = std::max(v, std::fabs(r.alpha));
    return v;
}

AttractorSlice pullback_delimiters(const Family& f, const Driver& d, const FiberGrid& grid,
                                   double tol, const AttractorConfig& cfg) {
    grid.validate();
    const double rho = dissipativity_radius(f, d);
    const double guard = 1e3 * rho;
    AttractorSlice slice;
    slice.residual = 0.0;
    slice.horizon_used = 0.0;
    // A side may also stop early once its value is inside the pinch threshold:
    // the pullback limits are monotone with 0 <= beta <= current (resp. for
    // alpha), so the limit is certified to lie in the "collapsed to M0" band
    // even when the approach is only algebraic (nonhyperbolic zero).
    const double tol_pinch = 10.0 * tol;
    for (double s : grid.offsets) {
        double T = cfg.pullback_T0;
        double beta = flow_map(f, d, s - T, rho, s, cfg.ode_tol, guard);
        double alpha = flow_map(f, d, s - T, -rho, s, cfg.ode_tol, guard);
        double residual = 2.0 * rho;
        bool done = false;
        for (int k = 1; k <= cfg.max_doublings; ++k) {
            T = cfg.pullback_T0 * std::ldexp(1.0, k);
            const double b2 = flow_map(f, d, s - T, rho, s, cfg.ode_tol, guard);
            const double a2 = flow_map(f, d, s - T, -rho, s, cfg.ode_tol, guard);
            const double db = std::fabs(beta - b2), da = std::fabs(alpha - a2);
            beta = b2;
            alpha = a2;
            const bool beta_done = db < tol || std::fabs(b2) < tol_pinch;
            const bool alpha_done = da < tol || std::fabs(a2) < tol_pinch;
            if (beta_done && alpha_done) {
                // Residual: last increment, or the enclosure width for a side
                // certified only by the pinch bound.
                residual = std::max(db < tol ? db : std::fabs(b2),
                                    da < tol ? da : std::fabs(a2));
                done = true;
                break;
            }
        }
        if (!done) throw NoConvergence(T, "pullback stalled at horizon cap");
        slice.fibers.push_back({s, alpha, beta});
        slice.horizon_used = std::max(slice.horizon_used, T);
        slice.residual = std::max(slice.residual, residual);
    }
    return slice;
}

PinchingMetrics pinching_metrics(const AttractorSlice& slice) {
    PinchingMetrics m;
    m.upper_min = slice.beta_min();
    m.upper_max = slice.beta_max();
    m.lower_min = slice.alpha_abs_min();
    m.lower_max = slice.alpha_abs_max();
    return m;
}

namespace {

enum class Approach { Target, Other, Undecided };

// Forward classification: does the orbit through (s, x0) approach the target
// attractor orbit (within tol) before settling on the other one?
Approach classify_orbit(const Family& f, const Driver& d, double s, double x0,
                        double target_val, double other_val, double tol, double tol_sep,
                        double guard, const AttractorConfig& cfg) {
    const double cap = cfg.pullback_T0 * std::ldexp(1.0, cfg.max_doublings);
    double t = s, x = x0, tv = target_val, ov = other_val;
    while (t - s < cap) {
        if (std::fabs(x - tv) < tol) return Approach::Target;
        if (std::fabs(x - tv) > tol_sep &&
            (std::fabs(x - ov) < tol || std::fabs(x) < tol))
            return Approach::Other;
        const double t1 = t + cfg.pullback_T0;
        x = flow_map(f, d, t, x, t1, cfg.ode_tol, guard);
        tv = flow_map(f, d, t, tv, t1, cfg.ode_tol, guard);
        ov = flow_map(f, d, t, ov, t1, cfg.ode_tol, guard);
        t = t1;
    }
    return Approach::Undecided;
}

}  // namespace

EquilibriumSamples basin_boundary(const Family& f, const Driver& d, const FiberGrid& grid,
                                  BasinTarget target, double tol,
                                  const AttractorConfig& cfg) {
    grid.validate();
    const double tol_sep = 1e3 * tol;
    const double rho = dissipativity_radius(f, d);
    const double guard = 1e3 * rho;
    AttractorSlice slice = pullback_delimiters(f, d, grid, tol, cfg);
    if (target == BasinTarget::Upper && !(slice.beta_min() > tol_sep))
        throw AmbiguousBasin("no upper copy distinct from 0");
    if (target == BasinTarget::Lower && !(slice.alpha_abs_min() > tol_sep))
        throw AmbiguousBasin("no lower copy distinct from 0");

    EquilibriumSamples out;
    for (size_t i = 0; i < grid.offsets.size(); ++i) {
        const double s = grid.offsets[i];
        const auto& rec = slice.fibers[i];
        // The attractor the bisection homes in on, and the opposing limit.
        const double target_val = (target == BasinTarget::Upper) ? rec.beta : rec.alpha;
        double other_val;
        if (target == BasinTarget::Upper)
            other_val = (slice.alpha_abs_min() > tol_sep) ? rec.alpha : 0.0;
        else
            other_val = (slice.beta_min() > tol_sep) ? rec.beta : 0.0;

        double inside = target_val;  // classified Target by construction
        double outside = other_val;  // classified Other by construction
        bool clean = true;
        for (int it = 0; it < 60 && std::fabs(inside - outside) > tol; ++it) {
            const double mid = 0.5 * (inside + outside);
            const Approach a = classify_orbit(f, d, s, mid, target_val, other_val, tol,
                                              tol_sep, guard, cfg);
            if (a == Approach::Target) {
                inside = mid;
            } else {
                outside = mid;
                if (a == Approach::Undecided) clean = false;
            }
        }
        out.offsets.push_back(s);
        out.values.push_back(0.5 * (inside + outside));
        out.converged.push_back(clean && std::fabs(inside - outside) <= tol);
    }
    return out;
}

EquilibriumSamples repulsive_middle(const Family& f, const Driver& d, const FiberGrid& grid,
                                    double tol, const AttractorConfig& cfg) {
    grid.validate();
    const double tol_sep = 1e3 * tol;
    const double rho = dissipativity_radius(f, d);
    const double guard = 1e3 * rho;
    AttractorSlice slice = pullback_delimiters(f, d, grid, tol, cfg);
    const bool upper_distinct = slice.beta_min() > tol_sep;
    const bool lower_distinct = slice.alpha_abs_min() > tol_sep;
    if (!upper_distinct && !lower_distinct)
        throw BlowUp(0.0);  // single minimal set: no interior to pull back in

    EquilibriumSamples out;
    for (size_t i = 0; i < grid.offsets.size(); ++i) {
        const double s = grid.offsets[i];
        const auto& rec = slice.fibers[i];
        const double lower_val = lower_distinct ? rec.alpha : 0.0;
        const double upper_val = upper_distinct ? rec.beta : 0.0;
        double T = cfg.pullback_T0;
        auto estimate = [&](double horizon) {
            // Midpoint of the attractive copies at time s + horizon, pulled back.
            const double lo = flow_map(f, d, s, lower_val, s + horizon, cfg.ode_tol, guard);
            const double hi = flow_map(f, d, s, upper_val, s + horizon, cfg.ode_tol, guard);
            return flow_map(f, d, s + horizon, 0.5 * (lo + hi), s, cfg.ode_tol, guard);
        };
        double kappa = estimate(T);
        bool done = false;
        double increment = 0.0;
        for (int k = 1; k <= cfg.max_doublings; ++k) {
            T = cfg.pullback_T0 * std::ldexp(1.0, k);
            const double k2 = estimate(T);
            increment = std::fabs(kappa - k2);
            kappa = k2;
            if (increment < tol) {
                done = true;
                break;
            }
        }
        if (!done && std::fabs(kappa) > tol_sep)
            throw NoConvergence(T, "repulsive middle pullback stalled away from zero");
        if (done && !(kappa > rec.alpha - 5.0 * tol && kappa < rec.beta + 5.0 * tol))
            throw Inconclusive("repulsive middle escaped the attractor interval");
        out.offsets.push_back(s);
        out.values.push_back(kappa);
        out.converged.push_back(done);
    }
    return out;
}

}  // namespace skewfork
