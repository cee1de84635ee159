#include "skewfork/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "skewfork/errors.hpp"

namespace skewfork {

ExponentReport classify_exponent(double value, double tol_hyp) {
    ExponentReport r;
    r.value = value;
    if (value < -tol_hyp)
        r.classification = Hyperbolicity::Attractive;
    else if (value > tol_hyp)
        r.classification = Hyperbolicity::Repulsive;
    else
        r.classification = Hyperbolicity::Nonhyperbolic;
    return r;
}

namespace {

// Averages g(t, x(t)) along the orbit from (t0, x0), extending the horizon by
// doubling until successive averages agree to tol. dir = -1 integrates backward.
// The sampling step divides the driver's natural span so periodic orbits are
// averaged over whole periods (their Birkhoff average is exact after one).
double orbit_average(const Family& f, const Driver& d, double t0, double x0, double dir,
                     double guard, const SpectrumConfig& cfg,
                     const std::function<double(double, double)>& g) {
    double block = (d.kind == DriverKind::Periodic) ? d.period : 16.0;
    const int steps_per_block = static_cast<int>(std::ceil(block / 0.1));
    const double h = dir * block / steps_per_block;
    double t = t0, x = x0, integral = 0.0;
    double T = block;
    double prev_avg = g(t0, x0);
    for (;;) {
        while (std::fabs(t - t0) < T - 1e-9) {
            // Simpson on [t, t+h] with the orbit regenerated by the flow map.
            const double xm = flow_map(f, d, t, x, t + 0.5 * h, cfg.ode_tol, guard);
            const double xe = flow_map(f, d, t + 0.5 * h, xm, t + h, cfg.ode_tol, guard);
            integral += (h / 6.0) * (g(t, x) + 4.0 * g(t + 0.5 * h, xm) + g(t + h, xe));
            t += h;
            x = xe;
        }
        const double avg = integral / (t - t0);
        if (std::fabs(avg - prev_avg) < cfg.tol) return avg;
        prev_avg = avg;
        if (T >= cfg.horizon)
            throw NoConvergence(cfg.horizon, "Birkhoff average oscillating at horizon cap");
        T *= 2.0;
    }
}

}  // namespace

ExponentReport lyapunov_on_equilibrium(const Family& f, const Driver& d,
                                       const EquilibriumSamples* eq, bool reversed,
                                       const SpectrumConfig& cfg) {
    if (eq == nullptr) {
        // Zero equilibrium: exponent is the mean of a1 plus lambda.
        double mean;
        switch (d.kind) {
            case DriverKind::Autonomous:
                mean = d.eval(f.a1, 0.0);
                break;
            case DriverKind::Periodic: {
                const CoefficientFn& a = d.coeff(f.a1);
                const double o = d.origin;
                mean = integrate([&](double t) { return a.value(o + t); }, 0.0, d.period) /
                       d.period;
                break;
            }
            case DriverKind::QuasiPeriodic:
                mean = d.birkhoff(f.a1, cfg.horizon, d.natural_span()).mean;
                break;
            default:
                throw SymbolicDriver();
        }
        return classify_exponent(mean + f.lambda, cfg.tol_hyp);
    }
    const double rho = dissipativity_radius(f, d);
    const double guard = 1e3 * rho;
    size_t i0 = 0;
    while (i0 < eq->converged.size() && !eq->converged[i0]) ++i0;
    if (i0 == eq->offsets.size())
        throw PreconditionFailed("lyapunov_on_equilibrium: no converged fiber sample");
    const double avg = orbit_average(
        f, d, eq->offsets[i0], eq->values[i0], reversed ? -1.0 : 1.0, guard, cfg,
        [&](double t, double x) { return rhs_x(f, d, t, x); });
    return classify_exponent(avg, cfg.tol_hyp);
}

SpectrumInterval sacker_sell(const Driver& d, const std::string& coeff, double horizon,
                             double window) {
    SpectrumInterval sp;
    const CoefficientFn& a = d.coeff(coeff);
    switch (d.kind) {
        case DriverKind::Autonomous: {
            const double v = a.value(d.origin);
            sp = {v, v, true};
            break;
        }
        case DriverKind::Periodic: {
            const double o = d.origin;
            const double mean =
                integrate([&](double t) { return a.value(o + t); }, 0.0, d.period) / d.period;
            sp = {mean, mean, true};
            break;
        }
        case DriverKind::SymbolicFiniteErgodic: {
            const TableEntry* e = a.table();
            if (!e) throw SymbolicDriver("coefficient has no measure table");
            const auto [lo, hi] = std::minmax_element(e->integrals.begin(), e->integrals.end());
            sp = {*lo, *hi, true};
            break;
        }
        case DriverKind::QuasiPeriodic: {
            if (window <= 0.0) window = d.natural_span();
            const BirkhoffResult b = d.birkhoff(coeff, horizon, window);
            sp = {b.window_min, b.window_max, false};
            break;
        }
    }
    return sp;
}

ExponentSumReport check_exponent_sum(const Family& f, const Driver& d, double mu,
                                     double nu, double lambda0,
                                     const EquilibriumSamples& eq1,
                                     const EquilibriumSamples& eq2, double horizon,
                                     const SpectrumConfig& cfg) {
    if (!(lambda0 > 0)) throw PreconditionFailed("check_exponent_sum: need lambda0 > 0");
    if (eq1.values.empty() || eq1.values.size() != eq2.values.size())
        throw PreconditionFailed("check_exponent_sum: fiber sample mismatch");
    const bool positive = eq1.values[0] > 0;
    for (size_t i = 0; i < eq1.values.size(); ++i) {
        const double k1 = eq1.values[i], k2 = eq2.values[i];
        const bool ok = positive ? (0 < k2 && k2 < k1) : (k1 < k2 && k2 < 0);
        if (!ok) throw OrderingViolated("check_exponent_sum: 0 < kappa2 < kappa1 (or mirrored) fails");
    }
    if (positive ? !(nu < mu) : !(mu < nu))
        throw OrderingViolated("check_exponent_sum: nu < mu (or mirrored) fails");

    SpectrumConfig c = cfg;
    c.horizon = std::max(horizon, 16.0);
    const Family f1 = f.with_params(0.0, mu);
    const Family f2 = f.with_params(-lambda0, nu);
    const double rho = std::max(dissipativity_radius(f1, d), dissipativity_radius(f2, d));
    const double guard = 1e3 * rho;
    const double avg1 = [&] {
        return orbit_average(f1, d, eq1.offsets[0], eq1.values[0], 1.0, guard, c,
                             [&](double t, double x) { return rhs_x(f1, d, t, x); });
    }();
    const double avg2 = [&] {
        return orbit_average(f2, d, eq2.offsets[0], eq2.values[0], 1.0, guard, c,
                             [&](double t, double x) { return rhs_x(f2, d, t, x); });
    }();
    ExponentSumReport r;
    r.lhs = avg1 + avg2;
    r.holds = r.lhs < 0.0;
    return r;
}

}  // namespace skewfork
