#include "skewfork/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "skewfork/errors.hpp"

namespace skewfork {

void Family::validate(const Driver& d) const {
    if (!linear_test_mode) {
        const Interval r3 = d.bounds(a3);
        if (!(r3.lo > 0.0))
            throw PreconditionFailed("Family: a3 must be strictly positive on the base");
    }
    if (form == FamilyForm::GeneralH) {
        if (!h) throw PreconditionFailed("Family: general form requires an h term");
        if (d.trajectory()) h->validate(d);
    }
}

double rhs(const Family& f, const Driver& d, double t, double x) {
    const double lin = d.eval(f.a1, t) + f.lambda;
    if (f.linear_test_mode) return lin * x;
    double cubic = -d.eval(f.a3, t);
    if (f.form == FamilyForm::GeneralH && f.h) cubic += f.h->eval(d, t, x);
    const double quad = d.eval(f.a2, t) + f.mu;
    return ((cubic * x + quad) * x + lin) * x;
}

double rhs_x(const Family& f, const Driver& d, double t, double x) {
    const double lin = d.eval(f.a1, t) + f.lambda;
    if (f.linear_test_mode) return lin;
    const double quad = d.eval(f.a2, t) + f.mu;
    double v = -3.0 * d.eval(f.a3, t) * x * x + 2.0 * quad * x + lin;
    if (f.form == FamilyForm::GeneralH && f.h) {
        const double hv = f.h->eval(d, t, x);
        const double hx = f.h->dx(d, t, x);
        v += hx * x * x * x + 3.0 * hv * x * x;
    }
    return v;
}

namespace {

// Cash-Karp embedded 4(5) tableau.
constexpr double kA[6] = {0.0, 1.0 / 5, 3.0 / 10, 3.0 / 5, 1.0, 7.0 / 8};
constexpr double kB[6][5] = {
    {0, 0, 0, 0, 0},
    {1.0 / 5, 0, 0, 0, 0},
    {3.0 / 40, 9.0 / 40, 0, 0, 0},
    {3.0 / 10, -9.0 / 10, 6.0 / 5, 0, 0},
    {-11.0 / 54, 5.0 / 2, -70.0 / 27, 35.0 / 27, 0},
    {1631.0 / 55296, 175.0 / 512, 575.0 / 13824, 44275.0 / 110592, 253.0 / 4096}};
constexpr double kC5[6] = {37.0 / 378, 0, 250.0 / 621, 125.0 / 594, 0, 512.0 / 1771};
constexpr double kC4[6] = {2825.0 / 27648, 0,           18575.0 / 48384,
                           13525.0 / 55296, 277.0 / 14336, 1.0 / 4};

}  // namespace

double flow_map(const Family& f, const Driver& d, double t0, double x0, double t1,
                double tol, double guard) {
    if (!(tol > 0)) throw PreconditionFailed("flow_map: tol must be positive");
    if (t1 == t0 || x0 == 0.0) return x0;  // zero solution exactly invariant
    const double span = t1 - t0;
    const double dir = span > 0 ? 1.0 : -1.0;
    const double hmin = 1e-14 * std::fabs(span);

    double t = t0, x = x0;
    double h = dir * std::min(std::fabs(span), 0.1);
    double prev_err = 1.0;
    while (dir * (t1 - t) > 0) {
        // An accepted step clamped to the endpoint finishes the integration even
        // when t + h lands an ulp short of t1; otherwise the leftover sliver can
        // fall below hmin and masquerade as a step collapse.
        bool last = false;
        if (dir * (t + h - t1) >= 0) {
            h = t1 - t;
            last = true;
        }
        double k[6];
        k[0] = rhs(f, d, t, x);
        bool finite = std::isfinite(k[0]);
        for (int i = 1; i < 6 && finite; ++i) {
            double xi = x;
            for (int j = 0; j < i; ++j) xi += h * kB[i][j] * k[j];
            k[i] = rhs(f, d, t + kA[i] * h, xi);
            finite = std::isfinite(k[i]) && std::isfinite(xi);
        }
        double x5 = x, x4 = x;
        if (finite) {
            for (int i = 0; i < 6; ++i) {
                x5 += h * kC5[i] * k[i];
                x4 += h * kC4[i] * k[i];
            }
            finite = std::isfinite(x5) && std::isfinite(x4);
        }
        const double scale_tol = tol * (1.0 + std::fabs(x));
        const double err = finite ? std::fabs(x5 - x4) : 2.0 * scale_tol;
        if (err <= scale_tol) {
            t += h;
            x = x5;
            if (std::fabs(x) > guard) throw BlowUp(t);
            if (last) break;
            // PI-style step growth using the previous accepted error ratio.
            const double e = std::max(err / scale_tol, 1e-10);
            double fac = 0.9 * std::pow(e, -0.7 / 5.0) * std::pow(prev_err, 0.4 / 5.0);
            fac = std::clamp(fac, 0.2, 5.0);
            prev_err = e;
            h *= fac;
        } else {
            const double e = err / scale_tol;
            double fac = std::max(0.2, 0.9 * std::pow(e, -1.0 / 5.0));
            h *= fac;
        }
        if (std::fabs(h) < hmin) throw StepUnderflow(t);
    }
    return x;
}

double dissipativity_radius(const Family& f, const Driver& d) {
    const double r1 = f.linear_test_mode ? 1.0 : d.bounds(f.a3).lo;
    const Interval ra2 = d.bounds(f.a2);
    const double q = std::max(std::fabs(ra2.lo + f.mu), std::fabs(ra2.hi + f.mu));
    const double k2 = d.bounds(f.a1).hi;
    const double p = std::max(0.0, k2 + f.lambda);
    double rho = (q + std::sqrt(q * q + 4.0 * r1 * p)) / (2.0 * r1);
    rho = std::max(1.0, 1.1 * rho);

    if (!d.trajectory()) return rho;  // symbolic mode: bound-derived radius only

    const double span = d.natural_span();
    for (int attempt = 0; attempt < 12; ++attempt) {
        bool ok = true;
        for (int i = 0; i < 64 && ok; ++i) {
            const double t = span * i / 64.0;
            if (!(rhs(f, d, t, rho) < 0.0 && rhs(f, d, t, -rho) > 0.0)) ok = false;
        }
        if (ok) return rho;
        rho *= 2.0;
    }
    throw NotCoercive();
}

double dissipativity_radius(const Family& f, const Driver& d, double lambda, double mu) {
    return dissipativity_radius(f.with_params(lambda, mu), d);
}

}  // namespace skewfork
