#include "skewfork/base_flow.hpp"

#include <cmath>

#include "skewfork/errors.hpp"

namespace skewfork {

const CoefficientFn& Driver::coeff(const std::string& id) const {
    auto it = coefficients.find(id);
    if (it == coefficients.end()) throw UnknownCoefficient(id);
    return *it->second;
}

double Driver::eval(const std::string& id, double t) const {
    if (!trajectory()) throw SymbolicDriver();
    return coeff(id).value(origin + t);
}

Interval Driver::bounds(const std::string& id) const {
    const CoefficientFn& a = coeff(id);
    if (kind == DriverKind::Periodic && a.differentiable())
        return refined_range(a, period);
    return a.range();
}

BirkhoffResult Driver::birkhoff(const std::string& id, double horizon, double window) const {
    if (!trajectory()) throw SymbolicDriver();
    if (!(horizon >= window && window > 0))
        throw PreconditionFailed("birkhoff: need horizon >= window > 0");
    const CoefficientFn& a = coeff(id);
    const double t0 = origin;
    // Prefix integrals on a grid fine enough for the sliding-window extrema.
    const int per_window = 64;
    const double dt = window / per_window;
    const int cells = static_cast<int>(std::ceil(horizon / dt));
    std::vector<double> prefix(cells + 1, 0.0);
    for (int i = 0; i < cells; ++i) {
        const double a_t = t0 + i * dt;
        const double b_t = std::min(t0 + (i + 1) * dt, t0 + horizon);
        prefix[i + 1] =
            prefix[i] + integrate([&](double t) { return a.value(t); }, a_t, b_t);
    }
    BirkhoffResult r;
    r.mean = prefix[cells] / horizon;
    r.window_min = r.window_max = r.mean;
    bool first = true;
    for (int i = 0; i + per_window <= cells; ++i) {
        const double avg = (prefix[i + per_window] - prefix[i]) / window;
        if (first) {
            r.window_min = r.window_max = avg;
            first = false;
        } else {
            r.window_min = std::min(r.window_min, avg);
            r.window_max = std::max(r.window_max, avg);
        }
    }
    return r;
}

Driver Driver::shifted(double s) const {
    Driver d = *this;
    d.origin = origin + s;
    return d;
}

Driver Driver::with_coefficient(const std::string& id, CoeffPtr fn) const {
    Driver d = *this;
    d.coefficients[id] = std::move(fn);
    return d;
}

double Driver::natural_span() const {
    switch (kind) {
        case DriverKind::Periodic:
            return period;
        case DriverKind::QuasiPeriodic: {
            double fmin = frequencies.empty() ? 1.0 : frequencies[0];
            for (double f : frequencies) fmin = std::min(fmin, std::fabs(f));
            return 2.0 * M_PI / fmin;
        }
        default:
            return 8.0;
    }
}

}  // namespace skewfork
