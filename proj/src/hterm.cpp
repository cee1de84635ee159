#include "skewfork/hterm.hpp"

#include <cmath>

#include "skewfork/errors.hpp"

namespace skewfork {

double HPow::eval(const Driver& d, double t, double x) const {
    return std::pow(a->eval(d, t, x), p);
}

double HPow::dx(const Driver& d, double t, double x) const {
    return p * std::pow(a->eval(d, t, x), p - 1) * a->dx(d, t, x);
}

double HSin::eval(const Driver& d, double t, double x) const {
    return std::sin(a->eval(d, t, x));
}

double HSin::dx(const Driver& d, double t, double x) const {
    return std::cos(a->eval(d, t, x)) * a->dx(d, t, x);
}

double HExp::eval(const Driver& d, double t, double x) const {
    return std::exp(a->eval(d, t, x));
}

double HExp::dx(const Driver& d, double t, double x) const {
    return std::exp(a->eval(d, t, x)) * a->dx(d, t, x);
}

void HTerm::validate(const Driver& d) const {
    const double span = d.natural_span();
    for (int i = 0; i < 32; ++i) {
        const double t = span * i / 32.0;
        if (std::fabs(eval(d, t, 0.0)) > 1e-12)
            throw PreconditionFailed("HTerm: h(w, 0) != 0");
    }
    if (certified) {
        for (int i = 0; i < 32; ++i) {
            const double t = span * i / 32.0;
            for (int j = -8; j <= 8; ++j) {
                const double x = certified->rho0 * j / 8.0;
                if (std::fabs(eval(d, t, x)) > certified->eps0 * (1.0 + 1e-9))
                    throw PreconditionFailed("HTerm: certified bound |h| <= eps0 fails on sample");
            }
        }
    }
}

}  // namespace skewfork
