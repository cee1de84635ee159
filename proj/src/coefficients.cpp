#include "skewfork/coefficients.hpp"

#include <cmath>

namespace skewfork {

double TrigSeriesFn::value(double t) const {
    double v = mean_;
    for (const auto& tm : terms_) {
        const double arg = tm.freq * t + tm.phase;
        v += tm.c * std::cos(arg) + tm.s * std::sin(arg);
    }
    return v;
}

double TrigSeriesFn::slope(double t) const {
    double v = 0.0;
    for (const auto& tm : terms_) {
        const double arg = tm.freq * t + tm.phase;
        v += tm.freq * (-tm.c * std::sin(arg) + tm.s * std::cos(arg));
    }
    return v;
}

Interval TrigSeriesFn::range() const {
    double amp = 0.0;
    for (const auto& tm : terms_) amp += std::hypot(tm.c, tm.s);
    return {mean_ - amp, mean_ + amp};
}

double TrigSeriesFn::slope_bound() const {
    double b = 0.0;
    for (const auto& tm : terms_) b += std::fabs(tm.freq) * std::hypot(tm.c, tm.s);
    return b;
}

double SumFn::value(double t) const {
    double v = 0.0;
    for (const auto& c : children_) v += c->value(t);
    return v;
}

double SumFn::slope(double t) const {
    double v = 0.0;
    for (const auto& c : children_) v += c->slope(t);
    return v;
}

bool SumFn::differentiable() const {
    for (const auto& c : children_)
        if (!c->differentiable()) return false;
    return true;
}

Interval SumFn::range() const {
    Interval r{0.0, 0.0};
    for (const auto& c : children_) r = r + c->range();
    return r;
}

double SumFn::slope_bound() const {
    double b = 0.0;
    for (const auto& c : children_) b += c->slope_bound();
    return b;
}

double ExpMulFn::value(double t) const {
    return std::exp(k_ * b_->value(t)) * g_->value(t);
}

double ExpMulFn::slope(double t) const {
    const double e = std::exp(k_ * b_->value(t));
    return e * (k_ * b_->slope(t) * g_->value(t) + g_->slope(t));
}

bool ExpMulFn::differentiable() const {
    return b_->differentiable() && g_->differentiable();
}

Interval ExpMulFn::range() const {
    const Interval rb = b_->range();
    const Interval eb = (k_ >= 0) ? Interval{std::exp(k_ * rb.lo), std::exp(k_ * rb.hi)}
                                  : Interval{std::exp(k_ * rb.hi), std::exp(k_ * rb.lo)};
    return mul(eb, g_->range());
}

double ExpMulFn::slope_bound() const {
    const Interval rb = b_->range();
    const double emax = std::exp(std::fabs(k_) * std::max(std::fabs(rb.lo), std::fabs(rb.hi)));
    const Interval rg = g_->range();
    const double gmax = std::max(std::fabs(rg.lo), std::fabs(rg.hi));
    return emax * (std::fabs(k_) * b_->slope_bound() * gmax + g_->slope_bound());
}

Interval DerivFn::range() const {
    const double b = child_->slope_bound();
    return {-b, b};
}

double BumpFn::value(double t) const {
    double u = std::fmod(t - t0_, period_);
    if (u < 0) u += period_;
    if (u >= width_) return floor_;
    return floor_ + (1.0 - floor_) * 0.5 * (1.0 - std::cos(2.0 * M_PI * u / width_));
}

double BumpFn::slope(double t) const {
    double u = std::fmod(t - t0_, period_);
    if (u < 0) u += period_;
    if (u >= width_) return 0.0;
    const double w = 2.0 * M_PI / width_;
    return (1.0 - floor_) * 0.5 * w * std::sin(w * u);
}

double BumpFn::slope_bound() const {
    return (1.0 - floor_) * M_PI / width_;
}

double LogMixFn::value(double t) const { return std::log(mix(t)); }

double LogMixFn::slope(double t) const { return mix_slope(t) / mix(t); }

Interval LogMixFn::range() const {
    const Interval r = scale(c1_->range(), s_) + scale(c2_->range(), 1.0 - s_);
    return {std::log(r.lo), std::log(r.hi)};
}

double LogMixFn::slope_bound() const {
    const Interval r = scale(c1_->range(), s_) + scale(c2_->range(), 1.0 - s_);
    const double num = s_ * c1_->slope_bound() + (1.0 - s_) * c2_->slope_bound();
    return num / r.lo;
}

Interval refined_range(const CoefficientFn& a, double period, int grid) {
    double lo = a.value(0.0), hi = lo;
    for (int i = 1; i < grid; ++i) {
        const double v = a.value(period * i / grid);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double inflate = a.slope_bound() * (period / grid);
    Interval sampled{lo - inflate, hi + inflate};
    return intersect(sampled, a.range());
}

}  // namespace skewfork
