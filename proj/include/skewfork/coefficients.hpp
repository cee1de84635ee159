#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "skewfork/errors.hpp"
#include "skewfork/util.hpp"

namespace skewfork {

// Per-measure data of a coefficient in the symbolic finite-ergodic mode.
struct TableEntry {
    std::vector<double> integrals;  // one value per ergodic measure
    double min = 0.0;               // global min over the base
    double max = 0.0;               // global max over the base
};

// A coefficient function t -> a(w0 . t). Concrete nodes below form a small
// closed-form expression language so the change of variables (e^{2b} a3 etc.)
// and the synthesized primitives stay exactly evaluable and differentiable.
class CoefficientFn {
public:
    virtual ~CoefficientFn() = default;

    virtual double value(double t) const = 0;
    // d/dt of the coefficient along the orbit; throws NotDifferentiable by default.
    virtual double slope(double t) const { throw NotDifferentiable(); }
    virtual bool differentiable() const { return false; }
    // Safe enclosure of the range over the whole base (never narrower than reality).
    virtual Interval range() const = 0;
    // Conservative bound on |slope| (used for grid-refinement inflation); 0 when unknown.
    virtual double slope_bound() const { return 0.0; }
    virtual const TableEntry* table() const { return nullptr; }
    virtual bool is_constant() const { return false; }
};

using CoeffPtr = std::shared_ptr<const CoefficientFn>;

class ConstantFn final : public CoefficientFn {
public:
    explicit ConstantFn(double c) : c_(c) {}
    double value(double) const override { return c_; }
    double slope(double) const override { return 0.0; }
    bool differentiable() const override { return true; }
    Interval range() const override { return {c_, c_}; }
    bool is_constant() const override { return true; }

private:
    double c_;
};

// mean + sum of c*cos(f t + phi) + s*sin(f t + phi) terms.
class TrigSeriesFn final : public CoefficientFn {
public:
    struct Term {
        double freq;
        double phase;
        double c;  // cosine amplitude
        double s;  // sine amplitude
    };

    TrigSeriesFn(double mean, std::vector<Term> terms)
        : mean_(mean), terms_(std::move(terms)) {}

    double value(double t) const override;
    double slope(double t) const override;
    bool differentiable() const override { return true; }
    Interval range() const override;
    double slope_bound() const override;
    bool is_constant() const override { return terms_.empty(); }

    const std::vector<Term>& terms() const { return terms_; }
    double mean() const { return mean_; }

private:
    double mean_;
    std::vector<Term> terms_;
};

class TableFn final : public CoefficientFn {
public:
    explicit TableFn(TableEntry e) : entry_(std::move(e)) {}
    double value(double) const override { throw SymbolicDriver(); }
    Interval range() const override { return {entry_.min, entry_.max}; }
    const TableEntry* table() const override { return &entry_; }

private:
    TableEntry entry_;
};

class SumFn final : public CoefficientFn {
public:
    explicit SumFn(std::vector<CoeffPtr> children) : children_(std::move(children)) {}
    double value(double t) const override;
    double slope(double t) const override;
    bool differentiable() const override;
    Interval range() const override;
    double slope_bound() const override;

private:
    std::vector<CoeffPtr> children_;
};

class ScaleFn final : public CoefficientFn {
public:
    ScaleFn(double k, CoeffPtr child) : k_(k), child_(std::move(child)) {}
    double value(double t) const override { return k_ * child_->value(t); }
    double slope(double t) const override { return k_ * child_->slope(t); }
    bool differentiable() const override { return child_->differentiable(); }
    Interval range() const override { return scale(child_->range(), k_); }
    double slope_bound() const override { return std::fabs(k_) * child_->slope_bound(); }

private:
    double k_;
    CoeffPtr child_;
};

// e^{k b(t)} * g(t): the combination used by the change of variables and the
// weighted spectrum of e^b a2.
class ExpMulFn final : public CoefficientFn {
public:
    ExpMulFn(double k, CoeffPtr b, CoeffPtr g)
        : k_(k), b_(std::move(b)), g_(std::move(g)) {}
    double value(double t) const override;
    double slope(double t) const override;
    bool differentiable() const override;
    Interval range() const override;
    double slope_bound() const override;

private:
    double k_;
    CoeffPtr b_;
    CoeffPtr g_;
};

// d/dt of a differentiable child (realizes b' as a coefficient).
class DerivFn final : public CoefficientFn {
public:
    explicit DerivFn(CoeffPtr child) : child_(std::move(child)) {
        if (!child_->differentiable()) throw NotDifferentiable("DerivFn child");
    }
    double value(double t) const override { return child_->slope(t); }
    Interval range() const override;
    double slope_bound() const override { return 0.0; }
    const CoefficientFn& child() const { return *child_; }

private:
    CoeffPtr child_;
};

// A periodized raised-cosine window with a floor, used by the pitchfork a1
// synthesis: value = floor + (1 - floor) * 0.5 (1 - cos(2 pi (t-t0)/w)) on the
// support [t0, t0+w] (mod period), floor elsewhere.
class BumpFn final : public CoefficientFn {
public:
    BumpFn(double t0, double width, double period, double floor)
        : t0_(t0), width_(width), period_(period), floor_(floor) {}
    double value(double t) const override;
    double slope(double t) const override;
    bool differentiable() const override { return true; }
    Interval range() const override { return {floor_, 1.0}; }
    double slope_bound() const override;

private:
    double t0_, width_, period_, floor_;
};

// log(s c1(t) + (1-s) c2(t)) for strictly positive children (the primitive b of
// the synthesized a1).
class LogMixFn final : public CoefficientFn {
public:
    LogMixFn(double s, CoeffPtr c1, CoeffPtr c2)
        : s_(s), c1_(std::move(c1)), c2_(std::move(c2)) {}
    double value(double t) const override;
    double slope(double t) const override;
    bool differentiable() const override { return true; }
    Interval range() const override;
    double slope_bound() const override;
    double mix(double t) const { return s_ * c1_->value(t) + (1.0 - s_) * c2_->value(t); }
    double mix_slope(double t) const {
        return s_ * c1_->slope(t) + (1.0 - s_) * c2_->slope(t);
    }

private:
    double s_;
    CoeffPtr c1_, c2_;
};

// Refines a conservative range enclosure on a period by grid sampling plus a
// Lipschitz inflation from slope_bound(); intersected with the a-priori range.
Interval refined_range(const CoefficientFn& a, double period, int grid = 4096);

}  // namespace skewfork
