#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewfork/base_flow.hpp"

namespace skewfork {

// Closed-form expression tree in (t-evaluable coefficients, x) with an exact
// partial derivative in x; used for the perturbation h of the general family
// (-a3 + h) x^3 + ...
class HExpr {
public:
    virtual ~HExpr() = default;
    virtual double eval(const Driver& d, double t, double x) const = 0;
    virtual double dx(const Driver& d, double t, double x) const = 0;
};

using HExprPtr = std::shared_ptr<const HExpr>;

struct HConst final : HExpr {
    double c;
    explicit HConst(double v) : c(v) {}
    double eval(const Driver&, double, double) const override { return c; }
    double dx(const Driver&, double, double) const override { return 0.0; }
};

struct HVar final : HExpr {  // the state x
    double eval(const Driver&, double, double x) const override { return x; }
    double dx(const Driver&, double, double) const override { return 1.0; }
};

struct HCoeff final : HExpr {
    std::string id;
    explicit HCoeff(std::string i) : id(std::move(i)) {}
    double eval(const Driver& d, double t, double) const override { return d.eval(id, t); }
    double dx(const Driver&, double, double) const override { return 0.0; }
};

struct HAdd final : HExpr {
    std::vector<HExprPtr> args;
    explicit HAdd(std::vector<HExprPtr> a) : args(std::move(a)) {}
    double eval(const Driver& d, double t, double x) const override {
        double v = 0;
        for (const auto& a : args) v += a->eval(d, t, x);
        return v;
    }
    double dx(const Driver& d, double t, double x) const override {
        double v = 0;
        for (const auto& a : args) v += a->dx(d, t, x);
        return v;
    }
};

struct HMul final : HExpr {
    HExprPtr a, b;
    HMul(HExprPtr l, HExprPtr r) : a(std::move(l)), b(std::move(r)) {}
    double eval(const Driver& d, double t, double x) const override {
        return a->eval(d, t, x) * b->eval(d, t, x);
    }
    double dx(const Driver& d, double t, double x) const override {
        return a->dx(d, t, x) * b->eval(d, t, x) + a->eval(d, t, x) * b->dx(d, t, x);
    }
};

struct HPow final : HExpr {
    HExprPtr a;
    int p;
    HPow(HExprPtr b, int e) : a(std::move(b)), p(e) {}
    double eval(const Driver& d, double t, double x) const override;
    double dx(const Driver& d, double t, double x) const override;
};

struct HSin final : HExpr {
    HExprPtr a;
    explicit HSin(HExprPtr b) : a(std::move(b)) {}
    double eval(const Driver& d, double t, double x) const override;
    double dx(const Driver& d, double t, double x) const override;
};

struct HExp final : HExpr {
    HExprPtr a;
    explicit HExp(HExprPtr b) : a(std::move(b)) {}
    double eval(const Driver& d, double t, double x) const override;
    double dx(const Driver& d, double t, double x) const override;
};

// User-certified bound triple for the general-h criteria.
struct HCertificate {
    double rho0 = 0.0;
    double eps0 = 0.0;
    double m = 0.0;
};

struct HTerm {
    HExprPtr expression;
    std::optional<HCertificate> certified;

    double eval(const Driver& d, double t, double x) const { return expression->eval(d, t, x); }
    double dx(const Driver& d, double t, double x) const { return expression->dx(d, t, x); }

    // Spot-checks h(w, 0) = 0 and, if certified, |h| <= eps0 on |x| <= rho0.
    void validate(const Driver& d) const;
};

}  // namespace skewfork
