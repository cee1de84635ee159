#include "skewfork/construct.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "skewfork/errors.hpp"

namespace skewfork {

TransformedFamily change_of_variables(const Family& f, const Driver& d, const std::string& b) {
    if (f.form != FamilyForm::Cubic)
        throw PreconditionFailed("change_of_variables: cubic families only");
    const CoeffPtr bp = d.coefficients.at(b);
    if (!bp->differentiable())
        throw NotDifferentiable("change_of_variables: b must be differentiable");
    const CoeffPtr a3p = d.coefficients.at(f.a3);
    const CoeffPtr a2p = d.coefficients.at(f.a2);
    const CoeffPtr a1p = d.coefficients.at(f.a1);

    TransformedFamily out;
    out.family = f;
    out.family.a3 = f.a3 + "~";
    out.family.a2 = f.a2 + "~";
    out.family.a1 = f.a1 + "~";
    Driver nd = d.with_coefficient(out.family.a3, std::make_shared<ExpMulFn>(2.0, bp, a3p));
    nd = nd.with_coefficient(out.family.a2, std::make_shared<ExpMulFn>(1.0, bp, a2p));
    const CoeffPtr minus_bprime =
        std::make_shared<ScaleFn>(-1.0, std::make_shared<DerivFn>(bp));
    nd = nd.with_coefficient(out.family.a1,
                             std::make_shared<SumFn>(std::vector<CoeffPtr>{a1p, minus_bprime}));
    out.driver = nd;
    return out;
}

namespace {

struct SignInterval {
    double start = 0.0;
    double length = 0.0;
};

// Longest arc of {sign * a2 > 0} on the circle of circumference T, by dense
// sampling with wrap-around.
SignInterval longest_sign_arc(const Driver& d, const std::string& a2, double sign, double T) {
    const int n = 8192;
    std::vector<bool> pos(n);
    bool any = false;
    for (int i = 0; i < n; ++i) {
        pos[i] = sign * d.eval(a2, d.origin + T * i / n) > 0.0;
        any = any || pos[i];
    }
    if (!any) return {};
    // Rotate to a false sample so runs do not straddle the seam.
    int seam = 0;
    while (seam < n && pos[seam]) ++seam;
    if (seam == n) return {0.0, T};  // one sign everywhere
    SignInterval best;
    int run_start = -1;
    for (int k = 0; k <= n; ++k) {
        const int i = (seam + k) % n;
        if (k < n && pos[i]) {
            if (run_start < 0) run_start = k;
        } else if (run_start >= 0) {
            const double len = T * (k - run_start) / n;
            if (len > best.length)
                best = {std::fmod(T * (seam + run_start) / n, T), len};
            run_start = -1;
        }
    }
    return best;
}

}  // namespace

PitchforkSynthesis synthesize_a1_for_pitchfork(const Driver& d, const std::string& a2) {
    if (d.kind != DriverKind::Periodic)
        throw PreconditionFailed("synthesize_a1_for_pitchfork: periodic driver required");
    const double T = d.period;
    const SignInterval plus = longest_sign_arc(d, a2, +1.0, T);
    const SignInterval minus = longest_sign_arc(d, a2, -1.0, T);
    if (plus.length <= 0.0 || minus.length <= 0.0) throw NoSignChange();

    const double floor = 1e-3;
    // Supports strictly inside the sign sets (centered 80% of each arc).
    const auto c1 = std::make_shared<BumpFn>(plus.start + 0.1 * plus.length,
                                             0.8 * plus.length, T, floor);
    const auto c2 = std::make_shared<BumpFn>(minus.start + 0.1 * minus.length,
                                             0.8 * minus.length, T, floor);
    const double o = d.origin;
    auto weighted = [&](const CoefficientFn& c) {
        return integrate([&](double t) { return c.value(t) * d.eval(a2, o + t); }, 0.0, T,
                         0.05);
    };
    const double i1 = weighted(*c1);
    const double i2 = weighted(*c2);
    // The weighted mean s i1 + (1-s) i2 is linear in s; a root in (0, 1) needs
    // opposite signs at the endpoints.
    if (!(i1 > 0.0 && i2 < 0.0))
        throw BisectionFailed("synthesize_a1_for_pitchfork: bump integrals do not bracket 0");
    const double s = i2 / (i2 - i1);

    PitchforkSynthesis out;
    out.s = s;
    const auto b = std::make_shared<LogMixFn>(s, c1, c2);
    Driver nd = d.with_coefficient("b", b);
    nd = nd.with_coefficient("a1", std::make_shared<DerivFn>(b));
    out.driver = nd;
    // Independent residual check: e^{log mix} a2 = mix * a2.
    out.residual = std::fabs(
        integrate([&](double t) { return b->mix(t) * d.eval(a2, o + t); }, 0.0, T, 0.05));
    if (!(out.residual < 1e-10))
        throw BisectionFailed("synthesize_a1_for_pitchfork: residual above 1e-10");
    return out;
}

double epsilon1(int n, double r) {
    if (n < 2 || r < 1.0)
        throw PreconditionFailed("epsilon1: need n >= 2 and r >= 1");
    const double q = r * (n - 1);
    return (n + 2.0 * q - 2.0 * std::sqrt(q * (q + n))) / (static_cast<double>(n) * n);
}

void BumpTable::validate() const {
    if (n < 1 || static_cast<int>(C.size()) != n)
        throw PreconditionFailed("BumpTable: bad dimension");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(C[i].size()) != n)
            throw PreconditionFailed("BumpTable: bad dimension");
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                if (!(1.0 - epsilon < C[i][j] && C[i][j] <= 1.0))
                    throw PreconditionFailed("BumpTable: diagonal outside (1-eps, 1]");
            } else if (!(0.0 <= C[i][j] && C[i][j] < epsilon)) {
                throw PreconditionFailed("BumpTable: off-diagonal outside [0, eps)");
            }
        }
    }
}

BumpTable bump_table(int n, double epsilon) {
    if (n < 1 || !(epsilon > 0.0 && epsilon < 1.0))
        throw PreconditionFailed("bump_table: need n >= 1 and 0 < eps < 1");
    BumpTable t;
    t.n = n;
    t.epsilon = epsilon;
    t.C.assign(n, std::vector<double>(n, 0.5 * epsilon));
    for (int i = 0; i < n; ++i) t.C[i][i] = 1.0 - 0.5 * epsilon;
    t.validate();
    return t;
}

A1Synthesis a1_from_alphas(const BumpTable& table, const std::vector<double>& alphas,
                           double r) {
    table.validate();
    const int n = table.n;
    if (static_cast<int>(alphas.size()) != n)
        throw PreconditionFailed("a1_from_alphas: alpha count mismatch");
    for (int i = 1; i < n; ++i)
        if (!(alphas[i - 1] <= alphas[i]))
            throw PreconditionFailed("a1_from_alphas: alphas must be nondecreasing");
    if (!(alphas.front() < 0.0 && 0.0 < alphas.back()))
        throw PreconditionFailed("a1_from_alphas: need alpha_1 < 0 < alpha_n");
    if (!(table.epsilon < epsilon1(n, r)))
        throw EpsilonTooLarge("a1_from_alphas: table epsilon not below epsilon1(n, r)");

    A1Synthesis out;
    out.a1.integrals.resize(n);
    for (int i = 0; i < n; ++i) {
        double v = 0.0;
        for (int j = 0; j < n; ++j) v += table.C[i][j] * alphas[j];
        out.a1.integrals[i] = v;
    }
    out.a1.min = alphas.front();
    out.a1.max = alphas.back();
    const auto [lo, hi] =
        std::minmax_element(out.a1.integrals.begin(), out.a1.integrals.end());
    out.spectrum = {*lo, *hi, true};
    const double width = *hi - *lo;  // lambda_+ - lambda_-
    const double inner = (1.0 - n * table.epsilon) * (alphas.back() - alphas.front());
    out.spectrum_gap_ok = width > inner && inner > 0.0;
    const double lam_plus = -*lo;
    out.gp_condition =
        width * width + 4.0 * r * (lam_plus + alphas.front()) * (lam_plus + alphas.back()) >
        0.0;
    return out;
}

ProjectionResult project_onto_span(const BumpTable& table, const TableEntry& a) {
    table.validate();
    const int n = table.n;
    if (static_cast<int>(a.integrals.size()) != n)
        throw PreconditionFailed("project_onto_span: integral count mismatch");
    // Strict diagonal dominance is the operational invertibility threshold.
    for (int i = 0; i < n; ++i) {
        double off = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) off += std::fabs(table.C[i][j]);
        if (!(std::fabs(table.C[i][i]) > off)) throw SingularMatrix();
    }
    std::vector<double> flat(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat[i * n + j] = table.C[i][j];
    ProjectionResult out;
    if (!solve_dense(flat, a.integrals, out.alphas)) throw SingularMatrix();
    out.residual_integrals.resize(n);
    for (int i = 0; i < n; ++i) {
        double v = a.integrals[i];
        for (int j = 0; j < n; ++j) v -= table.C[i][j] * out.alphas[j];
        out.residual_integrals[i] = v;
    }
    return out;
}

BandRealization realize_band_spectrum(const SpectrumInterval& target, int n, double r) {
    if (!(target.lo < target.hi))
        throw TargetUnreachable("realize_band_spectrum: band spectrum (lo < hi) required");
    const double eps = std::min(0.1, 0.75 * epsilon1(n, r));
    BandRealization out;
    out.table = bump_table(n, eps);
    // Hit the prescribed spectrum endpoints exactly: integrals = linspace targets,
    // so alphas solve C alpha = targets.
    std::vector<double> targets(n);
    for (int i = 0; i < n; ++i)
        targets[i] = target.lo + (target.hi - target.lo) * i / (n - 1);
    std::vector<double> flat(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat[i * n + j] = out.table.C[i][j];
    if (!solve_dense(flat, targets, out.alphas)) throw SingularMatrix();
    for (int i = 1; i < n; ++i)
        if (!(out.alphas[i - 1] <= out.alphas[i]))
            throw TargetUnreachable("realize_band_spectrum: solved alphas not ordered");
    if (!(out.alphas.front() < 0.0 && 0.0 < out.alphas.back()))
        throw TargetUnreachable("realize_band_spectrum: spectrum must straddle 0");

    const A1Synthesis synth = a1_from_alphas(out.table, out.alphas, r);
    out.a1 = synth.a1;
    out.spectrum = synth.spectrum;
    out.gp_condition = synth.gp_condition;
    out.bounds = {out.alphas.front(), out.alphas.back(), 1.0, r};

    const double gap_plus = out.spectrum.lo - out.bounds.k1;  // -lambda_+ - k1
    const double lk2 = out.bounds.k2 - out.spectrum.lo;       // lambda_+ + k2
    const double width = out.spectrum.hi - out.spectrum.lo;
    out.a2_window = {2.0 * std::sqrt(r * gap_plus), width / std::sqrt(lk2)};
    if (!(out.a2_window.lo < out.a2_window.hi))
        throw TargetUnreachable("realize_band_spectrum: empty a2 window");
    // Sanity: the criteria engine must certify the generalized pitchfork on the
    // middle of the window.
    const double mid = 0.5 * (out.a2_window.lo + out.a2_window.hi);
    const CriteriaVerdict v = cubic_verdict(out.bounds, out.spectrum, {mid, mid});
    if (!v.ensured || *v.ensured != Pattern::GeneralizedPitchfork)
        throw TargetUnreachable("realize_band_spectrum: window failed certification");
    return out;
}

}  // namespace skewfork
