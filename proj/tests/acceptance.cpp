// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Reference values are closed forms (root formulas, Bessel-function
// quadratures) or independent in-file oracles; no value is read back from the
// library under test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "skewfork/construct.hpp"
#include "skewfork/criteria.hpp"
#include "skewfork/diagram.hpp"
#include "skewfork/errors.hpp"
#include "skewfork/twoparam.hpp"

using namespace skewfork;

namespace {

int g_failures = 0;
std::vector<DiagramReport> g_scans;  // collected for the invariant suites

void report(int idx, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d (%s)%s%s\n", pass ? "PASS" : "FAIL", idx, name,
                detail.empty() ? "" : ": ", detail.c_str());
    if (!pass) ++g_failures;
}

struct Check {
    bool ok = true;
    std::ostringstream why;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        if (!ok) why << "; ";
        ok = false;
        why << what;
    }
    void near(double got, double want, double tol, const std::string& what) {
        std::ostringstream os;
        os << what << " = " << got << " (want " << want << " +- " << tol << ")";
        require(std::fabs(got - want) <= tol, os.str());
    }
};

Driver cubic_driver(double a2, double a1) {
    Driver d;
    d.kind = DriverKind::Autonomous;
    d.coefficients["a3"] = std::make_shared<ConstantFn>(1.0);
    d.coefficients["a2"] = std::make_shared<ConstantFn>(a2);
    d.coefficients["a1"] = std::make_shared<ConstantFn>(a1);
    return d;
}

// Periodic driver with a1 = cos t presented both explicitly and as b' for
// b = sin t, and a2 = c + sin t.
Driver periodic_driver(double c) {
    Driver d;
    d.kind = DriverKind::Periodic;
    d.period = 2.0 * M_PI;
    d.coefficients["a3"] = std::make_shared<ConstantFn>(1.0);
    d.coefficients["b"] = std::make_shared<TrigSeriesFn>(
        0.0, std::vector<TrigSeriesFn::Term>{{1.0, 0.0, 0.0, 1.0}});
    d.coefficients["a1"] = std::make_shared<TrigSeriesFn>(
        0.0, std::vector<TrigSeriesFn::Term>{{1.0, 0.0, 1.0, 0.0}});
    d.coefficients["a2"] = std::make_shared<TrigSeriesFn>(
        c, std::vector<TrigSeriesFn::Term>{{1.0, 0.0, 0.0, 1.0}});
    return d;
}

double point_of(const DiagramReport& rep, BifKind kind) {
    for (const auto& p : rep.points)
        if (p.kind == kind) return p.value;
    return std::nan("");
}

void criterion_1() {
    Check c;
    try {
        const auto t0 = std::chrono::steady_clock::now();
        ScanConfig cfg;
        cfg.tol = 1e-6;
        cfg.grid_points = 41;
        const Driver d = cubic_driver(0.0, 0.0);
        const Family f;
        const DiagramReport rep = scan_lambda(f, d, -1.0, 1.0, cfg);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        g_scans.push_back(rep);
        c.require(rep.pattern == Pattern::ClassicalPitchfork,
                  std::string("pattern = ") + to_string(rep.pattern));
        c.near(point_of(rep, BifKind::Pitchfork), 0.0, 1e-3, "pitchfork point");
        Family f25;
        f25.lambda = 0.25;
        const AttractorSlice slice =
            pullback_delimiters(f25, d, FiberGrid::uniform(d, 8), 1e-6, cfg.attractor);
        c.near(slice.fibers.front().beta, 0.5, 1e-4, "beta at lambda = 0.25");
        c.require(secs < 60.0, "runtime " + std::to_string(secs) + " s >= 60 s");
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    report(1, "autonomous classical pitchfork", c.ok, c.why.str());
}

void criterion_2() {
    Check c;
    try {
        ScanConfig cfg;
        cfg.tol = 1e-7;  // sharpens the separation threshold around the transcritical point
        const Driver d = cubic_driver(2.0, 0.0);
        const Family f;
        const DiagramReport rep = scan_lambda(f, d, -2.0, 1.0, cfg);
        g_scans.push_back(rep);
        c.require(rep.pattern == Pattern::SaddleNodeTranscritical,
                  std::string("pattern = ") + to_string(rep.pattern));
        c.require(rep.side == CollisionSide::LowerCollides,
                  std::string("side = ") + to_string(rep.side));
        c.near(point_of(rep, BifKind::SaddleNode), -1.0, 1e-3, "saddle-node point");
        c.near(point_of(rep, BifKind::TranscriticalEndpointUpper), 0.0, 1e-3,
               "transcritical point");
        Family fm;
        fm.lambda = -0.5;
        const MinimalSetCensus census =
            count_minimal_sets(fm, d, FiberGrid::uniform(d, 8), cfg);
        c.require(census.count == 3 && census.kappa0.has_value(),
                  "no 3-census with kappa at lambda = -0.5");
        if (census.kappa0)
            c.near(*census.kappa0, 1.0 - std::sqrt(2.0) / 2.0, 1e-4, "repulsive kappa");
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    report(2, "autonomous saddle-node + transcritical", c.ok, c.why.str());
}

void criterion_3() {
    Check c;
    try {
        ScanConfig cfg;
        cfg.tol_bif = 5e-4;
        const Family f;
        const DiagramReport none = scan_mu(f, cubic_driver(0.0, 1.0), -3.0, 3.0, cfg);
        g_scans.push_back(none);
        c.require(none.pattern == Pattern::NoBifurcation,
                  std::string("a1 = +1 pattern = ") + to_string(none.pattern));
        for (const auto& [mu, census] : none.grid)
            c.require(census.count == 3,
                      "a1 = +1: census count != 3 at mu = " + std::to_string(mu));

        const DiagramReport two = scan_mu(f, cubic_driver(0.0, -1.0), -3.0, 3.0, cfg);
        g_scans.push_back(two);
        c.require(two.pattern == Pattern::TwoSaddleNodes,
                  std::string("a1 = -1 pattern = ") + to_string(two.pattern));
        c.near(point_of(two, BifKind::MuSaddleLower), -2.0, 1e-3, "mu_1");
        c.near(point_of(two, BifKind::MuSaddleUpper), 2.0, 1e-3, "mu_2");

        const DiagramReport weak = scan_mu(f, cubic_driver(0.0, 0.0), -3.0, 3.0, cfg);
        g_scans.push_back(weak);
        c.require(weak.pattern == Pattern::WeakGeneralizedTranscritical,
                  std::string("a1 = 0 pattern = ") + to_string(weak.pattern));
        c.near(point_of(weak, BifKind::MuSaddleLower), 0.0, 1e-3, "weak mu_1");
        c.near(point_of(weak, BifKind::MuSaddleUpper), 0.0, 1e-3, "weak mu_2");
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    report(3, "mu-family patterns", c.ok, c.why.str());
}

void criterion_4() {
    Check c;
    try {
        const double c_star = -std::cyl_bessel_i(1, 1.0) / std::cyl_bessel_i(0, 1.0);
        auto lower_collides = [&](double cc) {
            const CriteriaVerdict v = classify_cp_case(periodic_driver(cc), "b", "a2");
            return v.ensured.has_value() && *v.ensured == Pattern::SaddleNodeTranscritical &&
                   v.side == CollisionSide::LowerCollides;
        };
        c.require(lower_collides(0.0), "c = 0 not classified lower-collides");
        c.require(!lower_collides(-1.0), "c = -1 classified lower-collides");
        double lo = -1.0, hi = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double mid = 0.5 * (lo + hi);
            (lower_collides(mid) ? hi : lo) = mid;
        }
        c.near(0.5 * (lo + hi), c_star, 1e-4, "verdict flip in c");

        const CriteriaVerdict cp = classify_cp_case(periodic_driver(c_star), "b", "a2");
        c.require(cp.ensured.has_value() && *cp.ensured == Pattern::ClassicalPitchfork,
                  "verdict at c* is not the classical pitchfork");

        ScanConfig cfg;
        cfg.grid_points = 21;
        cfg.tol_bif = 5e-4;
        const Family f;
        const DiagramReport sn = scan_lambda(f, periodic_driver(0.0), -1.0, 0.5, cfg);
        g_scans.push_back(sn);
        c.require(sn.pattern == Pattern::SaddleNodeTranscritical &&
                      sn.side == CollisionSide::LowerCollides,
                  std::string("c = 0 scan pattern = ") + to_string(sn.pattern));
        c.near(point_of(sn, BifKind::TranscriticalEndpointUpper), 0.0, 2e-3,
               "c = 0 lambda_+");

        const DiagramReport pf = scan_lambda(f, periodic_driver(c_star), -1.0, 0.5, cfg);
        g_scans.push_back(pf);
        c.require(pf.pattern == Pattern::ClassicalPitchfork,
                  std::string("c = c* scan pattern = ") + to_string(pf.pattern));
        c.near(point_of(pf, BifKind::Pitchfork), 0.0, 2e-3, "c = c* lambda_+");
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    report(4, "nonautonomous criterion agreement", c.ok, c.why.str());
}

void criterion_5() {
    Check c;
    try {
        const Bounds b{-1.0, 1.0, 1.0, 1.0};
        const SpectrumInterval sp{-0.9, 0.9, true};
        const CriteriaVerdict v = cubic_verdict(b, sp, {0.7, 1.2});
        c.require(v.ensured.has_value() && *v.ensured == Pattern::GeneralizedPitchfork,
                  "no ensured generalized pitchfork inside the window");
        // Closed forms: lower edge 2 sqrt(0.1), upper edge 1.8 / sqrt(1.9).
        c.near(v.witnesses.at("cp_preclude_threshold"), 2.0 * std::sqrt(0.1), 1e-5,
               "window lower edge");
        c.near(v.witnesses.at("sn_preclude_threshold"), 1.8 / std::sqrt(1.9), 1e-5,
               "window upper edge");

        std::mt19937_64 rng(20240817);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        int bad = 0;
        for (int i = 0; i < 10000 && bad < 8; ++i) {
            Bounds rb;
            rb.k1 = -2.0 * u(rng);
            rb.k2 = 2.0 * u(rng) + 1e-3;
            rb.r1 = 0.2 + 1.8 * u(rng);
            rb.r2 = rb.r1 + u(rng);
            SpectrumInterval rsp;
            rsp.lo = rb.k1 + (rb.k2 - rb.k1) * (0.05 + 0.4 * u(rng));
            rsp.hi = rsp.lo + (rb.k2 - rsp.lo) * (0.05 + 0.85 * u(rng));
            rsp.exact = true;
            Interval a2r;
            if (i % 5 == 0) {
                // Bias into the candidate generalized-pitchfork window.
                const double gap_plus = rsp.lo - rb.k1;
                const double lk2 = rb.k2 - rsp.lo;
                const double cp_thr = 2.0 * std::sqrt(rb.r2 * gap_plus);
                const double gp_hi =
                    std::sqrt(rb.r1) * (rsp.hi - rsp.lo) / std::sqrt(lk2);
                a2r.lo = cp_thr * 1.01;
                a2r.hi = std::max(a2r.lo, gp_hi * 0.99);
            } else {
                a2r.lo = -3.0 + 6.0 * u(rng);
                a2r.hi = a2r.lo + 3.0 * u(rng);
            }
            const CriteriaVerdict rv = cubic_verdict(rb, rsp, a2r);
            if (rv.ensured && rv.precluded.count(*rv.ensured)) ++bad;
            if (rv.ensured && rv.inconclusive) ++bad;
            if (rv.inconclusive != (!rv.ensured && rv.precluded.empty())) ++bad;
        }
        c.require(bad == 0,
                  std::to_string(bad) + " inconsistent verdicts in the exclusivity fuzz");
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    report(5, "criteria engine windows + exclusivity fuzz", c.ok, c.why.str());
}

void criterion_6() {
    Check c;
    try {
        c.near(epsilon1(2, 1.0), 0.133975, 1e-6, "epsilon1(2, 1)");

        const BandRealization band = realize_band_spectrum({-0.9, 0.9, true}, 2, 1.0);
        c.require(band.gp_condition, "band realization: gp condition false");
        const double mid = 0.5 * (band.a2_window.lo + band.a2_window.hi);
        const CriteriaVerdict v = cubic_verdict(band.bounds, band.spectrum, {mid, mid});
        c.require(v.ensured.has_value() && *v.ensured == Pattern::GeneralizedPitchfork,
                  "no ensured generalized pitchfork at the window midpoint");

        // Independent oracle: Gaussian elimination with partial pivoting.
        auto solve_oracle = [](std::vector<std::vector<double>> m, std::vector<double> rhs) {
            const int n = static_cast<int>(rhs.size());
            for (int col = 0; col < n; ++col) {
                int piv = col;
                for (int r = col + 1; r < n; ++r)
                    if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
                std::swap(m[piv], m[col]);
                std::swap(rhs[piv], rhs[col]);
                for (int r = col + 1; r < n; ++r) {
                    const double fac = m[r][col] / m[col][col];
                    for (int cc = col; cc < n; ++cc) m[r][cc] -= fac * m[col][cc];
                    rhs[r] -= fac * rhs[col];
                }
            }
            std::vector<double> x(n);
            for (int r = n - 1; r >= 0; --r) {
                double s = rhs[r];
                for (int cc = r + 1; cc < n; ++cc) s -= m[r][cc] * x[cc];
                x[r] = s / m[r][r];
            }
            return x;
        };
        std::mt19937_64 rng(424242);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double worst = 0.0, worst_res = 0.0;
        for (int i = 0; i < 100; ++i) {
            const int n = 2 + static_cast<int>(5.0 * u(rng));
            const BumpTable table = bump_table(n, (0.2 + 0.7 * u(rng)) / n);
            TableEntry a;
            double amin = 1.0, amax = -1.0;
            for (int j = 0; j < n; ++j) {
                a.integrals.push_back(-1.0 + 2.0 * u(rng));
                amin = std::min(amin, a.integrals.back());
                amax = std::max(amax, a.integrals.back());
            }
            a.min = amin - 0.1;
            a.max = amax + 0.1;
            const ProjectionResult pr = project_onto_span(table, a);
            const std::vector<double> ref = solve_oracle(table.C, a.integrals);
            for (int j = 0; j < n; ++j)
                worst = std::max(worst, std::fabs(pr.alphas[j] - ref[j]));
            for (double r : pr.residual_integrals)
                worst_res = std::max(worst_res, std::fabs(r));
        }
        c.require(worst <= 1e-12, "projection deviates from the linear-solve oracle by " +
                                      std::to_string(worst));
        c.require(worst_res <= 1e-12,
                  "projection residual " + std::to_string(worst_res) + " > 1e-12");
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    report(6, "construction pipeline", c.ok, c.why.str());
}

void criterion_7() {
    Check c;
    try {
        const Driver d = cubic_driver(0.0, 0.0);
        const Family f;
        TwoParamConfig cfg;
        cfg.tol = 5e-4;  // bisection bias stays below the 1e-3 acceptance band
        for (double l0 : {-2.25, -1.0, -0.25, 0.0}) {
            const double m = mu_hat(f, d, l0, cfg);
            c.near(m, 2.0 * std::sqrt(-l0), 1e-3,
                   "mu_hat(" + std::to_string(l0) + ")");
            const double back = lambda_hat(f, d, m, cfg);
            c.near(back, l0, 2e-3, "lambda_hat(mu_hat(" + std::to_string(l0) + "))");
        }
        std::vector<double> lh;
        for (double m : {0.0, 1.0, 2.0, 3.0}) lh.push_back(lambda_hat(f, d, m, cfg));
        for (size_t i = 1; i < lh.size(); ++i)
            c.require(lh[i] <= lh[i - 1] + 2.0 * cfg.tol,
                      "lambda_hat not nonincreasing at mu = " + std::to_string(i));
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    report(7, "two-parameter laws", c.ok, c.why.str());
}

void criterion_8() {
    Check c;
    try {
        std::mt19937_64 rng(987654321);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const double tol = 1e-8, guard = 1e6;
        double worst_cocycle = 0.0;
        bool monotone = true;
        for (int i = 0; i < 1000; ++i) {
            const Driver d =
                cubic_driver(-1.0 + 2.0 * u(rng), -1.0 + 2.0 * u(rng));
            Family f;
            f.lambda = -1.0 + 2.0 * u(rng);
            f.mu = -1.0 + 2.0 * u(rng);
            const double t0 = -5.0 + 10.0 * u(rng);
            const double t1 = t0 + 0.1 + 2.9 * u(rng);
            const double t2 = t1 + 0.1 + 2.9 * u(rng);
            const double x0 = -2.0 + 4.0 * u(rng);
            const double direct = flow_map(f, d, t0, x0, t2, tol, guard);
            const double hop = flow_map(
                f, d, t1, flow_map(f, d, t0, x0, t1, tol, guard), t2, tol, guard);
            worst_cocycle = std::max(
                worst_cocycle, std::fabs(direct - hop) / (1.0 + std::fabs(direct)));
            const double x0b = x0 + u(rng);
            if (flow_map(f, d, t0, x0b, t2, tol, guard) < direct - 10.0 * tol)
                monotone = false;
        }
        c.require(worst_cocycle <= 10.0 * tol,
                  "cocycle defect " + std::to_string(worst_cocycle));
        c.require(monotone, "fiber monotonicity violated");

        // Delimiter signs across all scans performed above, plus the three-copy
        // exponent sign pattern (-, +, -) in every 3-census.
        for (const DiagramReport& rep : g_scans) {
            for (const auto& [p, census] : rep.grid) {
                if (census.label == CensusLabel::Inconclusive) continue;
                // A pinched delimiter is only certified inside the collapse
                // band |x| < 10 tol, so allow that much numerical residue.
                c.require(census.alpha0 <= 1e-5 && census.beta0 >= -1e-5,
                          "delimiter sign violation at parameter " + std::to_string(p));
                if (census.count == 3) {
                    c.require(census.sets[0].exponent.value < 1e-3 &&
                                  census.sets[1].exponent.value > -1e-3 &&
                                  census.sets[2].exponent.value < 1e-3,
                              "3-census exponent pattern violated at parameter " +
                                  std::to_string(p));
                }
            }
        }

        // Parameter monotonicity of the delimiters.
        const Driver dp = cubic_driver(0.0, 0.0);
        double prev_beta = 0.0, prev_alpha = 0.0;
        for (double lam : {0.25, 0.5, 0.75, 1.0}) {
            Family f;
            f.lambda = lam;
            const AttractorSlice s =
                pullback_delimiters(f, dp, FiberGrid::uniform(dp, 8), 1e-6, {});
            const double beta = s.fibers.front().beta, alpha = s.fibers.front().alpha;
            c.require(beta >= prev_beta - 1e-5 && alpha <= prev_alpha + 1e-5,
                      "lambda-monotonicity violated at lambda = " + std::to_string(lam));
            prev_beta = beta;
            prev_alpha = alpha;
        }
        const Driver dm = cubic_driver(0.0, 1.0);
        prev_beta = -1e9;
        prev_alpha = -1e9;
        for (double mu : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            Family f;
            f.mu = mu;
            const AttractorSlice s =
                pullback_delimiters(f, dm, FiberGrid::uniform(dm, 8), 1e-6, {});
            const double beta = s.fibers.front().beta, alpha = s.fibers.front().alpha;
            c.require(beta >= prev_beta - 1e-5 && alpha >= prev_alpha - 1e-5,
                      "mu-monotonicity violated at mu = " + std::to_string(mu));
            prev_beta = beta;
            prev_alpha = alpha;
        }

        // rhs_x against central finite differences.
        double worst_fd = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const Driver d =
                cubic_driver(-1.0 + 2.0 * u(rng), -1.0 + 2.0 * u(rng));
            Family f;
            f.lambda = -1.0 + 2.0 * u(rng);
            f.mu = -1.0 + 2.0 * u(rng);
            const double t = -5.0 + 10.0 * u(rng);
            const double x = -2.0 + 4.0 * u(rng);
            const double h = 1e-5 * (1.0 + std::fabs(x));
            const double fd = (rhs(f, d, t, x + h) - rhs(f, d, t, x - h)) / (2.0 * h);
            const double an = rhs_x(f, d, t, x);
            worst_fd = std::max(worst_fd, std::fabs(fd - an) / (1.0 + std::fabs(an)));
        }
        c.require(worst_fd <= 1e-6, "rhs_x finite-difference defect " +
                                        std::to_string(worst_fd));
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    report(8, "invariant property suites", c.ok, c.why.str());
}

void criterion_9() {
    Check c;
    try {
        Driver sym;
        sym.kind = DriverKind::SymbolicFiniteErgodic;
        sym.n_measures = 1;
        sym.coefficients["a3"] = std::make_shared<TableFn>(TableEntry{{1.0}, 1.0, 1.0});
        sym.coefficients["a2"] = std::make_shared<TableFn>(TableEntry{{0.0}, 0.0, 0.0});
        sym.coefficients["a1"] = std::make_shared<TableFn>(TableEntry{{0.0}, 0.0, 0.0});
        const Family f;
        ScanConfig scan;
        scan.grid_points = 21;
        const DiagramReport rep = realize_diagram(f, sym, -1.0, {}, scan);
        c.require(rep.pattern == Pattern::Unresolved,
                  std::string("symbolic pattern = ") + to_string(rep.pattern));
        c.require(rep.expected_pattern.has_value(), "no expected pattern reported");
        c.require(rep.note.find("expected pattern only") != std::string::npos,
                  "missing expected-pattern-only note");
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    report(9, "non-reproducibility statement", c.ok, c.why.str());
    std::printf(
        "       note: the generalized pitchfork diagram is not reproducible as a\n"
        "       trajectory-level scan at desk scale: it requires a minimal but not\n"
        "       uniquely ergodic base flow whose coefficient spectrum is a band, and\n"
        "       no finite trajectory generates such a base. It is covered instead by\n"
        "       the criteria certification (criteria 5 and 6) and by the symbolic-mode\n"
        "       expected-pattern report of realize_diagram checked above.\n");
}

}  // namespace

int main() {
    std::setbuf(stdout, nullptr);
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (g_failures == 0) {
        std::printf("acceptance: all 9 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
