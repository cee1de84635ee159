#pragma once

#include <string>
#include <vector>

#include "skewfork/criteria.hpp"
#include "skewfork/dynamics.hpp"

namespace skewfork {

// Result of the exponential change of variables y = e^{-b} x: the transformed
// cubic family together with a driver that carries its coefficients (ids get a
// "~" suffix).
struct TransformedFamily {
    Family family;
    Driver driver;
};

TransformedFamily change_of_variables(const Family& f, const Driver& d, const std::string& b);

// a1 = b' with b = log(s c1 + (1-s) c2) built so the weighted mean of e^b a2
// over the period vanishes.
struct PitchforkSynthesis {
    Driver driver;        // input driver plus coefficients "b" and "a1"
    std::string a1 = "a1";
    std::string b = "b";
    double s = 0.0;
    double residual = 0.0;  // |integral of e^b a2| over the period
};

PitchforkSynthesis synthesize_a1_for_pitchfork(const Driver& d, const std::string& a2);

// Closed-form admissibility threshold for the bump-table epsilon; in (0, 1/n).
double epsilon1(int n, double r);

// Integral table of n smooth bumps against n ergodic measures: diagonal
// 1 - eps/2, off-diagonal eps/2, extrema (0, 1), pairwise disjoint supports.
struct BumpTable {
    int n = 0;
    double epsilon = 0.0;
    std::vector<std::vector<double>> C;  // C[i][j] = integral of c_j against m_i
    bool disjoint_support = true;

    void validate() const;
};

BumpTable bump_table(int n, double epsilon);

struct A1Synthesis {
    TableEntry a1;             // integrals C * alpha, extrema (alpha_1, alpha_n)
    SpectrumInterval spectrum; // [min, max] of the integrals
    bool spectrum_gap_ok = false;  // lambda_+ - lambda_- > (1 - n eps)(alpha_n - alpha_1) > 0
    bool gp_condition = false;     // width^2 + 4 r (lambda_+ + a1min)(lambda_+ + a1max) > 0
};

A1Synthesis a1_from_alphas(const BumpTable& table, const std::vector<double>& alphas,
                           double r);

struct ProjectionResult {
    std::vector<double> alphas;
    std::vector<double> residual_integrals;  // all ~ 0 by construction
};

ProjectionResult project_onto_span(const BumpTable& table, const TableEntry& a);

// End-to-end symbolic realization of a prescribed band spectrum, with the
// nonempty a2 window on which the criteria engine certifies the generalized
// pitchfork.
struct BandRealization {
    BumpTable table;
    std::vector<double> alphas;
    TableEntry a1;
    Bounds bounds;          // k1 = alpha_1, k2 = alpha_n, r1 = 1, r2 = r
    SpectrumInterval spectrum;
    Interval a2_window;
    bool gp_condition = false;
};

BandRealization realize_band_spectrum(const SpectrumInterval& target, int n, double r);

}  // namespace skewfork
