#include <cmath>
#include <sstream>

#include "doctest.h"
#include "skewfork/io.hpp"

using namespace skewfork;
using nlohmann::json;

TEST_CASE("driver_from_json: autonomous and periodic") {
    const json a = {{"kind", "autonomous"},
                    {"coefficients",
                     {{"a3", {{"type", "const"}, {"value", 1.0}}},
                      {"a2", {{"type", "const"}, {"value", 0.0}}},
                      {"a1", {{"type", "const"}, {"value", 0.5}}}}}};
    const Driver da = driver_from_json(a);
    CHECK(da.kind == DriverKind::Autonomous);
    CHECK(da.eval("a1", 3.7) == 0.5);

    const json p = {{"kind", "periodic"},
                    {"period", 2.0 * M_PI},
                    {"coefficients",
                     {{"a1", {{"type", "trig"}, {"mean", 0.2}, {"cos", {1.0}},
                              {"sin", {0.0, 0.5}}}}}}};
    const Driver dp = driver_from_json(p);
    CHECK(dp.kind == DriverKind::Periodic);
    for (double t : {0.0, 0.9, 2.4}) {
        CHECK(dp.eval("a1", t) ==
              doctest::Approx(0.2 + std::cos(t) + 0.5 * std::sin(2.0 * t)).epsilon(1e-12));
    }
}

TEST_CASE("driver_from_json: quasi-periodic and symbolic") {
    const json q = {{"kind", "quasiperiodic"},
                    {"frequencies", {1.0, std::sqrt(2.0)}},
                    {"coefficients", {{"a1", {{"type", "trig"}, {"cos", {1.0, 1.0}}}}}}};
    const Driver dq = driver_from_json(q);
    CHECK(dq.eval("a1", 1.0) ==
          doctest::Approx(std::cos(1.0) + std::cos(std::sqrt(2.0))).epsilon(1e-12));

    const json s = {{"kind", "symbolic"},
                    {"n", 2},
                    {"coefficients",
                     {{"a1", {{"type", "table"}, {"integrals", {-0.9, 0.9}},
                              {"min", -1.0}, {"max", 1.0}}}}}};
    const Driver ds = driver_from_json(s);
    CHECK(ds.kind == DriverKind::SymbolicFiniteErgodic);
    CHECK(ds.bounds("a1").lo == -1.0);
    CHECK(ds.bounds("a1").hi == 1.0);
}

TEST_CASE("driver_from_json: dotted field paths on invalid input") {
    auto field_of = [](const json& j) {
        try {
            (void)driver_from_json(j);
        } catch (const ConfigInvalid& e) {
            return e.field;
        }
        return std::string("no-throw");
    };
    CHECK(field_of(json::object()) == "driver.kind");
    CHECK(field_of({{"kind", "tidal"}}) == "driver.kind");
    CHECK(field_of({{"kind", "periodic"}, {"period", -1.0},
                    {"coefficients", json::object()}}) == "driver.period");
    CHECK(field_of({{"kind", "autonomous"},
                    {"coefficients", {{"a1", {{"type", "spline"}}}}}}) ==
          "driver.coefficients.a1.type");
    // Trig terms without a trajectory driver that defines their frequencies.
    CHECK(field_of({{"kind", "autonomous"},
                    {"coefficients", {{"a1", {{"type", "trig"}, {"cos", {1.0}}}}}}}) ==
          "driver.coefficients.a1");
    // Symbolic table must match the number of ergodic measures.
    CHECK(field_of({{"kind", "symbolic"},
                    {"n", 3},
                    {"coefficients",
                     {{"a1", {{"type", "table"}, {"integrals", {0.0, 1.0}},
                              {"min", 0.0}, {"max", 1.0}}}}}}) ==
          "driver.coefficients.a1");
    // Integral outside the stored extrema.
    CHECK(field_of({{"kind", "symbolic"},
                    {"n", 1},
                    {"coefficients",
                     {{"a1", {{"type", "table"}, {"integrals", {2.0}},
                              {"min", 0.0}, {"max", 1.0}}}}}}) ==
          "driver.coefficients.a1");
}

TEST_CASE("family_from_json") {
    const Family plain = family_from_json({{"lambda", 0.5}, {"mu", -0.25}});
    CHECK(plain.form == FamilyForm::Cubic);
    CHECK(plain.a1 == "a1");
    CHECK(plain.lambda == 0.5);
    CHECK(plain.mu == -0.25);

    const json g = {{"form", "general"},
                    {"h",
                     {{"expr",
                       {{"op", "mul"},
                        {"a", {{"op", "const"}, {"value", 0.5}}},
                        {"b", {{"op", "x"}}}}},
                      {"certificate", {{"rho0", 1.5}, {"eps0", 0.05}, {"m", 0.3}}}}}};
    const Family gen = family_from_json(g);
    CHECK(gen.form == FamilyForm::GeneralH);
    REQUIRE(gen.h.has_value());
    Driver dummy;
    CHECK(gen.h->eval(dummy, 0.0, 0.8) == doctest::Approx(0.4));
    CHECK(gen.h->dx(dummy, 0.0, 0.8) == doctest::Approx(0.5));
    REQUIRE(gen.h->certified.has_value());
    CHECK(gen.h->certified->rho0 == 1.5);
    CHECK(gen.h->certified->eps0 == 0.05);
    CHECK(gen.h->certified->m == 0.3);

    auto field_of = [](const json& j) {
        try {
            (void)family_from_json(j);
        } catch (const ConfigInvalid& e) {
            return e.field;
        }
        return std::string("no-throw");
    };
    CHECK(field_of({{"form", "general"}}) == "family.h");
    CHECK(field_of({{"form", "cubic"},
                    {"h", {{"expr", {{"op", "x"}}}}}}) == "family.h");
    CHECK(field_of({{"form", "general"},
                    {"h", {{"expr", {{"op", "nand"}}}}}}) == "family.h.expr.op");
}

TEST_CASE("report serialization is deterministic and key-ordered") {
    const Bounds b{-1.0, 1.0, 1.0, 1.0};
    const SpectrumInterval sp{-0.9, 0.9, true};
    const json j1 = to_json(cubic_verdict(b, sp, {0.7, 1.2}));
    const json j2 = to_json(cubic_verdict(b, sp, {0.7, 1.2}));
    CHECK(j1.dump() == j2.dump());
    CHECK(j1.at("ensured") == "GeneralizedPitchfork");
    CHECK(j1.at("witnesses").at("gp_condition").get<double>() ==
          doctest::Approx(2.48).epsilon(1e-12));

    ExponentReport rep;
    rep.value = -0.5;
    rep.classification = Hyperbolicity::Attractive;
    const json je = to_json(rep);
    CHECK(je.at("value") == -0.5);
    CHECK(je.at("classification") == "attractive");
}

TEST_CASE("write_diagram_csv") {
    DiagramReport r;
    MinimalSetCensus c;
    c.count = 3;
    c.label = CensusLabel::ThreeUpper;
    c.alpha0 = 0.0;
    c.beta0 = 1.7;
    c.kappa0 = 0.29;
    c.sets = {{Position::Zero, {-0.5, Hyperbolicity::Attractive}, DelimiterSource::Zero, 0.0},
              {Position::AboveZero, {0.4, Hyperbolicity::Repulsive}, DelimiterSource::Kappa,
               0.29},
              {Position::AboveZero, {-0.4, Hyperbolicity::Attractive}, DelimiterSource::Beta,
               1.7}};
    r.grid.emplace_back(-0.5, c);
    MinimalSetCensus one;
    one.count = 1;
    one.label = CensusLabel::One;
    one.sets = {{Position::Zero, {-1.0, Hyperbolicity::Attractive}, DelimiterSource::Zero,
                 0.0}};
    r.grid.emplace_back(-1.5, one);

    std::ostringstream os;
    write_diagram_csv(os, r);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line ==
          "parameter,fiber_offset,alpha,beta,kappa,exponent_lower,exponent_zero,"
          "exponent_upper");
    std::getline(is, line);
    CHECK(line.rfind("-0.5,0,0,1.7,0.29", 0) == 0);
    CHECK(line.find("-0.5" /* zero exponent column */, 5) != std::string::npos);
    std::getline(is, line);
    CHECK(line.rfind("-1.5,0,0,0,", 0) == 0);
    CHECK(!std::getline(is, line));
}
