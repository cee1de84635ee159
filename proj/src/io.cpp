#include "skewfork/io.hpp"

#include <cmath>
#include <memory>
#include <vector>

#include "skewfork/errors.hpp"

namespace skewfork {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key, const std::string& path) {
    if (!j.is_object() || !j.contains(key))
        throw ConfigInvalid(path + "." + key, "missing field");
    return j.at(key);
}

double need_number(const json& j, const char* key, const std::string& path) {
    const json& v = need(j, key, path);
    if (!v.is_number()) throw ConfigInvalid(path + "." + key, "expected a number");
    return v.get<double>();
}

std::vector<double> number_list(const json& j, const std::string& path) {
    if (!j.is_array()) throw ConfigInvalid(path, "expected an array of numbers");
    std::vector<double> out;
    for (const auto& v : j) {
        if (!v.is_number()) throw ConfigInvalid(path, "expected an array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

HExprPtr hexpr_from_json(const json& j, const std::string& path) {
    const std::string op = need(j, "op", path).get<std::string>();
    if (op == "const") return std::make_shared<HConst>(need_number(j, "value", path));
    if (op == "x") return std::make_shared<HVar>();
    if (op == "coeff")
        return std::make_shared<HCoeff>(need(j, "id", path).get<std::string>());
    if (op == "add") {
        std::vector<HExprPtr> args;
        const json& a = need(j, "args", path);
        if (!a.is_array()) throw ConfigInvalid(path + ".args", "expected an array");
        for (size_t i = 0; i < a.size(); ++i)
            args.push_back(hexpr_from_json(a[i], path + ".args[" + std::to_string(i) + "]"));
        return std::make_shared<HAdd>(std::move(args));
    }
    if (op == "mul")
        return std::make_shared<HMul>(hexpr_from_json(need(j, "a", path), path + ".a"),
                                      hexpr_from_json(need(j, "b", path), path + ".b"));
    if (op == "pow")
        return std::make_shared<HPow>(hexpr_from_json(need(j, "a", path), path + ".a"),
                                      need(j, "p", path).get<int>());
    if (op == "sin")
        return std::make_shared<HSin>(hexpr_from_json(need(j, "a", path), path + ".a"));
    if (op == "exp")
        return std::make_shared<HExp>(hexpr_from_json(need(j, "a", path), path + ".a"));
    throw ConfigInvalid(path + ".op", "unknown operator '" + op + "'");
}

}  // namespace

CoeffPtr coefficient_from_json(const json& j, const Driver& d, const std::string& path) {
    const std::string type = need(j, "type", path).get<std::string>();
    if (type == "const") return std::make_shared<ConstantFn>(need_number(j, "value", path));
    if (type == "trig") {
        const double mean = j.value("mean", 0.0);
        std::vector<double> cosv, sinv;
        if (j.contains("cos")) cosv = number_list(j.at("cos"), path + ".cos");
        if (j.contains("sin")) sinv = number_list(j.at("sin"), path + ".sin");
        std::vector<TrigSeriesFn::Term> terms;
        if (d.kind == DriverKind::Periodic) {
            // Entry k is the amplitude of the k-th harmonic of the base period.
            const double base = 2.0 * M_PI / d.period;
            const size_t n = std::max(cosv.size(), sinv.size());
            for (size_t k = 0; k < n; ++k)
                terms.push_back({base * (k + 1), 0.0, k < cosv.size() ? cosv[k] : 0.0,
                                 k < sinv.size() ? sinv[k] : 0.0});
        } else if (d.kind == DriverKind::QuasiPeriodic) {
            // One amplitude pair per declared base frequency.
            if (cosv.size() > d.frequencies.size() || sinv.size() > d.frequencies.size())
                throw ConfigInvalid(path, "more amplitudes than driver frequencies");
            for (size_t k = 0; k < d.frequencies.size(); ++k) {
                const double c = k < cosv.size() ? cosv[k] : 0.0;
                const double s = k < sinv.size() ? sinv[k] : 0.0;
                if (c != 0.0 || s != 0.0)
                    terms.push_back({d.frequencies[k],
                                     k < d.phases.size() ? d.phases[k] : 0.0, c, s});
            }
        } else if (!cosv.empty() || !sinv.empty()) {
            throw ConfigInvalid(path, "trig terms need a periodic or quasi-periodic driver");
        }
        return std::make_shared<TrigSeriesFn>(mean, std::move(terms));
    }
    if (type == "table") {
        TableEntry e;
        e.integrals = number_list(need(j, "integrals", path), path + ".integrals");
        e.min = need_number(j, "min", path);
        e.max = need_number(j, "max", path);
        if (e.integrals.empty()) throw ConfigInvalid(path + ".integrals", "empty table");
        for (double v : e.integrals)
            if (!(e.min <= v && v <= e.max))
                throw ConfigInvalid(path, "integral outside stored extrema");
        return std::make_shared<TableFn>(std::move(e));
    }
    throw ConfigInvalid(path + ".type", "unknown coefficient type '" + type + "'");
}

Driver driver_from_json(const json& j) {
    Driver d;
    const std::string kind = need(j, "kind", "driver").get<std::string>();
    if (kind == "autonomous") {
        d.kind = DriverKind::Autonomous;
    } else if (kind == "periodic") {
        d.kind = DriverKind::Periodic;
        d.period = need_number(j, "period", "driver");
        if (!(d.period > 0)) throw ConfigInvalid("driver.period", "must be positive");
    } else if (kind == "quasiperiodic") {
        d.kind = DriverKind::QuasiPeriodic;
        d.frequencies = number_list(need(j, "frequencies", "driver"), "driver.frequencies");
        if (d.frequencies.empty())
            throw ConfigInvalid("driver.frequencies", "must be nonempty");
        if (j.contains("phases"))
            d.phases = number_list(j.at("phases"), "driver.phases");
    } else if (kind == "symbolic") {
        d.kind = DriverKind::SymbolicFiniteErgodic;
        d.n_measures = need(j, "n", "driver").get<int>();
        if (d.n_measures < 1) throw ConfigInvalid("driver.n", "must be >= 1");
    } else {
        throw ConfigInvalid("driver.kind", "unknown kind '" + kind + "'");
    }
    d.origin = j.value("origin", 0.0);
    const json& coeffs = need(j, "coefficients", "driver");
    if (!coeffs.is_object())
        throw ConfigInvalid("driver.coefficients", "expected an object");
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
        const CoeffPtr fn =
            coefficient_from_json(it.value(), d, "driver.coefficients." + it.key());
        if (d.kind == DriverKind::SymbolicFiniteErgodic) {
            const TableEntry* e = fn->table();
            if (e && static_cast<int>(e->integrals.size()) != d.n_measures)
                throw ConfigInvalid("driver.coefficients." + it.key(),
                                    "table size does not match driver.n");
        }
        d.coefficients[it.key()] = fn;
    }
    return d;
}

Family family_from_json(const json& j) {
    Family f;
    const std::string form = j.value("form", "cubic");
    if (form == "cubic")
        f.form = FamilyForm::Cubic;
    else if (form == "general")
        f.form = FamilyForm::GeneralH;
    else
        throw ConfigInvalid("family.form", "unknown form '" + form + "'");
    f.a1 = j.value("a1", "a1");
    f.a2 = j.value("a2", "a2");
    f.a3 = j.value("a3", "a3");
    f.lambda = j.value("lambda", 0.0);
    f.mu = j.value("mu", 0.0);
    if (j.contains("h")) {
        const json& h = j.at("h");
        HTerm term;
        term.expression = hexpr_from_json(need(h, "expr", "family.h"), "family.h.expr");
        if (h.contains("certificate")) {
            const json& c = h.at("certificate");
            HCertificate cert;
            cert.rho0 = need_number(c, "rho0", "family.h.certificate");
            cert.eps0 = need_number(c, "eps0", "family.h.certificate");
            cert.m = c.value("m", 0.0);
            term.certified = cert;
        }
        f.h = term;
        if (f.form != FamilyForm::GeneralH)
            throw ConfigInvalid("family.h", "h term requires form = general");
    } else if (f.form == FamilyForm::GeneralH) {
        throw ConfigInvalid("family.h", "form = general requires an h term");
    }
    return f;
}

namespace {

const char* to_string(Hyperbolicity h) {
    switch (h) {
        case Hyperbolicity::Attractive: return "attractive";
        case Hyperbolicity::Repulsive: return "repulsive";
        default: return "nonhyperbolic";
    }
}

const char* to_string(Position p) {
    switch (p) {
        case Position::BelowZero: return "below";
        case Position::AboveZero: return "above";
        default: return "zero";
    }
}

const char* to_string(DelimiterSource s) {
    switch (s) {
        case DelimiterSource::Alpha: return "alpha";
        case DelimiterSource::Beta: return "beta";
        case DelimiterSource::Kappa: return "kappa";
        default: return "zero";
    }
}

}  // namespace

json to_json(const ExponentReport& r) {
    return {{"value", r.value}, {"classification", to_string(r.classification)}};
}

json to_json(const MinimalSetCensus& c) {
    json sets = json::array();
    for (const auto& s : c.sets)
        sets.push_back({{"position", to_string(s.position)},
                        {"source", to_string(s.source)},
                        {"value_at_fiber0", s.value_at_fiber0},
                        {"exponent", to_json(s.exponent)}});
    json out = {{"count", c.count}, {"label", to_string(c.label)},
                {"alpha0", c.alpha0}, {"beta0", c.beta0},
                {"note", c.note},     {"sets", sets}};
    if (c.kappa0) out["kappa0"] = *c.kappa0;
    return out;
}

json to_json(const DiagramReport& r) {
    json grid = json::array();
    for (const auto& [p, census] : r.grid)
        grid.push_back({{"parameter", p}, {"census", to_json(census)}});
    json points = json::array();
    for (const auto& bp : r.points)
        points.push_back({{"value", bp.value}, {"kind", to_string(bp.kind)}});
    json out = {{"pattern", to_string(r.pattern)}, {"side", to_string(r.side)},
                {"note", r.note},                  {"points", points},
                {"grid", grid}};
    if (r.expected_pattern) out["expected_pattern"] = to_string(*r.expected_pattern);
    return out;
}

json to_json(const CriteriaVerdict& v) {
    json precluded = json::array();
    for (Pattern p : v.precluded) precluded.push_back(to_string(p));
    json out = {{"precluded", precluded},
                {"side", to_string(v.side)},
                {"inconclusive", v.inconclusive},
                {"note", v.note},
                {"witnesses", json(v.witnesses)}};
    if (v.ensured) out["ensured"] = to_string(*v.ensured);
    return out;
}

json to_json(const LawReport& r) {
    return {{"mu_hats", r.mu_hats},
            {"round_trips", r.round_trips},
            {"lambda_hats", r.lambda_hats},
            {"identity_ok", r.identity_ok},
            {"monotone_ok", r.monotone_ok}};
}

json to_json(const BandRealization& r) {
    return {{"alphas", r.alphas},
            {"epsilon", r.table.epsilon},
            {"a1_integrals", r.a1.integrals},
            {"a1_extrema", {r.a1.min, r.a1.max}},
            {"bounds", {{"k1", r.bounds.k1}, {"k2", r.bounds.k2},
                        {"r1", r.bounds.r1}, {"r2", r.bounds.r2}}},
            {"spectrum", {r.spectrum.lo, r.spectrum.hi}},
            {"a2_window", {r.a2_window.lo, r.a2_window.hi}},
            {"gp_condition", r.gp_condition}};
}

json to_json(const ProjectionResult& r) {
    return {{"alphas", r.alphas}, {"residual_integrals", r.residual_integrals}};
}

json to_json(const AttractorSlice& s) {
    json fibers = json::array();
    for (const auto& f : s.fibers)
        fibers.push_back({{"s", f.s}, {"alpha", f.alpha}, {"beta", f.beta}});
    return {{"fibers", fibers},
            {"horizon_used", s.horizon_used},
            {"residual", s.residual}};
}

void write_diagram_csv(std::ostream& os, const DiagramReport& r) {
    os << "parameter,fiber_offset,alpha,beta,kappa,exponent_lower,exponent_zero,"
          "exponent_upper\n";
    for (const auto& [p, census] : r.grid) {
        os << p << ",0," << census.alpha0 << "," << census.beta0 << ",";
        if (census.kappa0) os << *census.kappa0;
        std::string lower, zero, upper;
        for (const auto& set : census.sets) {
            const std::string v = std::to_string(set.exponent.value);
            if (set.source == DelimiterSource::Zero)
                zero = v;
            else if (set.position == Position::BelowZero)
                lower = v;
            else if (set.position == Position::AboveZero)
                upper = v;
        }
        os << "," << lower << "," << zero << "," << upper << "\n";
    }
}

}  // namespace skewfork
