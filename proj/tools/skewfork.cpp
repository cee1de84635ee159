#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "skewfork/io.hpp"

namespace {

using nlohmann::json;
using namespace skewfork;

struct CommonOpts {
    std::string config_path;
    std::string out_dir = ".";
    double tol = 0.0;  // 0 = keep config/default
    int jobs = 0;
    std::string format = "json";
};

json load_config(const CommonOpts& opts) {
    std::ifstream in(opts.config_path);
    if (!in) throw ConfigInvalid("--config", "cannot open '" + opts.config_path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigInvalid("--config", std::string("parse error: ") + e.what());
    }
    return j;
}

ScanConfig scan_config(const json& cfg, const CommonOpts& opts) {
    ScanConfig sc;
    if (cfg.contains("scan")) {
        const json& s = cfg.at("scan");
        sc.tol = s.value("tol", sc.tol);
        sc.tol_bif = s.value("tol_bif", sc.tol_bif);
        sc.grid_points = s.value("grid_points", sc.grid_points);
        sc.fibers = s.value("fibers", sc.fibers);
    }
    if (opts.tol > 0.0) sc.tol = opts.tol;
    sc.jobs = opts.jobs;
    return sc;
}

// The payload stays wall-clock free so identical configs give byte-identical
// reports; timestamps land in the sidecar only.
void persist(const CommonOpts& opts, const json& config, const json& report,
             const DiagramReport* diagram) {
    namespace fs = std::filesystem;
    fs::create_directories(opts.out_dir);
    json envelope = {{"config", config}, {"report", report}};
    if (opts.format != "csv") {
        std::ofstream out(fs::path(opts.out_dir) / "report.json");
        out << envelope.dump(2) << "\n";
    }
    if (diagram && opts.format != "json") {
        std::ofstream out(fs::path(opts.out_dir) / "diagram.csv");
        write_diagram_csv(out, *diagram);
    }
    std::ofstream meta(fs::path(opts.out_dir) / "run_meta.json");
    meta << json{{"timestamp", static_cast<long long>(std::time(nullptr))}}.dump(2) << "\n";
}

int run_scan(const CommonOpts& opts, bool mu_scan) {
    const json cfg = load_config(opts);
    const Driver d = driver_from_json(cfg.at("driver"));
    const Family f = family_from_json(cfg.value("family", json::object()));
    if (!cfg.contains("scan")) throw ConfigInvalid("scan", "missing section");
    const double lo = cfg.at("scan").at("lo").get<double>();
    const double hi = cfg.at("scan").at("hi").get<double>();
    const ScanConfig sc = scan_config(cfg, opts);
    const DiagramReport rep =
        mu_scan ? scan_mu(f, d, lo, hi, sc) : scan_lambda(f, d, lo, hi, sc);
    persist(opts, cfg, to_json(rep), &rep);
    std::cout << "pattern: " << to_string(rep.pattern) << "\n";
    return rep.pattern == Pattern::Unresolved ? 2 : 0;
}

int run_criteria(const CommonOpts& opts) {
    const json cfg = load_config(opts);
    if (!cfg.contains("criteria")) throw ConfigInvalid("criteria", "missing section");
    const json& c = cfg.at("criteria");
    const json& bj = c.at("bounds");
    Bounds b{bj.at("k1").get<double>(), bj.at("k2").get<double>(),
             bj.at("r1").get<double>(), bj.at("r2").get<double>()};
    const auto spv = c.at("spectrum").get<std::vector<double>>();
    const auto a2v = c.at("a2_range").get<std::vector<double>>();
    if (spv.size() != 2 || a2v.size() != 2)
        throw ConfigInvalid("criteria", "spectrum and a2_range must be pairs");
    const SpectrumInterval sp{spv[0], spv[1], true};
    CriteriaVerdict v;
    if (c.contains("h_params")) {
        HParams hp;
        hp.rho0 = c.at("h_params").value("rho0", 0.0);
        hp.eps0 = c.at("h_params").value("eps0", 0.0);
        v = general_h_verdict(b, sp, {a2v[0], a2v[1]}, hp);
    } else {
        v = cubic_verdict(b, sp, {a2v[0], a2v[1]});
    }
    persist(opts, cfg, to_json(v), nullptr);
    std::cout << to_json(v).dump(2) << "\n";
    return v.inconclusive ? 2 : 0;
}

int run_construct(const CommonOpts& opts) {
    const json cfg = load_config(opts);
    if (!cfg.contains("construct")) throw ConfigInvalid("construct", "missing section");
    const json& c = cfg.at("construct");
    const std::string mode = c.value("mode", "");
    json report;
    if (mode == "pitchfork-a1") {
        const Driver d = driver_from_json(cfg.at("driver"));
        const PitchforkSynthesis ps = synthesize_a1_for_pitchfork(d, c.value("a2", "a2"));
        report = {{"s", ps.s}, {"residual", ps.residual}, {"a1", ps.a1}, {"b", ps.b}};
    } else if (mode == "band-spectrum") {
        const auto t = c.at("target").get<std::vector<double>>();
        if (t.size() != 2) throw ConfigInvalid("construct.target", "must be a pair");
        report = to_json(realize_band_spectrum({t[0], t[1], true}, c.value("n", 2),
                                               c.value("r", 1.0)));
    } else if (mode == "project") {
        const BumpTable table = bump_table(c.at("n").get<int>(), c.at("epsilon").get<double>());
        TableEntry a;
        a.integrals = c.at("integrals").get<std::vector<double>>();
        a.min = c.value("min", 0.0);
        a.max = c.value("max", 0.0);
        report = to_json(project_onto_span(table, a));
    } else {
        throw ConfigInvalid("construct.mode",
                            "expected pitchfork-a1 | band-spectrum | project");
    }
    persist(opts, cfg, report, nullptr);
    std::cout << report.dump(2) << "\n";
    return 0;
}

int run_two_param(const CommonOpts& opts) {
    const json cfg = load_config(opts);
    const Driver d = driver_from_json(cfg.at("driver"));
    const Family f = family_from_json(cfg.value("family", json::object()));
    if (!cfg.contains("two_param")) throw ConfigInvalid("two_param", "missing section");
    const json& c = cfg.at("two_param");
    TwoParamConfig tc;
    tc.tol = c.value("tol", tc.tol);
    tc.pull_tol = c.value("pull_tol", tc.pull_tol);
    if (c.contains("mu_window")) {
        const auto w = c.at("mu_window").get<std::vector<double>>();
        tc.mu_window = {w.at(0), w.at(1)};
    }
    if (c.contains("lambda_window")) {
        const auto w = c.at("lambda_window").get<std::vector<double>>();
        tc.lambda_window = {w.at(0), w.at(1)};
    }
    const double lambda0 = c.at("lambda0").get<double>();
    const double mh = mu_hat(f, d, lambda0, tc);
    json report = {{"lambda0", lambda0}, {"mu_hat", mh}};
    int code = 0;
    if (c.value("realize", false)) {
        const DiagramReport rep = realize_diagram(f, d, lambda0, tc, scan_config(cfg, opts));
        report["realized_pattern"] = to_string(rep.pattern);
        if (rep.expected_pattern)
            report["expected_pattern"] = to_string(*rep.expected_pattern);
        if (rep.pattern == Pattern::Unresolved) code = 2;
    }
    if (c.contains("law_lambda0s") && c.contains("law_mus")) {
        const LawReport lr =
            verify_laws(f, d, c.at("law_lambda0s").get<std::vector<double>>(),
                        c.at("law_mus").get<std::vector<double>>(), tc);
        report["law_checks"] = to_json(lr);
    }
    persist(opts, cfg, report, nullptr);
    std::cout << report.dump(2) << "\n";
    return code;
}

int run_integrate(const CommonOpts& opts) {
    const json cfg = load_config(opts);
    const Driver d = driver_from_json(cfg.at("driver"));
    const Family f = family_from_json(cfg.value("family", json::object()));
    if (!cfg.contains("integrate")) throw ConfigInvalid("integrate", "missing section");
    const json& c = cfg.at("integrate");
    const double t0 = c.value("t0", 0.0);
    const double t1 = c.at("t1").get<double>();
    const double x0 = c.at("x0").get<double>();
    const double tol = opts.tol > 0.0 ? opts.tol : c.value("tol", 1e-8);
    const double x1 = flow_map(f, d, t0, x0, t1, tol);
    const json report = {{"t0", t0}, {"x0", x0}, {"t1", t1}, {"x1", x1}};
    persist(opts, cfg, report, nullptr);
    std::cout << report.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bifurcation-diagram laboratory for d-concave scalar ODE families"};
    app.require_subcommand(1);

    CommonOpts opts;
    for (auto* sub : {app.add_subcommand("scan-lambda", "scan the linear parameter"),
                      app.add_subcommand("scan-mu", "scan the quadratic parameter"),
                      app.add_subcommand("criteria", "evaluate the closed-form criteria"),
                      app.add_subcommand("construct", "synthesis pipelines"),
                      app.add_subcommand("two-param", "mu-hat / lambda-hat machinery"),
                      app.add_subcommand("integrate", "single trajectory")}) {
        sub->add_option("--config", opts.config_path, "config JSON path")
            ->required()
            ->envname("SKEWFORK_CONFIG");
        sub->add_option("--out", opts.out_dir, "output directory")->envname("SKEWFORK_OUT");
        sub->add_option("--tol", opts.tol, "tolerance override")->envname("SKEWFORK_TOL");
        sub->add_option("--jobs", opts.jobs, "worker threads")->envname("SKEWFORK_JOBS");
        sub->add_option("--format", opts.format, "json | csv | both")
            ->envname("SKEWFORK_FORMAT")
            ->check(CLI::IsMember({"json", "csv", "both"}));
    }
    CLI11_PARSE(app, argc, argv);

    try {
        const std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "scan-lambda") return run_scan(opts, false);
        if (cmd == "scan-mu") return run_scan(opts, true);
        if (cmd == "criteria") return run_criteria(opts);
        if (cmd == "construct") return run_construct(opts);
        if (cmd == "two-param") return run_two_param(opts);
        return run_integrate(opts);
    } catch (const skewfork::Inconclusive& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 2;
    } catch (const skewfork::PatternUnresolved& e) {
        std::cerr << "unresolved: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
