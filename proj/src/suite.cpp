#include "quatcheck/suite.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "quatcheck/sampling.hpp"

namespace quatcheck {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

Quaternion point_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("point must be a 4-element array [w,x,y,z]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

double inscribed_radius(const Domain& d) {
    if (d.is_ball()) return d.ball_shape().radius;
    const auto& bx = d.box_shape();
    double r = bx.max_corner.component(0) - bx.min_corner.component(0);
    for (int c = 1; c < 4; ++c)
        r = std::min(r, bx.max_corner.component(c) - bx.min_corner.component(c));
    return 0.5 * r;
}

TestFunction test_function_for(const RunConfig& cfg, const Domain& d) {
    if (!cfg.test_function.empty()) return parse_test_function(cfg.test_function);
    return make_bump(d.centroid(), 0.8 * inscribed_radius(d));
}

}  // namespace

const std::vector<std::string>& registered_checks() {
    static const std::vector<std::string> names = {
        "gauss",           "green",           "sphere-limit",   "kernel-identities",
        "kernel-regularity", "testfn-kernel", "newton-potential", "cauchy",
        "weak",            "weak-inhom",      "semiweak-cullen", "cullen-represent",
        "classical-probe",
    };
    return names;
}

RunConfig default_config(const std::string& check_name) {
    RunConfig cfg;
    cfg.check = check_name;
    if (check_name == "gauss") {
        cfg.domain = "ball:0,0,0,0,1";
        cfg.field = "coord:0;coord:1;coord:2;coord:3";
        cfg.tol = 1e-6;
    } else if (check_name == "green") {
        cfg.domain = "ball:0,0,0,0,1";
        cfg.field = "bump:0,0,0,0,0.8";
        cfg.rhs_field = "kernel:2,0,0,0";
        cfg.tol = 1e-4;
    } else if (check_name == "sphere-limit") {
        cfg.point = Quaternion{0.3, 0.2, -0.1, 0.4};
        cfg.field = "power:2";
        cfg.eps_list = {0.2, 0.1, 0.05};
        cfg.tol = 0.05;  // limit gap at the coarsest eps; f = q^2 gives eps^2/2
    } else if (check_name == "kernel-identities") {
        cfg.samples = 10000;
        cfg.tol = 1e-12;
    } else if (check_name == "kernel-regularity") {
        cfg.samples = 100;
        cfg.tol = 1e-7;
    } else if (check_name == "testfn-kernel") {
        cfg.domain = "ball:0,0,0,0,1";
        cfg.test_function = "bump:0,0,0,0,0.8";
        cfg.point = Quaternion{};
        cfg.tol = 1e-3;
    } else if (check_name == "newton-potential") {
        cfg.domain = "ball:0,0,0,0,1";
        cfg.rhs_field = "const:-2,0,0,0";
        cfg.probes = 10;
        cfg.tol = 1e-2;
    } else if (check_name == "cauchy") {
        cfg.domain = "ball:0,0,0,0,1";
        cfg.field = "const";
        cfg.point = Quaternion{0.45, 0.1, 0.2, -0.1};
        cfg.tol = 1e-6;
    } else if (check_name == "weak") {
        cfg.domain = "ball:0,0,0,0,1";
        cfg.field = "kernel:2,0,0,0";
        cfg.test_function = "bump:0,0,0,0,0.8";
        cfg.expected = "zero";
        cfg.tol = 1e-4;
    } else if (check_name == "weak-inhom") {
        cfg.domain = "ball:0,0,0,0,1";
        cfg.field = "identity";
        cfg.rhs_field = "const:-2,0,0,0";
        cfg.test_function = "bump:0,0,0,0,0.8";
        cfg.tol = 1e-3;
    } else if (check_name == "semiweak-cullen") {
        cfg.domain = "ball:0,2,2,0,1";
        cfg.field = "identity";
        cfg.test_function = "bump:0,2,2,0,0.6";
        cfg.tol = 1e-3;
    } else if (check_name == "cullen-represent") {
        cfg.domain = "ball:2,2,2,0,0.8";
        cfg.field = "identity";
        cfg.point = Quaternion{2, 2, 2, 0};
        cfg.tol = 1e-3;
    } else if (check_name == "classical-probe") {
        cfg.domain = "ball:0,0,0,0,1";
        cfg.field = "kernel:3,0,0,0";
        cfg.rhs_field = "const:0,0,0,0";
        cfg.probes = 10;
        cfg.tol = 1e-7;
    } else {
        throw std::invalid_argument("unknown check: " + check_name);
    }
    return cfg;
}

RunConfig merge_with_defaults(const RunConfig& o) {
    RunConfig cfg = default_config(o.check);
    if (!o.domain.empty()) cfg.domain = o.domain;
    if (!o.field.empty()) cfg.field = o.field;
    if (!o.rhs_field.empty()) cfg.rhs_field = o.rhs_field;
    if (!o.test_function.empty()) cfg.test_function = o.test_function;
    if (!o.eps_list.empty()) cfg.eps_list = o.eps_list;
    if (o.point) cfg.point = o.point;
    if (o.resolution > 0) cfg.resolution = o.resolution;
    cfg.fd_step = o.fd_step;
    cfg.richardson = o.richardson;
    cfg.potential_fd_step = o.potential_fd_step;
    if (o.tol) cfg.tol = o.tol;
    cfg.seed = o.seed;
    if (o.samples) cfg.samples = o.samples;
    if (o.probes) cfg.probes = o.probes;
    if (!o.expected.empty()) cfg.expected = o.expected;
    if (!o.resolutions.empty()) cfg.resolutions = o.resolutions;
    if (!o.out.empty()) cfg.out = o.out;
    if (!o.format.empty()) cfg.format = o.format;
    return cfg;
}

RunConfig config_from_json(const nlohmann::json& j) {
    if (!j.contains("check")) throw std::invalid_argument("config entry missing \"check\"");
    RunConfig cfg = default_config(j.at("check").get<std::string>());
    if (j.contains("domain")) cfg.domain = j.at("domain").get<std::string>();
    if (j.contains("field")) cfg.field = j.at("field").get<std::string>();
    if (j.contains("rhs_field")) cfg.rhs_field = j.at("rhs_field").get<std::string>();
    if (j.contains("test_function")) cfg.test_function = j.at("test_function").get<std::string>();
    if (j.contains("eps")) cfg.eps_list = j.at("eps").get<std::vector<double>>();
    if (j.contains("point")) cfg.point = point_from_json(j.at("point"));
    if (j.contains("resolution")) cfg.resolution = j.at("resolution").get<int>();
    if (j.contains("fd_step")) cfg.fd_step = j.at("fd_step").get<double>();
    if (j.contains("richardson")) cfg.richardson = j.at("richardson").get<int>();
    if (j.contains("potential_fd_step"))
        cfg.potential_fd_step = j.at("potential_fd_step").get<double>();
    if (j.contains("tol")) cfg.tol = j.at("tol").get<double>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("samples")) cfg.samples = j.at("samples").get<int>();
    if (j.contains("probes")) cfg.probes = j.at("probes").get<int>();
    if (j.contains("expected")) cfg.expected = j.at("expected").get<std::string>();
    if (j.contains("resolutions")) cfg.resolutions = j.at("resolutions").get<std::vector<double>>();
    if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
    if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
    return cfg;
}

nlohmann::json config_to_json(const RunConfig& cfg) {
    nlohmann::json j;
    j["check"] = cfg.check;
    if (!cfg.domain.empty()) j["domain"] = cfg.domain;
    if (!cfg.field.empty()) j["field"] = cfg.field;
    if (!cfg.rhs_field.empty()) j["rhs_field"] = cfg.rhs_field;
    if (!cfg.test_function.empty()) j["test_function"] = cfg.test_function;
    if (!cfg.eps_list.empty()) j["eps"] = cfg.eps_list;
    if (cfg.point) j["point"] = quaternion_to_json(*cfg.point);
    if (cfg.resolution > 0) j["resolution"] = cfg.resolution;
    j["fd_step"] = cfg.fd_step;
    j["richardson"] = cfg.richardson;
    j["potential_fd_step"] = cfg.potential_fd_step;
    if (cfg.tol) j["tol"] = *cfg.tol;
    j["seed"] = cfg.seed;
    if (cfg.samples) j["samples"] = *cfg.samples;
    if (cfg.probes) j["probes"] = *cfg.probes;
    if (!cfg.expected.empty()) j["expected"] = cfg.expected;
    if (!cfg.resolutions.empty()) j["resolutions"] = cfg.resolutions;
    if (!cfg.format.empty()) j["format"] = cfg.format;
    return j;
}

RuleSet rules_for(const RunConfig& cfg) {
    RuleSet rules;
    if (cfg.resolution > 0) {
        const int n = cfg.resolution;
        const int n43 = std::max(4, static_cast<int>(std::lround(n * 4.0 / 3.0)));
        rules.volume_n = n;
        rules.boundary_n = n43;
        rules.eps_n = n;
        rules.singular.radial_n = n43;
        rules.singular.angular_n = n;
    }
    return rules;
}

CheckOutcome run_check(const RunConfig& raw) {
    const RunConfig cfg = merge_with_defaults(raw);
    const RuleSet rules = rules_for(cfg);
    const FDConfig fd{cfg.fd_step, cfg.richardson};
    const double tol = *cfg.tol;

    CheckOutcome outcome;
    if (cfg.check == "gauss") {
        const Domain d = parse_domain(cfg.domain);
        const auto specs = split(cfg.field, ';');
        if (specs.size() != 4)
            throw std::invalid_argument("gauss needs four ';'-separated field specs");
        const std::array<QuaternionField, 4> f = {parse_field(specs[0]), parse_field(specs[1]),
                                                  parse_field(specs[2]), parse_field(specs[3])};
        outcome.reports.push_back(gauss_check(d, f, rules, fd, tol));
    } else if (cfg.check == "green") {
        const Domain d = parse_domain(cfg.domain);
        if (cfg.field.rfind("bump", 0) == 0)
            outcome.reports.push_back(green_check(d, parse_test_function(cfg.field),
                                                  parse_field(cfg.rhs_field), rules, fd, tol));
        else
            outcome.reports.push_back(green_check(d, parse_field(cfg.field),
                                                  parse_field(cfg.rhs_field), rules, fd, tol));
    } else if (cfg.check == "sphere-limit") {
        outcome.reports =
            sphere_limit_check(*cfg.point, parse_field(cfg.field), cfg.eps_list, rules, tol);
    } else if (cfg.check == "kernel-identities") {
        outcome.reports.push_back(kernel_identities_check(*cfg.samples, cfg.seed, tol));
    } else if (cfg.check == "kernel-regularity") {
        const auto pairs = sample_kernel_pairs(*cfg.samples, 0.5, 2.0, cfg.seed);
        outcome.reports.push_back(kernel_regularity_check(pairs, fd, tol));
    } else if (cfg.check == "testfn-kernel") {
        const Domain d = parse_domain(cfg.domain);
        outcome.reports.push_back(
            test_function_kernel_check(d, test_function_for(cfg, d), *cfg.point, rules, tol));
    } else if (cfg.check == "newton-potential") {
        const Domain d = parse_domain(cfg.domain);
        const double margin = std::max(4.0 * cfg.potential_fd_step, 0.25 * inscribed_radius(d));
        const auto probes = sample_interior_points(d, *cfg.probes, margin, cfg.seed);
        outcome.reports.push_back(newton_potential_check(d, parse_field(cfg.rhs_field), probes,
                                                         rules, cfg.potential_fd_step, tol));
    } else if (cfg.check == "cauchy") {
        const Domain d = parse_domain(cfg.domain);
        outcome.reports.push_back(cauchy_check(d, parse_field(cfg.field), *cfg.point, rules, tol));
    } else if (cfg.check == "weak") {
        const Domain d = parse_domain(cfg.domain);
        outcome.reports.push_back(weak_check(d, parse_field(cfg.field), test_function_for(cfg, d),
                                             rules, fd, tol, cfg.expected == "zero"));
    } else if (cfg.check == "weak-inhom") {
        const Domain d = parse_domain(cfg.domain);
        outcome.reports.push_back(weak_inhom_check(d, parse_field(cfg.field),
                                                   parse_field(cfg.rhs_field),
                                                   test_function_for(cfg, d), rules, fd, tol));
    } else if (cfg.check == "semiweak-cullen") {
        const Domain d = parse_domain(cfg.domain);
        outcome.reports.push_back(
            semiweak_check(d, parse_field(cfg.field), test_function_for(cfg, d), rules, fd, tol));
    } else if (cfg.check == "cullen-represent") {
        const Domain d = parse_domain(cfg.domain);
        outcome.reports.push_back(
            cullen_represent_check(d, parse_field(cfg.field), *cfg.point, rules, fd, tol));
    } else if (cfg.check == "classical-probe") {
        const Domain d = parse_domain(cfg.domain);
        const auto probes =
            sample_interior_points(d, *cfg.probes, 0.05 * inscribed_radius(d), cfg.seed);
        outcome.reports.push_back(classical_from_weak_probe(
            d, parse_field(cfg.field), parse_field(cfg.rhs_field), probes, fd, tol));
    } else {
        throw std::invalid_argument("unknown check: " + cfg.check);
    }

    for (auto& report : outcome.reports) report.parameters["config"] = config_to_json(cfg);
    outcome.pass = std::all_of(outcome.reports.begin(), outcome.reports.end(),
                               [](const CheckReport& r) { return r.pass; });
    return outcome;
}

ConvergenceTable run_convergence(const RunConfig& raw) {
    const RunConfig cfg = merge_with_defaults(raw);
    if (cfg.resolutions.size() < 3 && !(cfg.check == "sphere-limit" && cfg.eps_list.size() >= 3))
        throw std::invalid_argument("run_convergence: at least 3 resolutions required");

    std::vector<ConvergenceRow> rows;
    if (cfg.check == "sphere-limit") {
        const auto eps_values = cfg.resolutions.empty() ? cfg.eps_list : cfg.resolutions;
        for (double eps : eps_values) {
            RunConfig one = cfg;
            one.eps_list = {eps};
            one.resolutions.clear();
            const CheckOutcome out = run_check(one);
            const CheckReport& r = out.reports.front();
            rows.push_back({1.0 / eps, r.abs_err, r.rel_err, r.elapsed_seconds});
        }
    } else {
        for (double res : cfg.resolutions) {
            RunConfig one = cfg;
            one.resolution = std::max(4, static_cast<int>(std::lround(res)));
            one.resolutions.clear();
            const CheckOutcome out = run_check(one);
            double abs_err = 0.0, rel_err = 0.0, elapsed = 0.0;
            for (const auto& r : out.reports) {
                abs_err = std::max(abs_err, r.abs_err);
                rel_err = std::max(rel_err, r.rel_err);
                elapsed += r.elapsed_seconds;
            }
            rows.push_back({static_cast<double>(one.resolution), abs_err, rel_err, elapsed});
        }
    }
    return fit_convergence(std::move(rows));
}

nlohmann::json outcome_to_json(const CheckOutcome& outcome) {
    if (outcome.reports.size() == 1) return to_json(outcome.reports.front());
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : outcome.reports) arr.push_back(to_json(r));
    return arr;
}

std::string outcome_to_csv(const CheckOutcome& outcome) {
    std::ostringstream os;
    os.precision(17);
    os << "check_name,pass,abs_err,rel_err,elapsed_seconds\n";
    for (const auto& r : outcome.reports)
        os << r.check_name << "," << (r.pass ? 1 : 0) << "," << r.abs_err << "," << r.rel_err
           << "," << r.elapsed_seconds << "\n";
    return os.str();
}

nlohmann::json summary_to_json(const SuiteSummary& summary) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : summary.reports) checks.push_back(to_json(r));
    nlohmann::json j;
    j["checks"] = checks;
    j["total"] = summary.total;
    j["passed"] = summary.passed;
    j["pass"] = summary.pass;
    return j;
}

SuiteSummary run_suite_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open suite file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t upto = std::min(e.byte, text.size());
        const long line = 1 + std::count(text.begin(), text.begin() + upto, '\n');
        throw std::invalid_argument("suite parse error at line " + std::to_string(line) + ": " +
                                    e.what());
    }
    if (!doc.contains("checks") || !doc.at("checks").is_array())
        throw std::invalid_argument("suite file must contain a \"checks\" array");

    SuiteSummary summary;
    for (const auto& entry : doc.at("checks")) {
        const CheckOutcome outcome = run_check(config_from_json(entry));
        for (const auto& r : outcome.reports) summary.reports.push_back(r);
    }
    std::stable_sort(summary.reports.begin(), summary.reports.end(),
                     [](const CheckReport& a, const CheckReport& b) {
                         return a.check_name < b.check_name;
                     });
    summary.total = static_cast<int>(summary.reports.size());
    summary.passed = static_cast<int>(std::count_if(summary.reports.begin(), summary.reports.end(),
                                                    [](const CheckReport& r) { return r.pass; }));
    summary.pass = summary.passed == summary.total;
    return summary;
}

}  // namespace quatcheck
