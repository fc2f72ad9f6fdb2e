// Command-line driver: one subcommand per identity check, plus convergence
// studies and suite execution. Reports are JSON (quaternions as [w,x,y,z]);
// exit codes: 0 pass, 1 tolerance failure, 2 usage/config error, 3 numerical
// evaluation error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quatcheck/suite.hpp"

namespace {

using namespace quatcheck;

struct Flags {
    std::string domain, field, rhs_field, test_function, point, eps, expected;
    std::string out, format, resolutions, suite_path, convergence_check;
    int resolution = 0;
    int richardson = 0;
    int samples = 0;
    int probes = 0;
    double fd_step = 0.0;
    double potential_fd_step = 0.0;
    double tol = -1.0;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

Quaternion parse_point(const std::string& s) {
    const auto v = parse_double_list(s);
    if (v.size() != 4) throw std::invalid_argument("--point expects w,x,y,z");
    return {v[0], v[1], v[2], v[3]};
}

void add_check_flags(CLI::App* sub, Flags& flags) {
    sub->add_option("--domain", flags.domain, "ball:w,x,y,z,R or box:8 reals");
    sub->add_option("--field", flags.field,
                    "const | const:w,x,y,z | identity | conj | power:n | kernel:w,x,y,z | "
                    "coord:axis | bump:w,x,y,z,r");
    sub->add_option("--rhs-field", flags.rhs_field, "right-hand-side field h (same grammar)");
    sub->add_option("--test-function", flags.test_function, "bump:w,x,y,z,radius");
    sub->add_option("--point", flags.point, "evaluation point w,x,y,z");
    sub->add_option("--eps", flags.eps, "comma-separated sphere radii");
    sub->add_option("--resolution", flags.resolution, "master rule resolution (default 24)");
    sub->add_option("--fd-step", flags.fd_step, "finite-difference base step (default 1e-4)");
    sub->add_option("--richardson", flags.richardson, "Richardson levels (default 2)");
    sub->add_option("--potential-fd-step", flags.potential_fd_step,
                    "step for differentiating the Newton potential (default 0.05)");
    sub->add_option("--tol", flags.tol, "pass tolerance override");
    sub->add_option("--seed", flags.seed, "random seed (default 12345)")
        ->each([&flags](const std::string&) { flags.seed_set = true; });
    sub->add_option("--samples", flags.samples, "sample count for randomized checks");
    sub->add_option("--probes", flags.probes, "probe count for pointwise checks");
    sub->add_option("--expected", flags.expected, "weak check: byparts | zero");
    sub->add_option("--out", flags.out, "output path (default stdout)");
    sub->add_option("--format", flags.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

RunConfig overrides_from_flags(const std::string& check, const Flags& flags) {
    RunConfig cfg;
    cfg.check = check;
    cfg.domain = flags.domain;
    cfg.field = flags.field;
    cfg.rhs_field = flags.rhs_field;
    cfg.test_function = flags.test_function;
    if (!flags.point.empty()) cfg.point = parse_point(flags.point);
    if (!flags.eps.empty()) cfg.eps_list = parse_double_list(flags.eps);
    cfg.resolution = flags.resolution;
    if (flags.fd_step > 0.0) cfg.fd_step = flags.fd_step;
    if (flags.richardson > 0) cfg.richardson = flags.richardson;
    if (flags.potential_fd_step > 0.0) cfg.potential_fd_step = flags.potential_fd_step;
    if (flags.tol >= 0.0) cfg.tol = flags.tol;
    if (flags.seed_set) cfg.seed = flags.seed;
    if (flags.samples > 0) cfg.samples = flags.samples;
    if (flags.probes > 0) cfg.probes = flags.probes;
    cfg.expected = flags.expected;
    if (!flags.resolutions.empty()) cfg.resolutions = parse_double_list(flags.resolutions);
    cfg.out = flags.out;
    if (!flags.format.empty()) cfg.format = flags.format;
    return cfg;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw std::invalid_argument("cannot open output path: " + out_path);
    os << text;
}

int run_one_check(const RunConfig& overrides) {
    const CheckOutcome outcome = run_check(overrides);
    std::string text;
    if (overrides.format == "csv")
        text = outcome_to_csv(outcome);
    else
        text = outcome_to_json(outcome).dump(2) + "\n";
    emit(text, overrides.out);
    if (!overrides.out.empty()) {
        for (const auto& r : outcome.reports)
            std::cout << r.check_name << ": " << (r.pass ? "pass" : "FAIL")
                      << " (abs_err=" << r.abs_err << ", rel_err=" << r.rel_err << ")\n";
    }
    return outcome.pass ? kExitPass : kExitToleranceFailure;
}

int run_convergence_cmd(const RunConfig& overrides) {
    const ConvergenceTable table = run_convergence(overrides);
    std::string text;
    if (overrides.format == "csv")
        text = to_csv(table);
    else
        text = to_json(table).dump(2) + "\n";
    emit(text, overrides.out);
    return kExitPass;
}

int run_suite_cmd(const std::string& path, const std::string& out, const std::string& format) {
    const SuiteSummary summary = run_suite_file(path);
    std::string text;
    if (format == "csv") {
        CheckOutcome flat;
        flat.reports = summary.reports;
        text = outcome_to_csv(flat);
    } else {
        text = summary_to_json(summary).dump(2) + "\n";
    }
    emit(text, out);
    if (!out.empty())
        std::cout << "suite: " << summary.passed << "/" << summary.total << " passed\n";
    return summary.pass ? kExitPass : kExitToleranceFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quatcheck: quadrature-based checks of quaternionic integral identities"};
    app.require_subcommand(1);

    Flags flags;
    std::string ran_check;
    for (const std::string& name : registered_checks()) {
        CLI::App* sub = app.add_subcommand(name, "run the " + name + " check");
        add_check_flags(sub, flags);
        sub->callback([&ran_check, name]() { ran_check = name; });
    }

    CLI::App* conv = app.add_subcommand("convergence", "error vs resolution study");
    add_check_flags(conv, flags);
    conv->add_option("--check", flags.convergence_check, "check to study")->required();
    conv->add_option("--resolutions", flags.resolutions, "comma-separated resolutions");

    CLI::App* suite = app.add_subcommand("suite", "run every check in a JSON config file");
    suite->add_option("path", flags.suite_path, "suite config file")->required();
    suite->add_option("--out", flags.out, "output path (default stdout)");
    suite->add_option("--format", flags.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return quatcheck::kExitUsageError;
    }

    try {
        if (suite->parsed())
            return run_suite_cmd(flags.suite_path, flags.out,
                                 flags.format.empty() ? "json" : flags.format);
        if (conv->parsed())
            return run_convergence_cmd(overrides_from_flags(flags.convergence_check, flags));
        return run_one_check(overrides_from_flags(ran_check, flags));
    } catch (const quatcheck::NumericError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return quatcheck::kExitNumericError;
    } catch (const std::domain_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return quatcheck::kExitNumericError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return quatcheck::kExitUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return quatcheck::kExitUsageError;
    }
}
