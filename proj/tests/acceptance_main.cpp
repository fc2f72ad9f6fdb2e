// Acceptance suite: every criterion of the verification plan, run end to end
// at the shipped default resolutions with pinned tolerances. One PASS/FAIL
// line per criterion; exit status 0 only if all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <vector>

#include "quatcheck/convergence.hpp"
#include "quatcheck/identities.hpp"
#include "quatcheck/kernel.hpp"
#include "quatcheck/sampling.hpp"
#include "quatcheck/suite.hpp"

using namespace quatcheck;

namespace {

constexpr double kPi = std::numbers::pi;
const double kTwoPiSq = 2.0 * kPi * kPi;
const FDConfig kFD{};
constexpr std::uint64_t kSeed = 20240817;

int g_failures = 0;

struct Criterion {
    int id;
    std::string label;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream detail;

    Criterion(int id_, std::string label_) : id(id_), label(std::move(label_)) {}

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "  [x] " << what << "\n";
        }
    }
    void require_lt(double value, double bound, const std::string& what) {
        std::ostringstream os;
        os << what << " (" << value << " < " << bound << ")";
        require(value < bound, os.str());
    }

    void finish(double runtime_cap_seconds) {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (elapsed >= runtime_cap_seconds) {
            ok = false;
            detail << "  [x] runtime " << elapsed << " s exceeds cap " << runtime_cap_seconds
                   << " s\n";
        }
        std::printf("[%s] criterion %2d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", id, label.c_str(),
                    elapsed);
        if (!ok) {
            std::fputs(detail.str().c_str(), stdout);
            ++g_failures;
        }
    }
};

QuaternionField field_of(std::string name, std::function<Quaternion(const Quaternion&)> eval) {
    QuaternionField f;
    f.name = std::move(name);
    f.evaluate = std::move(eval);
    return f;
}

// Independent 1D route to int phi dV for a radial bump (Simpson rule on the
// radial profile).
double bump_mass_oracle(double amplitude, double radius) {
    const int n = 4000;
    const double h = 1.0 / n;
    auto g = [](double u) {
        const double s2 = u * u;
        return s2 < 1.0 ? u * u * u * std::exp(-1.0 / (1.0 - s2)) : 0.0;
    };
    double total = g(0.0) + g(1.0);
    for (int i = 1; i < n; ++i) total += (i % 2 ? 4.0 : 2.0) * g(i * h);
    total *= h / 3.0;
    return amplitude * kTwoPiSq * radius * radius * radius * radius * total;
}

void strip_elapsed(nlohmann::json& j) {
    if (j.is_object()) {
        j.erase("elapsed_seconds");
        for (auto& [key, value] : j.items()) strip_elapsed(value);
    } else if (j.is_array()) {
        for (auto& value : j) strip_elapsed(value);
    }
}

// 1. Kernel algebra: antisymmetry and the norm law over 10^4 seeded pairs.
void criterion_1() {
    Criterion c(1, "kernel algebra: antisymmetry and norm law at 1e-12 over 10^4 pairs");
    const CheckReport r = kernel_identities_check(10000, kSeed, 1e-12);
    c.require(r.pass, "kernel-identities check failed");
    c.require_lt(r.parameters.at("max_antisymmetry_err").get<double>(), 1e-12, "antisymmetry");
    c.require_lt(r.parameters.at("max_norm_law_err").get<double>(), 1e-12, "norm law");
    c.finish(1.0);
}

// 2. Kernel regularity: FD residuals of D_l E and D_r E below 1e-7.
void criterion_2() {
    Criterion c(2, "kernel regularity: D_l E = D_r E = 0 by Richardson FD at 100 pairs");
    const auto pairs = sample_kernel_pairs(100, 0.5, 2.0, kSeed);
    const CheckReport r = kernel_regularity_check(pairs, kFD, 1e-7);
    c.require(r.pass, "kernel-regularity check failed");
    c.require_lt(r.abs_err, 1e-7, "max operator residual");
    c.finish(5.0);
}

// 3. Gauss formula on the unit ball and on the unit box.
void criterion_3() {
    Criterion c(3, "Gauss: (t,x,y,z) ball case = 2 pi^2; three box polynomial cases at 1e-6");
    const RuleSet rules;  // defaults

    const Domain ball = Domain::ball({0, 0, 0, 0}, 1.0);
    const std::array<QuaternionField, 4> coords = {make_coordinate(0), make_coordinate(1),
                                                   make_coordinate(2), make_coordinate(3)};
    const CheckReport r = gauss_check(ball, coords, rules, kFD, 1e-6);
    c.require(r.pass, "ball case failed side-to-side");
    c.require_lt(norm(r.lhs - Quaternion::real(kTwoPiSq)) / kTwoPiSq, 1e-6, "lhs vs 2 pi^2");
    c.require_lt(norm(r.rhs - Quaternion::real(kTwoPiSq)) / kTwoPiSq, 1e-6, "rhs vs 2 pi^2");

    const Domain box = Domain::box({0, 0, 0, 0}, {1, 1, 1, 1});
    const std::array<std::array<QuaternionField, 4>, 3> cases = {{
        {field_of("t*x", [](const Quaternion& q) { return Quaternion::real(q.w * q.x); }),
         field_of("x*y", [](const Quaternion& q) { return Quaternion::real(q.x * q.y); }),
         field_of("z^2", [](const Quaternion& q) { return Quaternion::real(q.z * q.z); }),
         field_of("t+y", [](const Quaternion& q) { return Quaternion::real(q.w + q.y); })},
        {field_of("x^2 i", [](const Quaternion& q) { return Quaternion{0, q.x * q.x, 0, 0}; }),
         field_of("t*y j", [](const Quaternion& q) { return Quaternion{0, 0, q.w * q.y, 0}; }),
         field_of("x+z", [](const Quaternion& q) { return Quaternion::real(q.x + q.z); }),
         field_of("t*z k", [](const Quaternion& q) { return Quaternion{0, 0, 0, q.w * q.z}; })},
        {make_power(2), make_identity(), make_conjugate(),
         field_of("y^2", [](const Quaternion& q) { return Quaternion::real(q.y * q.y); })},
    }};
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const CheckReport rb = gauss_check(box, cases[i], rules, kFD, 1e-6);
        c.require(rb.pass, "box case " + std::to_string(i) + " exceeded 1e-6 relative");
    }
    c.finish(30.0);
}

// 4. Green formula with u = bump, v = kernel section (singularity 1 unit out).
void criterion_4() {
    Criterion c(4, "Green: bump against exterior kernel section at 1e-4 scale");
    const Domain d = Domain::ball({0, 0, 0, 0}, 1.0);
    const TestFunction u = make_bump({0, 0, 0, 0}, 0.8);
    const QuaternionField v = make_kernel_section({2, 0, 0, 0});
    const CheckReport r = green_check(d, u, v, RuleSet{}, kFD, 1e-4);
    c.require(r.pass, "green check failed");
    c.finish(60.0);
}

// 5. Sphere limit: exact reproduction for constants and f(q)=q; measurable
// first-or-better-order shrinkage on the curved control f(q)=q^2.
void criterion_5() {
    Criterion c(5, "sphere limit: constants/identity exact; q^2 slope in [0.7,2.5]");
    const Quaternion p{0.3, 0.2, -0.1, 0.4};
    const std::vector<double> eps = {0.2, 0.1, 0.05};
    const RuleSet rules;

    for (const auto& r : sphere_limit_check(p, make_constant({1, -0.5, 2, 0}), eps, rules, 1e-10))
        c.require_lt(r.abs_err, 1e-10, "constant-field deviation");
    // f(q) = q: the sphere average of q is exactly p (parity), so the
    // deviation sits at the rounding floor at every eps.
    for (const auto& r : sphere_limit_check(p, make_identity(), eps, rules, 1e-10))
        c.require_lt(r.abs_err, 1e-10, "identity-field deviation");

    const auto rq2 = sphere_limit_check(p, make_power(2), eps, rules, 0.05);
    c.require(rq2[0].abs_err > rq2[1].abs_err && rq2[1].abs_err > rq2[2].abs_err,
              "q^2 deviations not monotone decreasing");
    std::vector<ConvergenceRow> rows;
    for (std::size_t i = 0; i < eps.size(); ++i)
        rows.push_back({1.0 / eps[i], rq2[i].abs_err, rq2[i].rel_err, 0.0});
    const ConvergenceTable t = fit_convergence(rows);
    c.require(!t.at_floor && t.fitted_order >= 0.7 && t.fitted_order <= 2.5,
              "q^2 log-log slope outside [0.7, 2.5]");
    c.finish(10.0);
}

// 6. Test-function/kernel identity.
void criterion_6() {
    Criterion c(6, "test-function identity: 1e-3 relative, zero case below 1e-3 x peak");
    const Domain d = Domain::ball({0, 0, 0, 0}, 1.0);
    const RuleSet rules;

    const TestFunction centered = make_bump({0, 0, 0, 0}, 0.8, {2, 0, 0, 0});
    const CheckReport r1 = test_function_kernel_check(d, centered, {0, 0, 0, 0}, rules, 1e-3);
    c.require(r1.pass, "bump centered at p failed");
    c.require_lt(r1.rel_err, 1e-3, "relative error, centered case");

    const TestFunction narrow = make_bump({0, 0, 0, 0}, 0.5);
    const CheckReport r2 = test_function_kernel_check(d, narrow, {0.2, 0, 0, 0}, rules, 1e-3);
    c.require(r2.pass, "off-center p inside the support failed");
    c.require_lt(r2.rel_err, 1e-3, "relative error, off-center case");

    const TestFunction small = make_bump({0, 0, 0, 0}, 0.45);
    const CheckReport r3 = test_function_kernel_check(d, small, {0.7, 0, 0, 0}, rules, 1e-3);
    c.require_lt(norm(r3.lhs), 1e-3 * std::exp(-1.0), "p outside the support");
    c.finish(90.0);
}

// 7. Newton potential: FD of the potential matches h = -2; weak residual.
void criterion_7() {
    Criterion c(7, "Newton potential: FD D_l g = -2 at 10 probes (1e-2); weak residual 1e-3");
    const Domain d = Domain::ball({0, 0, 0, 0}, 1.0);
    const QuaternionField h = make_constant({-2, 0, 0, 0});
    const RuleSet rules;

    const auto probes = sample_interior_points(d, 10, 0.3, kSeed);
    const CheckReport r = newton_potential_check(d, h, probes, rules, 0.05, 1e-2);
    c.require(r.pass, "FD of the potential missed h = -2 at 1e-2 relative");

    RuleSet inner;
    inner.singular = {6, 6};
    const QuaternionField g_field = field_of("newton_potential", [&](const Quaternion& q) {
        return newton_potential(d, h, q, inner);
    });
    RuleSet outer;
    outer.singular = {12, 10};
    const TestFunction phi = make_bump({0, 0, 0, 0}, 0.7);
    const WeakResidual res = inhomogeneous_weak_residual(d, g_field, h, phi, outer, kFD);
    const double expected_scale = 2.0 * bump_mass_oracle(1.0, 0.7);
    c.require_lt(norm(res.value), 1e-3 * expected_scale,
                 "inhomogeneous weak residual of (g, h)");
    c.finish(180.0);
}

// 8. Cauchy representation with convergence and a negative control.
void criterion_8() {
    Criterion c(8, "Cauchy: const 1e-6, kernel 1e-4, f=q margin > 10x, order >= 2");
    const Domain d = Domain::ball({0, 0, 0, 0}, 1.0);
    const Quaternion p{0.45, 0.1, 0.2, -0.1};
    const RuleSet rules;

    const CheckReport r1 = cauchy_check(d, make_constant(kOne), p, rules, 1e-6);
    c.require(r1.pass && r1.rel_err < 1e-6, "constant reconstruction above 1e-6 relative");

    const QuaternionField section = make_kernel_section({2.2, 0.5, 0, 0});
    const CheckReport r2 = cauchy_check(d, section, p, rules, 1e-4);
    c.require(r2.pass && r2.rel_err < 1e-4, "kernel-section reconstruction above 1e-4 relative");

    const Quaternion rec = cauchy_represent(d, make_identity(), p, rules);
    const double mis = norm(rec - p);
    c.require(mis > 10.0 * std::max(r1.abs_err, r2.abs_err),
              "non-regular field does not mis-reconstruct by > 10x quadrature error");

    for (const QuaternionField& f : {make_constant(kOne), section}) {
        std::vector<ConvergenceRow> rows;
        for (int n : {16, 32, 64}) {
            RuleSet scaled;
            scaled.boundary_n = n;
            const Quaternion v = cauchy_represent(d, f, p, scaled);
            rows.push_back({static_cast<double>(n), norm(v - f.evaluate(p)), 0.0, 0.0});
        }
        const ConvergenceTable t = fit_convergence(rows);
        c.require(t.at_floor || t.fitted_order >= 2.0,
                  "convergence order under boundary doubling below 2 for " + f.name);
    }
    c.finish(60.0);
}

// 9. Spherical decomposition of D_l against the Cartesian form.
void criterion_9() {
    Criterion c(9, "spherical decomposition of D_l: 1e-6 at 100 off-axis points");
    const std::vector<QuaternionField> family = {make_identity(), make_conjugate(), make_power(2),
                                                 make_power(3),
                                                 make_kernel_section({4, 4, 4, 0})};
    const auto points = sample_off_axis_points(100, kSeed);
    double worst = 0.0;
    for (const auto& f : family)
        for (const auto& q : points)
            worst = std::max(worst,
                             norm(fueter_left(f, q, kFD) - fueter_left_spherical(f, q, kFD)));
    c.require_lt(worst, 1e-6, "max |Cartesian - decomposed|");
    c.finish(10.0);
}

// 10. Cullen suite: operator annihilation, semiweak identity, representation.
void criterion_10() {
    Criterion c(10, "Cullen: q^n annihilation 1e-8; semiweak 1e-3; representation 1e-3");
    const auto points = sample_off_axis_points(50, kSeed + 1);
    double worst = 0.0;
    for (int n = 0; n <= 5; ++n) {
        const QuaternionField f = make_power(n);
        for (const auto& q : points) worst = std::max(worst, norm(cullen(f, q, kFD)));
    }
    c.require_lt(worst, 1e-8, "cullen(q^n) residual");

    const Quaternion sc{0, 2, 2, 0};
    const Domain sd = Domain::ball(sc, 1.0);
    const TestFunction sphi = make_bump(sc, 0.6);
    const CheckReport sw1 = semiweak_check(sd, make_identity(), sphi, RuleSet{}, kFD, 1e-3);
    c.require(sw1.pass, "semiweak residual for f(q) = q above 1e-3 x scale");
    const CheckReport sw2 = semiweak_check(sd, make_power(2), sphi, RuleSet{}, kFD, 1e-3);
    c.require(sw2.pass, "semiweak residual for f(q) = q^2 above 1e-3 x scale");

    const Quaternion cc{2, 2, 2, 0};
    const Domain cd = Domain::ball(cc, 0.8);
    const CheckReport cr1 = cullen_represent_check(cd, make_identity(), cc, RuleSet{}, kFD, 1e-3);
    c.require(cr1.pass && cr1.rel_err < 1e-3, "representation of p above 1e-3 relative");
    const Quaternion p2 = cc + Quaternion{0.2, 0.1, -0.1, 0};
    const CheckReport cr2 = cullen_represent_check(cd, make_power(2), p2, RuleSet{}, kFD, 1e-3);
    c.require(cr2.pass && cr2.rel_err < 1e-3, "representation of p^2 above 1e-3 relative");
    c.finish(180.0);
}

// 11. Negative controls.
void criterion_11() {
    Criterion c(11, "negative controls: weak residual = 2 int phi; classical probe = 2");
    const Domain d = Domain::ball({0, 0, 0, 0}, 1.0);
    const TestFunction phi = make_bump({0, 0, 0, 0}, 0.8);
    const WeakResidual res = weak_residual(d, make_identity(), phi, RuleSet{}, kFD);
    const double expected = 2.0 * bump_mass_oracle(1.0, 0.8);
    c.require_lt(norm(res.value - Quaternion::real(expected)) / expected, 1e-3,
                 "weak residual vs 2 int phi (independent quadrature)");

    const auto probes = sample_interior_points(d, 10, 0.05, kSeed + 2);
    const CheckReport r =
        classical_from_weak_probe(d, make_identity(), make_constant({}), probes, kFD, 1e-7);
    c.require(!r.pass, "classical probe unexpectedly passed for f(q) = q, h = 0");
    c.require_lt(std::abs(r.abs_err - 2.0), 1e-6, "classical probe residual vs 2");
    c.finish(60.0);
}

// 12. Determinism: identical seeds give byte-identical reports modulo timing.
void criterion_12() {
    Criterion c(12, "determinism: repeated suite runs byte-identical modulo timing");
    const std::string path = "/tmp/quatcheck_acceptance_suite.json";
    {
        std::ofstream os(path);
        os << R"({"checks": [
            {"check": "kernel-identities", "samples": 2000, "seed": 42},
            {"check": "kernel-regularity", "samples": 20, "seed": 42},
            {"check": "cauchy", "resolution": 12},
            {"check": "sphere-limit", "resolution": 12},
            {"check": "weak", "resolution": 12}
        ]})";
    }
    nlohmann::json a = summary_to_json(run_suite_file(path));
    nlohmann::json b = summary_to_json(run_suite_file(path));
    strip_elapsed(a);
    strip_elapsed(b);
    c.require(a.dump() == b.dump(), "summaries differ beyond timing fields");
    c.require(a["pass"].get<bool>(), "determinism suite checks did not pass");
    std::remove(path.c_str());
    c.finish(120.0);
}

}  // namespace

int main() {
    std::printf("acceptance suite: quaternionic integral identity checks\n");
    const auto t0 = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s: %d of 12 criteria passed (%.1f s total)\n",
                g_failures == 0 ? "SUCCESS" : "FAILURE", 12 - g_failures, total);
    return g_failures == 0 ? 0 : 1;
}
