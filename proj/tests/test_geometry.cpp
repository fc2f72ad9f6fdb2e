#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "quatcheck/convergence.hpp"
#include "quatcheck/geometry.hpp"
#include "quatcheck/kernel.hpp"

using namespace quatcheck;

namespace {

constexpr double kPi = std::numbers::pi;
const double kTwoPiSq = 2.0 * kPi * kPi;

QuaternionField field_of(std::function<Quaternion(const Quaternion&)> eval) {
    QuaternionField f;
    f.name = "test";
    f.evaluate = std::move(eval);
    return f;
}

}  // namespace

TEST_CASE("gauss_legendre integrates polynomials of degree 2n-1 exactly") {
    std::vector<double> x, w;
    gauss_legendre(5, 0.0, 1.0, x, w);
    double total = 0.0, x9 = 0.0;
    for (int i = 0; i < 5; ++i) {
        total += w[i];
        x9 += w[i] * std::pow(x[i], 9);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(x9 == doctest::Approx(0.1).epsilon(1e-13));
    // symmetric about the midpoint
    CHECK(x[0] + x[4] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(w[0] == w[4]);
}

TEST_CASE("domain predicates are mutually exclusive") {
    const Domain ball = Domain::ball({0, 0, 0, 0}, 1.0);
    const Domain box = Domain::box({0, 0, 0, 0}, {1, 1, 1, 1});
    const Quaternion inside{0.3, 0.2, 0.1, 0.2};
    const Quaternion on_sphere{1, 0, 0, 0};
    CHECK(ball.contains(inside));
    CHECK_FALSE(ball.on_boundary(inside));
    CHECK(ball.on_boundary(on_sphere));
    CHECK_FALSE(ball.contains(on_sphere));
    CHECK(box.contains({0.5, 0.5, 0.5, 0.5}));
    CHECK(box.on_boundary({0.0, 0.5, 0.5, 0.5}));
    CHECK_FALSE(box.contains({0.0, 0.5, 0.5, 0.5}));
}

TEST_CASE("ball normal is (q - center)/radius and unit") {
    const Domain d = Domain::ball({1, 2, -1, 0}, 2.0);
    const Quaternion q{3, 2, -1, 0};
    const Quaternion n = d.outward_normal(q);
    CHECK(norm(n - Quaternion{1, 0, 0, 0}) < 1e-15);
    CHECK(std::abs(norm(n) - 1.0) < 1e-15);
}

TEST_CASE("box normals point along the nearest face axis") {
    const Domain d = Domain::box({0, 0, 0, 0}, {1, 2, 3, 4});
    CHECK(norm(d.outward_normal({0.0, 1.0, 1.5, 2.0}) - (-kUnitI * 0.0 - kOne)) < 1e-15);
    CHECK(norm(d.outward_normal({1.0, 1.0, 1.5, 2.0}) - kOne) < 1e-15);
    CHECK(norm(d.outward_normal({0.5, 2.0, 1.5, 2.0}) - kUnitI) < 1e-15);
}

TEST_CASE("rule weights are positive and sum to the region measure") {
    SUBCASE("unit 3-sphere: total weight 2 pi^2 within 1e-10 relative") {
        const SphereRule rule = make_sphere_rule(24);
        for (const auto& nd : rule.nodes) CHECK(nd.weight > 0.0);
        CHECK(std::abs(total_weight(rule) - kTwoPiSq) < 1e-10 * kTwoPiSq);
    }
    SUBCASE("ball volume pi^2 R^4 / 2") {
        const Domain d = Domain::ball({0.3, 0, 0, 1}, 1.3);
        const VolumeRule rule = make_volume_rule(d, 16);
        CHECK(std::abs(total_weight(rule) - d.measure()) < 1e-10 * d.measure());
    }
    SUBCASE("ball boundary 2 pi^2 R^3 within 1e-10 relative") {
        const Domain d = Domain::ball({0, 1, 0, 0}, 1.7);
        const BoundaryRule rule = make_boundary_rule(d, 32);
        for (const auto& nd : rule.nodes) CHECK(nd.weight > 0.0);
        CHECK(std::abs(total_weight(rule) - d.boundary_measure()) <
              1e-10 * d.boundary_measure());
    }
    SUBCASE("box rules") {
        const Domain d = Domain::box({0, 0, 0, 0}, {1, 2, 1, 1});
        CHECK(std::abs(total_weight(make_volume_rule(d, 8)) - 2.0) < 1e-12);
        CHECK(std::abs(total_weight(make_boundary_rule(d, 8)) - d.boundary_measure()) < 1e-12);
    }
}

TEST_CASE("volume integral examples") {
    const Domain d = Domain::ball({0, 0, 0, 0}, 1.0);
    const VolumeRule rule = make_volume_rule(d, 24);
    SUBCASE("f = 1 over the unit 4-ball gives pi^2/2") {
        const Quaternion v = volume_integral(d, field_of([](const Quaternion&) { return kOne; }), rule);
        CHECK(norm(v - Quaternion::real(0.5 * kPi * kPi)) < 1e-12);
    }
    SUBCASE("f = 0 gives 0") {
        const Quaternion v =
            volume_integral(d, field_of([](const Quaternion&) { return Quaternion{}; }), rule);
        CHECK(norm(v) == 0.0);
    }
    SUBCASE("odd component integrates to 0 on a centered ball") {
        const Quaternion v = volume_integral(
            d, field_of([](const Quaternion& q) { return Quaternion::real(q.w); }), rule);
        CHECK(norm(v) < 1e-14);
    }
}

TEST_CASE("boundary integral examples") {
    const Domain d = Domain::ball({0, 0, 0, 0}, 1.0);
    const BoundaryRule rule = make_boundary_rule(d, 32);
    SUBCASE("g = 1 gives the 3-sphere area 2 pi^2") {
        const Quaternion v =
            boundary_integral(d, [](const Quaternion&, const Quaternion&) { return kOne; }, rule);
        CHECK(norm(v - Quaternion::real(kTwoPiSq)) < 1e-10);
    }
    SUBCASE("g = n vanishes by symmetry") {
        const Quaternion v = boundary_integral(
            d, [](const Quaternion&, const Quaternion& n) { return n; }, rule);
        CHECK(norm(v) < 1e-13);
    }
    SUBCASE("g = <q,n> gives 2 pi^2 on the unit sphere") {
        const Quaternion v = boundary_integral(
            d,
            [](const Quaternion& q, const Quaternion& n) {
                return Quaternion::real(q.w * n.w + q.x * n.x + q.y * n.y + q.z * n.z);
            },
            rule);
        CHECK(norm(v - Quaternion::real(kTwoPiSq)) < 1e-10);
    }
}

TEST_CASE("eps-sphere integral examples") {
    const SphereRule rule = make_sphere_rule(24);
    const Quaternion center{0.2, -0.1, 0.4, 0.0};
    const auto one = [](const Quaternion&, const Quaternion&) { return kOne; };
    CHECK(norm(eps_sphere_integral(center, 1.0, one, rule) - Quaternion::real(kTwoPiSq)) < 1e-10);
    CHECK(norm(eps_sphere_integral(center, 0.5, one, rule) -
               Quaternion::real(kTwoPiSq * 0.125)) < 1e-10);
    const auto normal = [](const Quaternion&, const Quaternion& n) { return n; };
    CHECK(norm(eps_sphere_integral(center, 0.7, normal, rule)) < 1e-13);
    CHECK_THROWS_AS(eps_sphere_integral(center, -1.0, one, rule), std::invalid_argument);
}

TEST_CASE("singular volume integral: radial reduction oracle") {
    // f = 1/(2 pi^2 |q-p|^3) over Ball4(p,R): spherical coordinates reduce the
    // integral to int_0^R drho = R.
    const SingularRuleSpec spec{16, 12};
    const Quaternion p{0.1, 0.2, 0.0, -0.3};
    for (double R : {0.5, 1.0, 2.0}) {
        const Domain d = Domain::ball(p, R);
        const QuaternionField f = field_of([p](const Quaternion& q) {
            return Quaternion::real(kernel_norm(norm(q - p)));
        });
        const Quaternion v = singular_volume_integral(d, p, f, spec);
        CHECK(norm(v - Quaternion::real(R)) < 1e-12 * R);
        // linearity in a constant factor
        const QuaternionField cf = field_of([p](const Quaternion& q) {
            return Quaternion::real(3.5 * kernel_norm(norm(q - p)));
        });
        CHECK(norm(singular_volume_integral(d, p, cf, spec) - Quaternion::real(3.5 * R)) <
              1e-12 * 3.5 * R);
    }
}

TEST_CASE("singular volume integral: zero field and preconditions") {
    const Domain d = Domain::ball({0, 0, 0, 0}, 1.0);
    const SingularRuleSpec spec{8, 8};
    CHECK(norm(singular_volume_integral(
              d, {0.2, 0, 0, 0}, field_of([](const Quaternion&) { return Quaternion{}; }),
              spec)) == 0.0);
    CHECK_THROWS_AS(singular_volume_integral(
                        d, {2, 0, 0, 0}, field_of([](const Quaternion&) { return kOne; }), spec),
                    std::invalid_argument);
}

TEST_CASE("singular rule covers the domain measure exactly on balls") {
    const Domain d = Domain::ball({1, 0, 2, 0}, 1.2);
    const SingularRuleSpec spec{24, 16};
    const double w = singular_total_weight(d, {1.3, 0.1, 1.8, 0.2}, spec);
    CHECK(std::abs(w - d.measure()) < 1e-10 * d.measure());
}

TEST_CASE("singular rule weight on boxes converges to the measure") {
    // ray exits through box faces give a kinked radial extent; the angular
    // rule resolves it to quadrature accuracy only.
    const Domain d = Domain::box({0, 0, 0, 0}, {1, 1, 1, 1});
    const double w = singular_total_weight(d, {0.4, 0.5, 0.5, 0.6}, SingularRuleSpec{24, 24});
    CHECK(std::abs(w - 1.0) < 2e-3);
}

TEST_CASE("singular rule agrees with the plain rule on smooth integrands") {
    const QuaternionField smooth = field_of([](const Quaternion& q) {
        return Quaternion{std::exp(0.3 * q.w) * std::cos(q.x), q.y * q.z, std::sin(q.w + q.y),
                          0.1 * q.x};
    });
    SUBCASE("centered ball, 1e-6 relative") {
        const Domain d = Domain::ball({0, 0, 0, 0}, 1.0);
        const Quaternion plain = volume_integral(d, smooth, make_volume_rule(d, 24));
        const Quaternion split =
            singular_volume_integral(d, {0, 0, 0, 0}, smooth, SingularRuleSpec{32, 24});
        CHECK(norm(split - plain) < 1e-6 * norm(plain));
    }
    SUBCASE("off-center ball, 1e-6 relative") {
        const Domain d = Domain::ball({0.5, 0, 0, 0}, 1.0);
        const Quaternion plain = volume_integral(d, smooth, make_volume_rule(d, 24));
        const Quaternion split =
            singular_volume_integral(d, {0.8, 0.2, 0, 0}, smooth, SingularRuleSpec{32, 24});
        CHECK(norm(split - plain) < 1e-6 * norm(plain));
    }
    SUBCASE("box, quadrature-limited by the radial kinks") {
        const Domain d = Domain::box({0, 0, 0, 0}, {1, 1, 1, 1});
        const Quaternion plain = volume_integral(d, smooth, make_volume_rule(d, 16));
        const Quaternion split = singular_volume_integral(d, {0.5, 0.5, 0.5, 0.5}, smooth,
                                                          SingularRuleSpec{24, 24});
        CHECK(norm(split - plain) < 2e-3 * norm(plain));
    }
}

TEST_CASE("doubling node counts on smooth integrands converges superlinearly") {
    const Domain d = Domain::ball({0, 0, 0, 0}, 1.0);
    const QuaternionField smooth = field_of([](const Quaternion& q) {
        return Quaternion::real(std::exp(q.w + 0.5 * q.x - 0.2 * q.y));
    });
    const Quaternion reference = volume_integral(d, smooth, make_volume_rule(d, 32));
    std::vector<ConvergenceRow> rows;
    for (int n : {3, 4, 6, 8}) {
        const Quaternion v = volume_integral(d, smooth, make_volume_rule(d, n));
        rows.push_back({static_cast<double>(n), norm(v - reference), 0.0, 0.0});
    }
    const ConvergenceTable table = fit_convergence(rows);
    CHECK_FALSE(table.at_floor);
    CHECK(table.fitted_order >= 2.0);
}

TEST_CASE("non-finite integrand values are reported with the node") {
    const Domain d = Domain::ball({0, 0, 0, 0}, 1.0);
    const QuaternionField blows = field_of([](const Quaternion&) {
        return Quaternion::real(std::numeric_limits<double>::infinity());
    });
    const VolumeRule rule = make_volume_rule(d, 4);
    CHECK_THROWS_AS(volume_integral(d, blows, rule), NumericError);
    try {
        volume_integral(d, blows, rule);
    } catch (const NumericError& e) {
        CHECK(std::string(e.what()).find("node") != std::string::npos);
    }
}

TEST_CASE("domain parsing") {
    const Domain b = parse_domain("ball:0,1,0,0,2.5");
    CHECK(b.is_ball());
    CHECK(b.ball_shape().radius == 2.5);
    const Domain bx = parse_domain("box:0,0,0,0,1,2,3,4");
    CHECK_FALSE(bx.is_ball());
    CHECK_THROWS_AS(parse_domain("cylinder:1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_domain("ball:1,2,3"), std::invalid_argument);
}
