#include "quatcheck/field.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "quatcheck/kernel.hpp"

namespace quatcheck {

namespace {

PartialSet zero_partials() { return {Quaternion{}, Quaternion{}, Quaternion{}, Quaternion{}}; }

std::vector<double> parse_reals(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        double v = std::stod(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad number in field spec: " + item);
        out.push_back(v);
    }
    return out;
}

Quaternion parse_quaternion_csv(const std::string& s) {
    auto v = parse_reals(s);
    if (v.size() != 4) throw std::invalid_argument("expected w,x,y,z: " + s);
    return {v[0], v[1], v[2], v[3]};
}

}  // namespace

QuaternionField make_constant(const Quaternion& c) {
    QuaternionField f;
    f.name = (c == kOne) ? "const" : "const:custom";
    f.evaluate = [c](const Quaternion&) { return c; };
    f.partials = [](const Quaternion&) { return zero_partials(); };
    return f;
}

QuaternionField make_identity() {
    QuaternionField f;
    f.name = "identity";
    f.evaluate = [](const Quaternion& q) { return q; };
    f.partials = [](const Quaternion&) {
        return PartialSet{kOne, kUnitI, kUnitJ, kUnitK};
    };
    return f;
}

QuaternionField make_conjugate() {
    QuaternionField f;
    f.name = "conj";
    f.evaluate = [](const Quaternion& q) { return conj(q); };
    f.partials = [](const Quaternion&) {
        return PartialSet{kOne, -kUnitI, -kUnitJ, -kUnitK};
    };
    return f;
}

QuaternionField make_power(int n) {
    if (n < 0) throw std::invalid_argument("make_power: exponent must be >= 0");
    QuaternionField f;
    f.name = "power:" + std::to_string(n);
    f.evaluate = [n](const Quaternion& q) {
        Quaternion acc = kOne;
        for (int m = 0; m < n; ++m) acc = acc * q;
        return acc;
    };
    // Product rule along the repeated multiplication: d(p*q) = dp*q + p*e_c.
    f.partials = [n](const Quaternion& q) {
        Quaternion p = kOne;
        PartialSet d = zero_partials();
        for (int m = 0; m < n; ++m) {
            for (int c = 0; c < 4; ++c) d[c] = d[c] * q + p * unit_axis(c);
            p = p * q;
        }
        return d;
    };
    return f;
}

QuaternionField make_kernel_section(const Quaternion& p0) {
    QuaternionField f;
    f.name = "kernel";
    f.evaluate = [p0](const Quaternion& q) { return eval_kernel(q, p0); };
    // d_c E = (1/2pi^2) rho^-4 [conj(e_c) - 4 x_c conj(x)/rho^2],  x = q - p0.
    f.partials = [p0](const Quaternion& q) {
        const Quaternion x = q - p0;
        const double rho2 = norm_sq(x);
        if (rho2 == 0.0) throw std::domain_error("kernel section: evaluation at the singularity");
        constexpr double two_pi_sq = 2.0 * std::numbers::pi * std::numbers::pi;
        const double inv_rho4 = 1.0 / (rho2 * rho2);
        const Quaternion cx = conj(x);
        PartialSet d;
        for (int c = 0; c < 4; ++c) {
            d[c] = (conj(unit_axis(c)) - (4.0 * x.component(c) / rho2) * cx) *
                   (inv_rho4 / two_pi_sq);
        }
        return d;
    };
    return f;
}

QuaternionField make_coordinate(int axis) {
    if (axis < 0 || axis > 3) throw std::invalid_argument("make_coordinate: axis out of range");
    QuaternionField f;
    f.name = "coord:" + std::to_string(axis);
    f.evaluate = [axis](const Quaternion& q) { return Quaternion::real(q.component(axis)); };
    f.partials = [axis](const Quaternion&) {
        PartialSet d = zero_partials();
        d[axis] = kOne;
        return d;
    };
    return f;
}

TestFunction make_bump(const Quaternion& center, double radius, const Quaternion& amplitude) {
    if (!(radius > 0.0)) throw std::invalid_argument("make_bump: radius must be positive");
    TestFunction tf;
    tf.center = center;
    tf.radius = radius;
    tf.amplitude = amplitude;
    const double r2 = radius * radius;

    QuaternionField f;
    f.name = "bump";
    f.evaluate = [center, amplitude, r2](const Quaternion& q) {
        const double s2 = norm_sq(q - center) / r2;
        if (s2 >= 1.0) return Quaternion{};
        return amplitude * std::exp(-1.0 / (1.0 - s2));
    };
    // d_c phi = phi * (-2 x_c / radius^2) / (1-s^2)^2.
    f.partials = [center, amplitude, r2](const Quaternion& q) {
        const Quaternion x = q - center;
        const double s2 = norm_sq(x) / r2;
        PartialSet d = zero_partials();
        if (s2 >= 1.0) return d;
        const double u = 1.0 - s2;
        const double g = std::exp(-1.0 / u);
        const double factor = -2.0 * g / (r2 * u * u);
        for (int c = 0; c < 4; ++c) d[c] = amplitude * (factor * x.component(c));
        return d;
    };
    tf.field = std::move(f);
    return tf;
}

QuaternionField parse_field(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string args = (colon == std::string::npos) ? "" : spec.substr(colon + 1);

    if (head == "const") {
        if (args.empty()) return make_constant(kOne);
        return make_constant(parse_quaternion_csv(args));
    }
    if (head == "identity") return make_identity();
    if (head == "conj") return make_conjugate();
    if (head == "power") {
        if (args.empty()) throw std::invalid_argument("power:n requires an exponent");
        return make_power(std::stoi(args));
    }
    if (head == "kernel") {
        if (args.empty()) throw std::invalid_argument("kernel:w,x,y,z requires a singularity");
        return make_kernel_section(parse_quaternion_csv(args));
    }
    if (head == "coord") {
        if (args.empty()) throw std::invalid_argument("coord:axis requires an axis 0..3");
        return make_coordinate(std::stoi(args));
    }
    if (head == "bump") return parse_test_function(spec).field;
    throw std::invalid_argument("unknown field spec: " + spec);
}

TestFunction parse_test_function(const std::string& spec) {
    const auto colon = spec.find(':');
    if (spec.substr(0, colon) != "bump" || colon == std::string::npos)
        throw std::invalid_argument("expected bump:w,x,y,z,radius, got: " + spec);
    auto v = parse_reals(spec.substr(colon + 1));
    if (v.size() != 5) throw std::invalid_argument("bump spec needs center w,x,y,z and radius");
    return make_bump({v[0], v[1], v[2], v[3]}, v[4]);
}

QuaternionField strip_partials(const QuaternionField& f) {
    QuaternionField g = f;
    g.partials = nullptr;
    return g;
}

}  // namespace quatcheck
