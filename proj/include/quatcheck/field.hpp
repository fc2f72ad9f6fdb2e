#pragma once

// Quaternion-valued functions on 4-space, optionally carrying closed-form
// partial derivatives in (t,x,y,z), plus smooth compactly supported bump
// test functions.

#include <array>
#include <functional>
#include <string>

#include "quatcheck/quaternion.hpp"

namespace quatcheck {

// Partials are ordered (d/dt, d/dx, d/dy, d/dz).
using PartialSet = std::array<Quaternion, 4>;

struct QuaternionField {
    std::string name;
    std::function<Quaternion(const Quaternion&)> evaluate;
    std::function<PartialSet(const Quaternion&)> partials;  // empty if none

    bool has_partials() const { return static_cast<bool>(partials); }
    Quaternion operator()(const Quaternion& q) const { return evaluate(q); }
};

QuaternionField make_constant(const Quaternion& c);
QuaternionField make_identity();
QuaternionField make_conjugate();
QuaternionField make_power(int n);                       // q^n, n >= 0
QuaternionField make_kernel_section(const Quaternion& p0);
QuaternionField make_coordinate(int axis);               // real-valued f(q) = q_axis

// Mollifier bump supported on the open ball |q-center| < radius:
//   phi(q) = amplitude * exp(-1/(1-s^2)),  s = |q-center|/radius,
// identically zero outside. Amplitude is real for all default weak checks.
struct TestFunction {
    QuaternionField field;
    Quaternion center;
    double radius = 1.0;
    Quaternion amplitude = kOne;
};

TestFunction make_bump(const Quaternion& center, double radius,
                       const Quaternion& amplitude = kOne);

// Field selection grammar used by the CLI and suite configs:
//   const | const:w,x,y,z | identity | conj | power:n | kernel:w,x,y,z |
//   coord:axis | bump:w,x,y,z,radius
// Throws std::invalid_argument on anything else.
QuaternionField parse_field(const std::string& spec);
TestFunction parse_test_function(const std::string& spec);

// Same field with the closed-form partials dropped; forces finite-difference
// paths in the operator layer.
QuaternionField strip_partials(const QuaternionField& f);

}  // namespace quatcheck
