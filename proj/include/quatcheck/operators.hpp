#pragma once

// The differential operators of quaternionic analysis: left/right Fueter
// operators in Cartesian form, the Cullen operator d/dt + iota d/dr on
// slices, the angular operator d/d-iota on the direction sphere, and the
// spherical decomposition D_l = d/dt + iota d/dr - (1/r) d/d-iota.
//
// Closed-form partial derivatives are used whenever the field carries them;
// otherwise central finite differences with Richardson extrapolation.

#include "quatcheck/field.hpp"
#include "quatcheck/quaternion.hpp"

namespace quatcheck {

struct FDConfig {
    double step = 1e-4;        // scaled by max(1,|q|) on Cartesian axes; radians on angles
    int richardson_levels = 2;  // effective order of accuracy = 2 * levels
};

// Points with r <= this are treated as lying on the real axis.
inline constexpr double kCullenRadialTol = 1e-8;
// d/d-iota is rejected when x^2 + y^2 < (threshold * r)^2, i.e. near the
// plane t + z k where iota_alpha degenerates.
inline constexpr double kAxisThreshold = 1e-4;

// d f / d q_axis, axis in 0..3 for (t,x,y,z).
Quaternion partial_derivative(const QuaternionField& f, const Quaternion& q, int axis,
                              const FDConfig& cfg);

// Derivative along an arbitrary unit 4-direction.
Quaternion directional_derivative(const QuaternionField& f, const Quaternion& q,
                                  const Quaternion& dir, const FDConfig& cfg);

// D_l f = df/dt + i df/dx + j df/dy + k df/dz (units multiply from the left).
Quaternion fueter_left(const QuaternionField& f, const Quaternion& q, const FDConfig& cfg);
// D_r f = df/dt + (df/dx) i + (df/dy) j + (df/dz) k.
Quaternion fueter_right(const QuaternionField& f, const Quaternion& q, const FDConfig& cfg);

// (d/dt + iota d/dr); throws std::domain_error on the real axis.
Quaternion cullen(const QuaternionField& f, const Quaternion& q, const FDConfig& cfg);

// (iota_alpha)^-1 df/dalpha + (iota_beta)^-1 df/dbeta, finite differences in
// the direction-sphere angles; throws std::domain_error near the t + z k
// plane or the real axis.
Quaternion d_iota(const QuaternionField& f, const Quaternion& q, const FDConfig& cfg);

// cullen - (1/r) d_iota; agrees with the Cartesian fueter_left off the axis.
Quaternion fueter_left_spherical(const QuaternionField& f, const Quaternion& q,
                                 const FDConfig& cfg);

// v = (1/2) df/d-iota.
Quaternion cullen_v(const QuaternionField& f, const Quaternion& q, const FDConfig& cfg);

}  // namespace quatcheck
