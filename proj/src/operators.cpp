#include "quatcheck/operators.hpp"

#include <cmath>
#include <vector>

namespace quatcheck {

namespace {

// Central differences at steps h/2^k combined by Richardson extrapolation;
// the table eliminates the h^2, h^4, ... error terms one level at a time.
template <typename Eval>
Quaternion richardson_central(Eval&& value_at, double h, int levels) {
    if (levels < 1) levels = 1;
    std::vector<Quaternion> t(levels);
    for (int k = 0; k < levels; ++k) {
        const double hk = h / static_cast<double>(1 << k);
        t[k] = (value_at(hk) - value_at(-hk)) / (2.0 * hk);
    }
    double pow4 = 1.0;
    for (int m = 1; m < levels; ++m) {
        pow4 *= 4.0;
        for (int k = 0; k + m < levels; ++k)
            t[k] = (pow4 * t[k + 1] - t[k]) / (pow4 - 1.0);
    }
    return t[0];
}

double cartesian_step(const Quaternion& q, const FDConfig& cfg) {
    return cfg.step * std::max(1.0, norm(q));
}

}  // namespace

Quaternion partial_derivative(const QuaternionField& f, const Quaternion& q, int axis,
                              const FDConfig& cfg) {
    if (f.has_partials()) return f.partials(q)[axis];
    const Quaternion e = unit_axis(axis);
    return richardson_central([&](double s) { return f.evaluate(q + s * e); },
                              cartesian_step(q, cfg), cfg.richardson_levels);
}

Quaternion directional_derivative(const QuaternionField& f, const Quaternion& q,
                                  const Quaternion& dir, const FDConfig& cfg) {
    if (f.has_partials()) {
        const PartialSet d = f.partials(q);
        Quaternion out{};
        for (int c = 0; c < 4; ++c) out += d[c] * dir.component(c);
        return out;
    }
    return richardson_central([&](double s) { return f.evaluate(q + s * dir); },
                              cartesian_step(q, cfg), cfg.richardson_levels);
}

Quaternion fueter_left(const QuaternionField& f, const Quaternion& q, const FDConfig& cfg) {
    if (f.has_partials()) {
        const PartialSet d = f.partials(q);
        return d[0] + kUnitI * d[1] + kUnitJ * d[2] + kUnitK * d[3];
    }
    Quaternion out{};
    for (int c = 0; c < 4; ++c) out += unit_axis(c) * partial_derivative(f, q, c, cfg);
    return out;
}

Quaternion fueter_right(const QuaternionField& f, const Quaternion& q, const FDConfig& cfg) {
    if (f.has_partials()) {
        const PartialSet d = f.partials(q);
        return d[0] + d[1] * kUnitI + d[2] * kUnitJ + d[3] * kUnitK;
    }
    Quaternion out{};
    for (int c = 0; c < 4; ++c) out += partial_derivative(f, q, c, cfg) * unit_axis(c);
    return out;
}

Quaternion cullen(const QuaternionField& f, const Quaternion& q, const FDConfig& cfg) {
    const SliceCoords s = to_slice(q);
    if (s.degenerate || s.r <= kCullenRadialTol)
        throw std::domain_error("cullen: point lies on the real axis");
    const Quaternion dt = partial_derivative(f, q, 0, cfg);
    const Quaternion dr = directional_derivative(f, q, s.iota, cfg);
    return dt + s.iota * dr;
}

Quaternion d_iota(const QuaternionField& f, const Quaternion& q, const FDConfig& cfg) {
    const SliceCoords s = to_slice(q);
    if (s.degenerate || s.r <= kCullenRadialTol)
        throw std::domain_error("d_iota: point lies on the real axis");
    const double xy2 = q.x * q.x + q.y * q.y;
    if (xy2 < kAxisThreshold * kAxisThreshold * s.r * s.r)
        throw std::domain_error("d_iota: point too close to the plane t + z k");

    const SphericalAngles a = angles_from_iota(s.iota);
    const double sa = std::sin(a.alpha), ca = std::cos(a.alpha);
    const double sb = std::sin(a.beta), cb = std::cos(a.beta);
    const Quaternion iota_alpha{0.0, -sa * sb, ca * sb, 0.0};
    const Quaternion iota_beta{0.0, ca * cb, sa * cb, -sb};

    // Angle derivatives at fixed (t, r); step in radians, not |q|-scaled.
    const auto eval_alpha = [&](double d) {
        return f.evaluate(recompose(s.t, s.r, iota_from_angles({a.alpha + d, a.beta})));
    };
    const auto eval_beta = [&](double d) {
        return f.evaluate(recompose(s.t, s.r, iota_from_angles({a.alpha, a.beta + d})));
    };
    const Quaternion df_da = richardson_central(eval_alpha, cfg.step, cfg.richardson_levels);
    const Quaternion df_db = richardson_central(eval_beta, cfg.step, cfg.richardson_levels);

    return inv(iota_alpha) * df_da + inv(iota_beta) * df_db;
}

Quaternion fueter_left_spherical(const QuaternionField& f, const Quaternion& q,
                                 const FDConfig& cfg) {
    const SliceCoords s = to_slice(q);
    return cullen(f, q, cfg) - d_iota(f, q, cfg) / s.r;
}

Quaternion cullen_v(const QuaternionField& f, const Quaternion& q, const FDConfig& cfg) {
    return d_iota(f, q, cfg) * 0.5;
}

}  // namespace quatcheck
