#pragma once

// Quaternion value type q = w + x*i + y*j + z*k with i^2 = j^2 = k^2 = -1,
// ij = k, plus the slice decomposition q = t + r*iota used by the Cullen
// operator machinery.

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace quatcheck {

struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    // Real scalars embed as w + 0i + 0j + 0k.
    static constexpr Quaternion real(double t) { return {t, 0.0, 0.0, 0.0}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }
    constexpr Quaternion& operator/=(double s) {
        w /= s; x /= s; y /= s; z /= s;
        return *this;
    }

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
    friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
    friend constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

    // Hamilton product; noncommutative.
    friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }

    friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }

    constexpr double component(int axis) const {
        switch (axis) {
            case 0: return w;
            case 1: return x;
            case 2: return y;
            default: return z;
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
        return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
    }
};

constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) { return a * b; }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

// q^{-1} = conj(q)/|q|^2.
inline Quaternion inv(const Quaternion& q) {
    const double n2 = norm_sq(q);
    if (n2 == 0.0) throw std::domain_error("inv: zero quaternion has no inverse");
    return conj(q) / n2;
}

inline bool is_finite(const Quaternion& q) {
    return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

// Basis element along axis 0..3, i.e. 1, i, j, k.
constexpr Quaternion unit_axis(int axis) {
    Quaternion e;
    switch (axis) {
        case 0: e.w = 1.0; break;
        case 1: e.x = 1.0; break;
        case 2: e.y = 1.0; break;
        default: e.z = 1.0; break;
    }
    return e;
}

inline constexpr Quaternion kOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kUnitI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kUnitJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kUnitK{0.0, 0.0, 0.0, 1.0};

// Below this imaginary norm a point counts as lying on the real axis and the
// slice direction is taken by convention (iota = k, degenerate flag set).
inline constexpr double kSliceDegenerateTol = 1e-14;

// q = t + r*iota with r = |Im q| >= 0 and iota a pure unit imaginary.
struct SliceCoords {
    double t = 0.0;
    double r = 0.0;
    Quaternion iota = kUnitK;
    bool degenerate = false;
};

inline SliceCoords to_slice(const Quaternion& q) {
    SliceCoords s;
    s.t = q.w;
    s.r = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    if (s.r > kSliceDegenerateTol) {
        s.iota = Quaternion{0.0, q.x / s.r, q.y / s.r, q.z / s.r};
        s.degenerate = false;
    } else {
        s.iota = kUnitK;
        s.degenerate = true;
    }
    return s;
}

constexpr Quaternion recompose(double t, double r, const Quaternion& iota) {
    return {t, r * iota.x, r * iota.y, r * iota.z};
}

constexpr Quaternion recompose(const SliceCoords& s) { return recompose(s.t, s.r, s.iota); }

// Direction sphere coordinates: iota = (cos a sin b) i + (sin a sin b) j + (cos b) k.
struct SphericalAngles {
    double alpha = 0.0;  // [0, 2pi)
    double beta = 0.0;   // [0, pi]
};

inline Quaternion iota_from_angles(const SphericalAngles& a) {
    const double sb = std::sin(a.beta);
    return {0.0, std::cos(a.alpha) * sb, std::sin(a.alpha) * sb, std::cos(a.beta)};
}

inline SphericalAngles angles_from_iota(const Quaternion& iota) {
    SphericalAngles a;
    a.alpha = std::atan2(iota.y, iota.x);
    double cz = iota.z;
    if (cz > 1.0) cz = 1.0;
    if (cz < -1.0) cz = -1.0;
    a.beta = std::acos(cz);
    return a;
}

}  // namespace quatcheck
