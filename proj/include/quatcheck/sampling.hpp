#pragma once

// Seeded deterministic sampling helpers shared by checks and tests.

#include <cstdint>
#include <random>
#include <vector>

#include "quatcheck/geometry.hpp"
#include "quatcheck/quaternion.hpp"

namespace quatcheck {

struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform(double a, double b) {
        std::uniform_real_distribution<double> dist(a, b);
        return dist(gen);
    }

    Quaternion quaternion_in_cube(double lo, double hi) {
        const double w = uniform(lo, hi), x = uniform(lo, hi);
        const double y = uniform(lo, hi), z = uniform(lo, hi);
        return {w, x, y, z};
    }
};

// Interior points of d with at least `margin` clearance from the boundary.
inline std::vector<Quaternion> sample_interior_points(const Domain& d, int count, double margin,
                                                      std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Quaternion> pts;
    pts.reserve(count);
    const Quaternion c = d.centroid();
    const double half = 0.5 * d.diameter();
    while (static_cast<int>(pts.size()) < count) {
        const Quaternion cand = c + rng.quaternion_in_cube(-half, half);
        if (d.contains(cand) && d.distance_to_boundary(cand) > margin) pts.push_back(cand);
    }
    return pts;
}

// Points q = t + r*iota(alpha,beta) kept clear of the real axis and of the
// plane t + z k: r in [0.3, 1.5], beta in [0.3, pi - 0.3].
inline std::vector<Quaternion> sample_off_axis_points(int count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Quaternion> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double t = rng.uniform(-1.0, 1.0);
        const double r = rng.uniform(0.3, 1.5);
        const double alpha = rng.uniform(0.0, 6.283185307179586);
        const double beta = rng.uniform(0.3, 3.141592653589793 - 0.3);
        pts.push_back(recompose(t, r, iota_from_angles({alpha, beta})));
    }
    return pts;
}

}  // namespace quatcheck
