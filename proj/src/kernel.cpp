#include "quatcheck/kernel.hpp"

#include <numbers>

namespace quatcheck {

Quaternion eval_kernel(const Quaternion& q, const Quaternion& p) {
    const Quaternion d = q - p;
    const double n2 = norm_sq(d);
    if (n2 == 0.0) throw std::domain_error("eval_kernel: coincident arguments");
    constexpr double two_pi_sq = 2.0 * std::numbers::pi * std::numbers::pi;
    return conj(d) / (two_pi_sq * n2 * n2);
}

double kernel_norm(double separation) {
    constexpr double two_pi_sq = 2.0 * std::numbers::pi * std::numbers::pi;
    return 1.0 / (two_pi_sq * separation * separation * separation);
}

}  // namespace quatcheck
