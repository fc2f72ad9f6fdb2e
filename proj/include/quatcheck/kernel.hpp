#pragma once

// Cauchy-Fueter fundamental solution E(q,p) = (1/2pi^2) (q-p)^{-1} / |q-p|^2.

#include "quatcheck/quaternion.hpp"

namespace quatcheck {

// Evaluated as conj(q-p)/(2pi^2 |q-p|^4): one fewer division and identical
// mathematically. Throws std::domain_error for coincident arguments.
Quaternion eval_kernel(const Quaternion& q, const Quaternion& p);

// |E(q,p)| as a function of the separation d = |q-p|.
double kernel_norm(double separation);

}  // namespace quatcheck
