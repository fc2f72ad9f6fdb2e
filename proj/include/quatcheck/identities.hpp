#pragma once

// The integral identities and representation formulas as executable checks:
// quaternionic Gauss and Green formulas, the kernel sphere limit, the
// test-function/kernel identity, the Newton potential and its weak residual,
// the Cauchy representation, weak/semiweak residuals, and the two-term
// representation of Cullen-regular functions.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "quatcheck/field.hpp"
#include "quatcheck/geometry.hpp"
#include "quatcheck/operators.hpp"
#include "quatcheck/report.hpp"

namespace quatcheck {

// Resolution bundle handed to every check; each builds the rules it needs.
struct RuleSet {
    int volume_n = 24;
    int boundary_n = 32;
    int eps_n = 24;
    SingularRuleSpec singular{32, 24};

    RuleSet scaled(double factor) const;
};

struct WeakResidual {
    Quaternion value;
    std::string test_function;
    double estimated_quadrature_error = 0.0;
};

// --- kernel module checks ---------------------------------------------------

std::vector<std::pair<Quaternion, Quaternion>> sample_kernel_pairs(int count, double min_sep,
                                                                   double max_sep,
                                                                   std::uint64_t seed);

// Antisymmetry E(q,p) = -E(p,q) and the norm law |E| = 1/(2 pi^2 |q-p|^3)
// over seeded random pairs with 0.1 <= |q-p| <= 10.
CheckReport kernel_identities_check(int samples, std::uint64_t seed, double tol);

// D_l E = D_r E = 0 by finite differences (closed-form partials are
// deliberately not used here). All pairs must satisfy |q-p| >= 0.25.
CheckReport kernel_regularity_check(const std::vector<std::pair<Quaternion, Quaternion>>& pairs,
                                    const FDConfig& cfg, double tol);

// --- integral identity checks ------------------------------------------------

// Lemma: int_{dOmega} sum f_c n_c dS = int_Omega sum d_c f_c dV.
CheckReport gauss_check(const Domain& d, const std::array<QuaternionField, 4>& f,
                        const RuleSet& rules, const FDConfig& cfg, double tol);

// Lemma: int_Omega (D_r u) v + u (D_l v) dV = int_{dOmega} u n v dS.
CheckReport green_check(const Domain& d, const QuaternionField& u, const QuaternionField& v,
                        const RuleSet& rules, const FDConfig& cfg, double tol);
// Overload for compactly supported u: the volume side integrates on the
// support-adapted spherical rule.
CheckReport green_check(const Domain& d, const TestFunction& u, const QuaternionField& v,
                        const RuleSet& rules, const FDConfig& cfg, double tol);

// lim_{eps->0} int_{|q-p|=eps} E(q,p) n(q) f(q) dS = f(p); one report per eps.
std::vector<CheckReport> sphere_limit_check(const Quaternion& p, const QuaternionField& f,
                                            const std::vector<double>& eps_list,
                                            const RuleSet& rules, double tol);

// int_Omega (D_r phi) E(q,p) dV = -phi(p) for p interior, phi supported
// strictly inside the domain.
CheckReport test_function_kernel_check(const Domain& d, const TestFunction& phi,
                                       const Quaternion& p, const RuleSet& rules, double tol);

// g(p) = -int_Omega E(q,p) h(q) dV, the weak solution of D_l g = h.
Quaternion newton_potential(const Domain& d, const QuaternionField& h, const Quaternion& p,
                            const RuleSet& rules);

// Central finite differences of the computed potential at interior probes
// against h itself.
CheckReport newton_potential_check(const Domain& d, const QuaternionField& h,
                                   const std::vector<Quaternion>& probes, const RuleSet& rules,
                                   double fd_step, double tol);

// f(p) = int_{dOmega} E(q,p) n(q) f(q) dS for F-regular f.
Quaternion cauchy_represent(const Domain& d, const QuaternionField& f, const Quaternion& p,
                            const RuleSet& rules);
CheckReport cauchy_check(const Domain& d, const QuaternionField& f, const Quaternion& p,
                         const RuleSet& rules, double tol);

// int_Omega (D_r phi) f dV; zero for weak F-regular f.
WeakResidual weak_residual(const Domain& d, const QuaternionField& f, const TestFunction& phi,
                           const RuleSet& rules, const FDConfig& cfg);

// Residual against the integration-by-parts route -int phi (D_l f) dV.
CheckReport weak_check(const Domain& d, const QuaternionField& f, const TestFunction& phi,
                       const RuleSet& rules, const FDConfig& cfg, double tol,
                       bool expect_zero = false);

// int_Omega (D_r phi) f + phi h dV; zero when D_l f = h weakly.
WeakResidual inhomogeneous_weak_residual(const Domain& d, const QuaternionField& f,
                                         const QuaternionField& h, const TestFunction& phi,
                                         const RuleSet& rules, const FDConfig& cfg);
CheckReport weak_inhom_check(const Domain& d, const QuaternionField& f, const QuaternionField& h,
                             const TestFunction& phi, const RuleSet& rules, const FDConfig& cfg,
                             double tol);

// int (D_r phi) f dV - int (2 v phi / r) dV with v = (1/2) df/d-iota.
WeakResidual semiweak_cullen_residual(const Domain& d, const QuaternionField& f,
                                      const TestFunction& phi, const RuleSet& rules,
                                      const FDConfig& cfg);
CheckReport semiweak_check(const Domain& d, const QuaternionField& f, const TestFunction& phi,
                           const RuleSet& rules, const FDConfig& cfg, double tol);

// f(p) = int_Omega E(q,p) (2v/r) dV + int_{dOmega} E(q,p) n(q) f(q) dS.
Quaternion cullen_represent(const Domain& d, const QuaternionField& f, const Quaternion& p,
                            const RuleSet& rules, const FDConfig& cfg);
CheckReport cullen_represent_check(const Domain& d, const QuaternionField& f, const Quaternion& p,
                                   const RuleSet& rules, const FDConfig& cfg, double tol);

// max over probes of |D_l f - h|; the pointwise companion of the weak
// residuals (C1 weak solutions are classical solutions).
CheckReport classical_from_weak_probe(const Domain& d, const QuaternionField& f,
                                      const QuaternionField& h,
                                      const std::vector<Quaternion>& probes, const FDConfig& cfg,
                                      double tol);

// Support/axis preconditions shared by the weak checks; throw
// std::invalid_argument on violation.
void require_support_inside(const Domain& d, const TestFunction& phi);
void require_off_axis(const Quaternion& region_center, double region_radius);

}  // namespace quatcheck
