#pragma once

// Bounded 4D domains (4-ball, 4-box) with boundary parametrizations and
// outward unit normals, plus the quadrature rules used by every identity
// check: volume rules, boundary hypersurface rules, eps-sphere rules and
// singularity-centered volume rules.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "quatcheck/field.hpp"
#include "quatcheck/quaternion.hpp"

namespace quatcheck {

// Raised when an integrand produces a non-finite value at a node, or any
// other evaluation-time numerical failure.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Ball4 {
    Quaternion center;
    double radius = 1.0;
};

struct Box4 {
    Quaternion min_corner;
    Quaternion max_corner;
};

class Domain {
  public:
    static Domain ball(const Quaternion& center, double radius);
    static Domain box(const Quaternion& min_corner, const Quaternion& max_corner);

    bool is_ball() const { return std::holds_alternative<Ball4>(shape_); }
    const Ball4& ball_shape() const { return std::get<Ball4>(shape_); }
    const Box4& box_shape() const { return std::get<Box4>(shape_); }

    bool contains(const Quaternion& p) const;                       // strict interior
    bool on_boundary(const Quaternion& p, double tol = 1e-12) const;
    Quaternion outward_normal(const Quaternion& boundary_point) const;
    double distance_to_boundary(const Quaternion& interior_point) const;
    double diameter() const;
    double measure() const;
    double boundary_measure() const;
    Quaternion centroid() const;

    // Exit distance of the ray interior_point + rho * direction, direction unit.
    double ray_exit(const Quaternion& interior_point, const Quaternion& direction) const;

    std::string describe() const;

  private:
    std::variant<Ball4, Box4> shape_;
};

Domain parse_domain(const std::string& spec);  // ball:w,x,y,z,R | box:8 reals

struct WeightedNode {
    Quaternion point;
    double weight = 0.0;
};

struct SurfaceNode {
    Quaternion point;
    Quaternion normal;  // unit, outward
    double weight = 0.0;
};

struct VolumeRule {
    std::vector<WeightedNode> nodes;
};

struct BoundaryRule {
    std::vector<SurfaceNode> nodes;
};

// Product rule on the unit 3-sphere; points double as outward normals.
struct SphereRule {
    std::vector<SurfaceNode> nodes;
};

// Resolution parameters of the singularity-centered rule; nodes depend on
// the singular point and are generated per call.
struct SingularRuleSpec {
    int radial_n = 32;
    int angular_n = 24;
};

// Gauss-Legendre nodes/weights on [a,b], symmetrized about the midpoint.
void gauss_legendre(int n, double a, double b, std::vector<double>& x, std::vector<double>& w);

VolumeRule make_volume_rule(const Domain& d, int n);      // ball n,n,n,2n; box n^4
BoundaryRule make_boundary_rule(const Domain& d, int n);  // ball n,n,2n; box 8 faces n^3
SphereRule make_sphere_rule(int n);                       // n,n,2n

std::size_t singular_node_count(const SingularRuleSpec& spec);

using SurfaceIntegrand = std::function<Quaternion(const Quaternion& point, const Quaternion& normal)>;

Quaternion volume_integral(const Domain& d, const QuaternionField& f, const VolumeRule& rule);
Quaternion boundary_integral(const Domain& d, const SurfaceIntegrand& g, const BoundaryRule& rule);

// Integral over the sphere |q - center| = eps with normals OUTWARD from
// center; callers flip the sign when the sphere bounds a cavity.
Quaternion eps_sphere_integral(const Quaternion& center, double eps, const SurfaceIntegrand& g,
                               const SphereRule& rule);

// A sphere across which an integrand is only piecewise smooth (e.g. the
// support boundary of a bump); radial panels split at every ray crossing.
struct SphericalInterface {
    Quaternion center;
    double radius = 0.0;
};

struct AnchoredIntegral {
    Quaternion value;
    std::int64_t nodes = 0;
};

// Volume integral in 4D spherical coordinates centered at an interior anchor,
// radial extent following the exact ray exit through the domain boundary.
// Radial panels split at rho0 = min(0.5 dist(anchor, dOmega), 0.25 diam) and
// at every interface crossing. The rho^3 volume element cancels kernel-type
// |q-anchor|^-3 growth, so the anchor may be a singularity of f.
AnchoredIntegral anchored_volume_integral(const Domain& d, const Quaternion& anchor,
                                          const QuaternionField& f, const SingularRuleSpec& spec,
                                          const std::vector<SphericalInterface>& interfaces = {});

// Volume integral tolerating an integrand that blows up like |q-p|^-3 at the
// interior point p; anchored_volume_integral with no extra interfaces.
Quaternion singular_volume_integral(const Domain& d, const Quaternion& p, const QuaternionField& f,
                                    const SingularRuleSpec& spec);

// Sum of quadrature weights (compensated); used by the rule invariants.
double total_weight(const VolumeRule& rule);
double total_weight(const BoundaryRule& rule);
double total_weight(const SphereRule& rule);
double singular_total_weight(const Domain& d, const Quaternion& p, const SingularRuleSpec& spec);

}  // namespace quatcheck
