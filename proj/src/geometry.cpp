#include "quatcheck/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace quatcheck {

namespace {

constexpr double kPi = std::numbers::pi;

// Neumaier-compensated quaternion accumulator; summation order is fixed by
// the caller's loop, so results are deterministic for a fixed rule.
struct QuatAccumulator {
    Quaternion sum{};
    Quaternion comp{};

    static void add_one(double& s, double& c, double v) {
        const double t = s + v;
        if (std::abs(s) >= std::abs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }

    void add(const Quaternion& v) {
        add_one(sum.w, comp.w, v.w);
        add_one(sum.x, comp.x, v.x);
        add_one(sum.y, comp.y, v.y);
        add_one(sum.z, comp.z, v.z);
    }

    Quaternion total() const { return sum + comp; }
};

struct ScalarAccumulator {
    double sum = 0.0, comp = 0.0;
    void add(double v) { QuatAccumulator::add_one(sum, comp, v); }
    double total() const { return sum + comp; }
};

[[noreturn]] void throw_nonfinite(const Quaternion& node) {
    std::ostringstream os;
    os << "non-finite integrand value at node " << node;
    throw NumericError(os.str());
}

void check_finite(const Quaternion& value, const Quaternion& node) {
    if (!is_finite(value)) throw_nonfinite(node);
}

}  // namespace

Domain Domain::ball(const Quaternion& center, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("Ball4 radius must be positive");
    Domain d;
    d.shape_ = Ball4{center, radius};
    return d;
}

Domain Domain::box(const Quaternion& lo, const Quaternion& hi) {
    for (int c = 0; c < 4; ++c) {
        if (!(lo.component(c) < hi.component(c)))
            throw std::invalid_argument("Box4 requires min_corner < max_corner componentwise");
    }
    Domain d;
    d.shape_ = Box4{lo, hi};
    return d;
}

bool Domain::contains(const Quaternion& p) const {
    if (is_ball()) {
        const auto& b = ball_shape();
        return norm(p - b.center) < b.radius;
    }
    const auto& bx = box_shape();
    for (int c = 0; c < 4; ++c) {
        if (!(bx.min_corner.component(c) < p.component(c) &&
              p.component(c) < bx.max_corner.component(c)))
            return false;
    }
    return true;
}

bool Domain::on_boundary(const Quaternion& p, double tol) const {
    if (is_ball()) {
        const auto& b = ball_shape();
        return std::abs(norm(p - b.center) - b.radius) <= tol;
    }
    const auto& bx = box_shape();
    double nearest_face = std::numeric_limits<double>::infinity();
    for (int c = 0; c < 4; ++c) {
        const double v = p.component(c);
        const double lo = bx.min_corner.component(c);
        const double hi = bx.max_corner.component(c);
        if (v < lo - tol || v > hi + tol) return false;
        nearest_face = std::min({nearest_face, std::abs(v - lo), std::abs(v - hi)});
    }
    return nearest_face <= tol;
}

Quaternion Domain::outward_normal(const Quaternion& q) const {
    if (is_ball()) {
        const auto& b = ball_shape();
        const Quaternion d = q - b.center;
        const double n = norm(d);
        if (n == 0.0) throw std::invalid_argument("outward_normal: point at ball center");
        return d / n;
    }
    const auto& bx = box_shape();
    int best_axis = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    double best_sign = 1.0;
    for (int c = 0; c < 4; ++c) {
        const double v = q.component(c);
        const double dlo = std::abs(v - bx.min_corner.component(c));
        const double dhi = std::abs(v - bx.max_corner.component(c));
        if (dlo < best_dist) { best_dist = dlo; best_axis = c; best_sign = -1.0; }
        if (dhi < best_dist) { best_dist = dhi; best_axis = c; best_sign = 1.0; }
    }
    return best_sign * unit_axis(best_axis);
}

double Domain::distance_to_boundary(const Quaternion& p) const {
    if (is_ball()) {
        const auto& b = ball_shape();
        return b.radius - norm(p - b.center);
    }
    const auto& bx = box_shape();
    double dist = std::numeric_limits<double>::infinity();
    for (int c = 0; c < 4; ++c) {
        dist = std::min({dist, p.component(c) - bx.min_corner.component(c),
                         bx.max_corner.component(c) - p.component(c)});
    }
    return dist;
}

double Domain::diameter() const {
    if (is_ball()) return 2.0 * ball_shape().radius;
    return norm(box_shape().max_corner - box_shape().min_corner);
}

double Domain::measure() const {
    if (is_ball()) {
        const double R = ball_shape().radius;
        return 0.5 * kPi * kPi * R * R * R * R;  // |B^4_R| = pi^2 R^4 / 2
    }
    const auto& bx = box_shape();
    double m = 1.0;
    for (int c = 0; c < 4; ++c) m *= bx.max_corner.component(c) - bx.min_corner.component(c);
    return m;
}

double Domain::boundary_measure() const {
    if (is_ball()) {
        const double R = ball_shape().radius;
        return 2.0 * kPi * kPi * R * R * R;  // |S^3_R| = 2 pi^2 R^3
    }
    const auto& bx = box_shape();
    double ext[4];
    for (int c = 0; c < 4; ++c) ext[c] = bx.max_corner.component(c) - bx.min_corner.component(c);
    double area = 0.0;
    for (int c = 0; c < 4; ++c) {
        double face = 1.0;
        for (int o = 0; o < 4; ++o)
            if (o != c) face *= ext[o];
        area += 2.0 * face;
    }
    return area;
}

Quaternion Domain::centroid() const {
    if (is_ball()) return ball_shape().center;
    return (box_shape().min_corner + box_shape().max_corner) * 0.5;
}

double Domain::ray_exit(const Quaternion& p, const Quaternion& dir) const {
    if (is_ball()) {
        const auto& b = ball_shape();
        const Quaternion d = p - b.center;
        const double bb = d.w * dir.w + d.x * dir.x + d.y * dir.y + d.z * dir.z;
        const double disc = bb * bb + b.radius * b.radius - norm_sq(d);
        return -bb + std::sqrt(std::max(disc, 0.0));
    }
    const auto& bx = box_shape();
    double t = std::numeric_limits<double>::infinity();
    for (int c = 0; c < 4; ++c) {
        const double v = dir.component(c);
        if (v > 0.0)
            t = std::min(t, (bx.max_corner.component(c) - p.component(c)) / v);
        else if (v < 0.0)
            t = std::min(t, (bx.min_corner.component(c) - p.component(c)) / v);
    }
    return t;
}

std::string Domain::describe() const {
    std::ostringstream os;
    if (is_ball()) {
        const auto& b = ball_shape();
        os << "ball:" << b.center.w << "," << b.center.x << "," << b.center.y << ","
           << b.center.z << "," << b.radius;
    } else {
        const auto& bx = box_shape();
        os << "box:" << bx.min_corner.w << "," << bx.min_corner.x << "," << bx.min_corner.y
           << "," << bx.min_corner.z << "," << bx.max_corner.w << "," << bx.max_corner.x << ","
           << bx.max_corner.y << "," << bx.max_corner.z;
    }
    return os.str();
}

Domain parse_domain(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    std::vector<double> v;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) v.push_back(std::stod(item));
    }
    if (head == "ball" && v.size() == 5)
        return Domain::ball({v[0], v[1], v[2], v[3]}, v[4]);
    if (head == "box" && v.size() == 8)
        return Domain::box({v[0], v[1], v[2], v[3]}, {v[4], v[5], v[6], v[7]});
    throw std::invalid_argument("bad domain spec (ball:w,x,y,z,R or box:8 reals): " + spec);
}

void gauss_legendre(int n, double a, double b, std::vector<double>& x, std::vector<double>& w) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration on P_n from the Chebyshev-like initial guess.
        double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            const double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[i] = -t;
        x[n - 1 - i] = t;
        const double wi = 2.0 / ((1.0 - t * t) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    if (n % 2 == 1) x[n / 2] = 0.0;  // enforce exact symmetry
    // Affine map [-1,1] -> [a,b].
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (int i = 0; i < n; ++i) {
        x[i] = mid + half * x[i];
        w[i] *= half;
    }
}

SphereRule make_sphere_rule(int n) {
    if (n < 2) throw std::invalid_argument("make_sphere_rule: n must be >= 2");
    // sigma(psi,theta,phi) = (cos psi, sin psi cos th, sin psi sin th cos ph,
    // sin psi sin th sin ph); dmu = sin^2 psi sin th dpsi dth dph. Total 2 pi^2.
    std::vector<double> psi, wpsi, th, wth;
    gauss_legendre(n, 0.0, kPi, psi, wpsi);
    gauss_legendre(n, 0.0, kPi, th, wth);
    const int nphi = 2 * n;
    const double wphi = 2.0 * kPi / nphi;

    SphereRule rule;
    rule.nodes.reserve(static_cast<std::size_t>(n) * n * nphi);
    for (int a = 0; a < n; ++a) {
        const double sp = std::sin(psi[a]), cp = std::cos(psi[a]);
        for (int b = 0; b < n; ++b) {
            const double st = std::sin(th[b]), ct = std::cos(th[b]);
            const double wab = wpsi[a] * sp * sp * wth[b] * st * wphi;
            for (int c = 0; c < nphi; ++c) {
                const double ph = 2.0 * kPi * c / nphi;
                const Quaternion sigma{cp, sp * ct, sp * st * std::cos(ph),
                                       sp * st * std::sin(ph)};
                rule.nodes.push_back({sigma, sigma, wab});
            }
        }
    }
    return rule;
}

VolumeRule make_volume_rule(const Domain& d, int n) {
    if (n < 2) throw std::invalid_argument("make_volume_rule: n must be >= 2");
    VolumeRule rule;
    if (d.is_ball()) {
        const auto& b = d.ball_shape();
        const SphereRule sphere = make_sphere_rule(n);
        std::vector<double> rho, wrho;
        gauss_legendre(n, 0.0, b.radius, rho, wrho);
        rule.nodes.reserve(sphere.nodes.size() * n);
        for (int i = 0; i < n; ++i) {
            const double r3w = wrho[i] * rho[i] * rho[i] * rho[i];
            for (const auto& s : sphere.nodes)
                rule.nodes.push_back({b.center + rho[i] * s.point, r3w * s.weight});
        }
        return rule;
    }
    const auto& bx = d.box_shape();
    std::vector<double> xs[4], ws[4];
    for (int c = 0; c < 4; ++c)
        gauss_legendre(n, bx.min_corner.component(c), bx.max_corner.component(c), xs[c], ws[c]);
    rule.nodes.reserve(static_cast<std::size_t>(n) * n * n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int e = 0; e < n; ++e)
                    rule.nodes.push_back({Quaternion{xs[0][a], xs[1][b], xs[2][c], xs[3][e]},
                                          ws[0][a] * ws[1][b] * ws[2][c] * ws[3][e]});
    return rule;
}

BoundaryRule make_boundary_rule(const Domain& d, int n) {
    if (n < 2) throw std::invalid_argument("make_boundary_rule: n must be >= 2");
    BoundaryRule rule;
    if (d.is_ball()) {
        const auto& b = d.ball_shape();
        const SphereRule sphere = make_sphere_rule(n);
        const double r3 = b.radius * b.radius * b.radius;
        rule.nodes.reserve(sphere.nodes.size());
        for (const auto& s : sphere.nodes)
            rule.nodes.push_back({b.center + b.radius * s.point, s.point, r3 * s.weight});
        return rule;
    }
    // Box: 8 faces, each a 3D product Gauss-Legendre rule.
    const auto& bx = d.box_shape();
    rule.nodes.reserve(8u * n * n * n);
    for (int axis = 0; axis < 4; ++axis) {
        int other[3], idx = 0;
        for (int c = 0; c < 4; ++c)
            if (c != axis) other[idx++] = c;
        std::vector<double> xs[3], ws[3];
        for (int o = 0; o < 3; ++o)
            gauss_legendre(n, bx.min_corner.component(other[o]),
                           bx.max_corner.component(other[o]), xs[o], ws[o]);
        for (int side = 0; side < 2; ++side) {
            const double fixed = side ? bx.max_corner.component(axis)
                                      : bx.min_corner.component(axis);
            const Quaternion normal = (side ? 1.0 : -1.0) * unit_axis(axis);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c) {
                        double coords[4];
                        coords[axis] = fixed;
                        coords[other[0]] = xs[0][a];
                        coords[other[1]] = xs[1][b];
                        coords[other[2]] = xs[2][c];
                        rule.nodes.push_back(
                            {Quaternion{coords[0], coords[1], coords[2], coords[3]}, normal,
                             ws[0][a] * ws[1][b] * ws[2][c]});
                    }
        }
    }
    return rule;
}

std::size_t singular_node_count(const SingularRuleSpec& spec) {
    const std::size_t sphere = static_cast<std::size_t>(spec.angular_n) * spec.angular_n *
                               (2 * spec.angular_n);
    return 2u * static_cast<std::size_t>(spec.radial_n) * sphere;
}

Quaternion volume_integral(const Domain&, const QuaternionField& f, const VolumeRule& rule) {
    QuatAccumulator acc;
    for (const auto& nd : rule.nodes) {
        const Quaternion v = f.evaluate(nd.point);
        check_finite(v, nd.point);
        acc.add(v * nd.weight);
    }
    return acc.total();
}

Quaternion boundary_integral(const Domain&, const SurfaceIntegrand& g, const BoundaryRule& rule) {
    QuatAccumulator acc;
    for (const auto& nd : rule.nodes) {
        const Quaternion v = g(nd.point, nd.normal);
        check_finite(v, nd.point);
        acc.add(v * nd.weight);
    }
    return acc.total();
}

Quaternion eps_sphere_integral(const Quaternion& center, double eps, const SurfaceIntegrand& g,
                               const SphereRule& rule) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps_sphere_integral: eps must be positive");
    const double e3 = eps * eps * eps;
    QuatAccumulator acc;
    for (const auto& nd : rule.nodes) {
        const Quaternion q = center + eps * nd.point;
        const Quaternion v = g(q, nd.normal);
        check_finite(v, q);
        acc.add(v * (e3 * nd.weight));
    }
    return acc.total();
}

namespace {

// Positive crossings of the ray anchor + rho * dir with the sphere, appended
// to the panel boundary list.
void append_sphere_crossings(const Quaternion& anchor, const Quaternion& dir,
                             const SphericalInterface& iface, double exit,
                             std::vector<double>& bounds) {
    const Quaternion d = anchor - iface.center;
    const double b = d.w * dir.w + d.x * dir.x + d.y * dir.y + d.z * dir.z;
    const double disc = b * b + iface.radius * iface.radius - norm_sq(d);
    if (disc <= 0.0) return;
    const double root = std::sqrt(disc);
    for (double t : {-b - root, -b + root})
        if (t > 0.0 && t < exit) bounds.push_back(t);
}

// Shared radial/angular traversal of the anchored spherical rule. Calls
// visit(point, weight) with the full 4D weight (radial x rho^3 x surface).
template <typename Visit>
void for_each_anchored_node(const Domain& d, const Quaternion& p, const SingularRuleSpec& spec,
                            const std::vector<SphericalInterface>& interfaces, Visit&& visit) {
    if (!d.contains(p))
        throw std::invalid_argument("anchored rule: anchor point must be interior");
    const double rho_ins = d.distance_to_boundary(p);
    const double rho0 = std::min(0.5 * rho_ins, 0.25 * d.diameter());

    const SphereRule sphere = make_sphere_rule(spec.angular_n);
    std::vector<double> xr, wr;
    gauss_legendre(spec.radial_n, 0.0, 1.0, xr, wr);

    std::vector<double> bounds;
    for (const auto& s : sphere.nodes) {
        const double exit = d.ray_exit(p, s.point);
        bounds.clear();
        bounds.push_back(0.0);
        bounds.push_back(rho0);
        bounds.push_back(exit);
        for (const auto& iface : interfaces)
            append_sphere_crossings(p, s.point, iface, exit, bounds);
        std::sort(bounds.begin(), bounds.end());
        for (std::size_t panel = 0; panel + 1 < bounds.size(); ++panel) {
            const double lo = bounds[panel], hi = bounds[panel + 1];
            const double len = hi - lo;
            if (!(len > 0.0)) continue;  // GL nodes never hit rho = 0
            for (int i = 0; i < spec.radial_n; ++i) {
                const double rho = lo + len * xr[i];
                const double w = len * wr[i] * rho * rho * rho * s.weight;
                visit(p + rho * s.point, w);
            }
        }
    }
}

}  // namespace

AnchoredIntegral anchored_volume_integral(const Domain& d, const Quaternion& anchor,
                                          const QuaternionField& f, const SingularRuleSpec& spec,
                                          const std::vector<SphericalInterface>& interfaces) {
    QuatAccumulator acc;
    std::int64_t nodes = 0;
    for_each_anchored_node(d, anchor, spec, interfaces, [&](const Quaternion& q, double w) {
        const Quaternion v = f.evaluate(q);
        check_finite(v, q);
        acc.add(v * w);
        ++nodes;
    });
    return {acc.total(), nodes};
}

Quaternion singular_volume_integral(const Domain& d, const Quaternion& p,
                                    const QuaternionField& f, const SingularRuleSpec& spec) {
    return anchored_volume_integral(d, p, f, spec, {}).value;
}

double total_weight(const VolumeRule& rule) {
    ScalarAccumulator acc;
    for (const auto& nd : rule.nodes) acc.add(nd.weight);
    return acc.total();
}

double total_weight(const BoundaryRule& rule) {
    ScalarAccumulator acc;
    for (const auto& nd : rule.nodes) acc.add(nd.weight);
    return acc.total();
}

double total_weight(const SphereRule& rule) {
    ScalarAccumulator acc;
    for (const auto& nd : rule.nodes) acc.add(nd.weight);
    return acc.total();
}

double singular_total_weight(const Domain& d, const Quaternion& p, const SingularRuleSpec& spec) {
    ScalarAccumulator acc;
    for_each_anchored_node(d, p, spec, {}, [&](const Quaternion&, double w) { acc.add(w); });
    return acc.total();
}

}  // namespace quatcheck
