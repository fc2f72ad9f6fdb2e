#include "quatcheck/identities.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "quatcheck/kernel.hpp"
#include "quatcheck/sampling.hpp"

namespace quatcheck {

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

QuaternionField wrap(std::string name, std::function<Quaternion(const Quaternion&)> eval) {
    QuaternionField f;
    f.name = std::move(name);
    f.evaluate = std::move(eval);
    return f;
}

std::int64_t count(const VolumeRule& r) { return static_cast<std::int64_t>(r.nodes.size()); }
std::int64_t count(const BoundaryRule& r) { return static_cast<std::int64_t>(r.nodes.size()); }

SingularRuleSpec coarser(const SingularRuleSpec& spec) {
    return {std::max(4, spec.radial_n / 2), std::max(4, spec.angular_n / 2)};
}

std::vector<SphericalInterface> support_edge(const TestFunction& phi) {
    return {{phi.center, phi.radius}};
}

// |int phi dV|, the natural magnitude of every weak residual; integrated on
// the support-adapted rule.
double bump_mass(const Domain& d, const TestFunction& phi, const SingularRuleSpec& spec) {
    return norm(
        anchored_volume_integral(d, phi.center, phi.field, spec, support_edge(phi)).value);
}

double bump_peak(const TestFunction& phi) { return norm(phi.amplitude) * std::exp(-1.0); }

}  // namespace

RuleSet RuleSet::scaled(double factor) const {
    auto scale_int = [factor](int n) {
        return std::max(4, static_cast<int>(std::lround(n * factor)));
    };
    RuleSet out;
    out.volume_n = scale_int(volume_n);
    out.boundary_n = scale_int(boundary_n);
    out.eps_n = scale_int(eps_n);
    out.singular.radial_n = scale_int(singular.radial_n);
    out.singular.angular_n = scale_int(singular.angular_n);
    return out;
}

void require_support_inside(const Domain& d, const TestFunction& phi) {
    bool ok;
    if (d.is_ball()) {
        const auto& b = d.ball_shape();
        ok = norm(phi.center - b.center) + phi.radius < b.radius;
    } else {
        ok = d.contains(phi.center) && d.distance_to_boundary(phi.center) > phi.radius;
    }
    if (!ok)
        throw std::invalid_argument("test function support must lie strictly inside the domain");
}

void require_off_axis(const Quaternion& c, double radius) {
    const double dxy = std::hypot(c.x, c.y) - radius;
    const double imag = std::sqrt(c.x * c.x + c.y * c.y + c.z * c.z);
    const double r_max = imag + radius;
    const double r_min = imag - radius;
    if (!(dxy > kAxisThreshold * r_max) || !(r_min > kCullenRadialTol))
        throw std::invalid_argument(
            "region intersects the axis tube around the plane t + z k; reposition it");
}

std::vector<std::pair<Quaternion, Quaternion>> sample_kernel_pairs(int count, double min_sep,
                                                                   double max_sep,
                                                                   std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<Quaternion, Quaternion>> pairs;
    pairs.reserve(count);
    while (static_cast<int>(pairs.size()) < count) {
        const Quaternion q = rng.quaternion_in_cube(-2.0, 2.0);
        const Quaternion p = rng.quaternion_in_cube(-2.0, 2.0);
        const double sep = norm(q - p);
        if (sep >= min_sep && sep <= max_sep) pairs.emplace_back(q, p);
    }
    return pairs;
}

CheckReport kernel_identities_check(int samples, std::uint64_t seed, double tol) {
    if (samples < 1) throw std::invalid_argument("kernel_identities_check: samples must be >= 1");
    Stopwatch sw;
    const auto pairs = sample_kernel_pairs(samples, 0.1, 10.0, seed);

    CheckReport r;
    r.check_name = "kernel-identities";
    double max_antisym = -1.0, max_norm_law = -1.0, worst = -1.0;
    for (const auto& [q, p] : pairs) {
        const Quaternion eqp = eval_kernel(q, p);
        const Quaternion epq = eval_kernel(p, q);
        const double anti = norm(eqp + epq);
        max_antisym = std::max(max_antisym, anti);
        if (anti > worst) {
            worst = anti;
            r.lhs = eqp;
            r.rhs = -epq;
        }
        const double nlaw = std::abs(norm(eqp) - kernel_norm(norm(q - p)));
        max_norm_law = std::max(max_norm_law, nlaw);
        if (nlaw > worst) {
            worst = nlaw;
            r.lhs = Quaternion::real(norm(eqp));
            r.rhs = Quaternion::real(kernel_norm(norm(q - p)));
        }
    }
    r.parameters["samples"] = samples;
    r.parameters["seed"] = seed;
    r.parameters["max_antisymmetry_err"] = max_antisym;
    r.parameters["max_norm_law_err"] = max_norm_law;
    finalize_report(r, tol, 1.0);
    r.elapsed_seconds = sw.elapsed();
    return r;
}

CheckReport kernel_regularity_check(const std::vector<std::pair<Quaternion, Quaternion>>& pairs,
                                    const FDConfig& cfg, double tol) {
    Stopwatch sw;
    CheckReport r;
    r.check_name = "kernel-regularity";
    double worst = -1.0;
    for (const auto& [q, p] : pairs) {
        if (norm(q - p) < 0.25)
            throw std::invalid_argument("kernel_regularity_check: pair too close to singularity");
        const QuaternionField section = strip_partials(make_kernel_section(p));
        for (const Quaternion& v : {fueter_left(section, q, cfg), fueter_right(section, q, cfg)}) {
            if (norm(v) > worst) {
                worst = norm(v);
                r.lhs = v;
                r.rhs = Quaternion{};
            }
        }
    }
    r.parameters["pairs"] = static_cast<int>(pairs.size());
    r.parameters["fd_step"] = cfg.step;
    r.parameters["richardson_levels"] = cfg.richardson_levels;
    finalize_report(r, tol, 1.0);
    r.elapsed_seconds = sw.elapsed();
    return r;
}

CheckReport gauss_check(const Domain& d, const std::array<QuaternionField, 4>& f,
                        const RuleSet& rules, const FDConfig& cfg, double tol) {
    Stopwatch sw;
    const VolumeRule vol = make_volume_rule(d, rules.volume_n);
    const BoundaryRule bnd = make_boundary_rule(d, rules.boundary_n);

    const SurfaceIntegrand flux = [&](const Quaternion& q, const Quaternion& n) {
        Quaternion s{};
        for (int c = 0; c < 4; ++c) s += f[c].evaluate(q) * n.component(c);
        return s;
    };
    const QuaternionField divergence = wrap("divergence", [&](const Quaternion& q) {
        Quaternion s{};
        for (int c = 0; c < 4; ++c) s += partial_derivative(f[c], q, c, cfg);
        return s;
    });

    CheckReport r;
    r.check_name = "gauss";
    r.lhs = boundary_integral(d, flux, bnd);
    r.rhs = volume_integral(d, divergence, vol);
    r.parameters["domain"] = d.describe();
    r.parameters["components"] = {f[0].name, f[1].name, f[2].name, f[3].name};
    r.node_counts["volume"] = count(vol);
    r.node_counts["boundary"] = count(bnd);
    finalize_report(r, tol, std::max({norm(r.lhs), norm(r.rhs), kRelErrFloor}));
    r.elapsed_seconds = sw.elapsed();
    return r;
}

CheckReport green_check(const Domain& d, const QuaternionField& u, const QuaternionField& v,
                        const RuleSet& rules, const FDConfig& cfg, double tol) {
    Stopwatch sw;
    const VolumeRule vol = make_volume_rule(d, rules.volume_n);
    const BoundaryRule bnd = make_boundary_rule(d, rules.boundary_n);

    const QuaternionField integrand = wrap("green_volume", [&](const Quaternion& q) {
        return fueter_right(u, q, cfg) * v.evaluate(q) + u.evaluate(q) * fueter_left(v, q, cfg);
    });
    const SurfaceIntegrand unv = [&](const Quaternion& q, const Quaternion& n) {
        return u.evaluate(q) * n * v.evaluate(q);
    };

    CheckReport r;
    r.check_name = "green";
    r.lhs = volume_integral(d, integrand, vol);
    r.rhs = boundary_integral(d, unv, bnd);

    // |u|-mass anchors the scale when both sides nearly vanish.
    const QuaternionField u_mag =
        wrap("u_mag", [&](const Quaternion& q) { return Quaternion::real(norm(u.evaluate(q))); });
    const double mass_u = norm(volume_integral(d, u_mag, vol));

    r.parameters["domain"] = d.describe();
    r.parameters["u"] = u.name;
    r.parameters["v"] = v.name;
    r.parameters["mass_u"] = mass_u;
    r.node_counts["volume"] = count(vol);
    r.node_counts["boundary"] = count(bnd);
    finalize_report(r, tol, std::max({norm(r.lhs), norm(r.rhs), mass_u}));
    r.elapsed_seconds = sw.elapsed();
    return r;
}

CheckReport green_check(const Domain& d, const TestFunction& u, const QuaternionField& v,
                        const RuleSet& rules, const FDConfig& cfg, double tol) {
    Stopwatch sw;
    require_support_inside(d, u);
    const BoundaryRule bnd = make_boundary_rule(d, rules.boundary_n);

    const QuaternionField integrand = wrap("green_volume", [&](const Quaternion& q) {
        return fueter_right(u.field, q, cfg) * v.evaluate(q) +
               u.field.evaluate(q) * fueter_left(v, q, cfg);
    });
    const SurfaceIntegrand unv = [&](const Quaternion& q, const Quaternion& n) {
        return u.field.evaluate(q) * n * v.evaluate(q);
    };

    CheckReport r;
    r.check_name = "green";
    const AnchoredIntegral vol =
        anchored_volume_integral(d, u.center, integrand, rules.singular, support_edge(u));
    r.lhs = vol.value;
    r.rhs = boundary_integral(d, unv, bnd);
    const double mass_u = bump_mass(d, u, rules.singular);

    r.parameters["domain"] = d.describe();
    r.parameters["u"] = u.field.name;
    r.parameters["v"] = v.name;
    r.parameters["mass_u"] = mass_u;
    r.node_counts["volume_anchored"] = vol.nodes;
    r.node_counts["boundary"] = count(bnd);
    finalize_report(r, tol, std::max({norm(r.lhs), norm(r.rhs), mass_u}));
    r.elapsed_seconds = sw.elapsed();
    return r;
}

std::vector<CheckReport> sphere_limit_check(const Quaternion& p, const QuaternionField& f,
                                            const std::vector<double>& eps_list,
                                            const RuleSet& rules, double tol) {
    const SphereRule sphere = make_sphere_rule(rules.eps_n);
    const Quaternion fp = f.evaluate(p);

    std::vector<CheckReport> reports;
    reports.reserve(eps_list.size());
    for (double eps : eps_list) {
        Stopwatch sw;
        const SurfaceIntegrand g = [&](const Quaternion& q, const Quaternion& n) {
            return eval_kernel(q, p) * n * f.evaluate(q);
        };
        CheckReport r;
        r.check_name = "sphere-limit";
        r.lhs = eps_sphere_integral(p, eps, g, sphere);
        r.rhs = fp;
        r.parameters["eps"] = eps;
        r.parameters["field"] = f.name;
        r.parameters["point"] = quaternion_to_json(p);
        r.node_counts["eps_sphere"] = static_cast<std::int64_t>(sphere.nodes.size());
        finalize_report(r, tol, std::max(norm(fp), 1.0));
        r.elapsed_seconds = sw.elapsed();
        reports.push_back(std::move(r));
    }
    return reports;
}

CheckReport test_function_kernel_check(const Domain& d, const TestFunction& phi,
                                       const Quaternion& p, const RuleSet& rules, double tol) {
    Stopwatch sw;
    if (!d.contains(p))
        throw std::invalid_argument("test_function_kernel_check: p must be interior");
    require_support_inside(d, phi);

    const FDConfig cfg{};  // bumps carry closed-form partials
    const QuaternionField integrand = wrap("drphi_E", [&](const Quaternion& q) {
        return fueter_right(phi.field, q, cfg) * eval_kernel(q, p);
    });

    CheckReport r;
    r.check_name = "testfn-kernel";
    const AnchoredIntegral lhs =
        anchored_volume_integral(d, p, integrand, rules.singular, support_edge(phi));
    r.lhs = lhs.value;
    r.rhs = -phi.field.evaluate(p);
    r.parameters["domain"] = d.describe();
    r.parameters["point"] = quaternion_to_json(p);
    r.parameters["bump_center"] = quaternion_to_json(phi.center);
    r.parameters["bump_radius"] = phi.radius;
    r.node_counts["singular_volume"] = lhs.nodes;
    finalize_report(r, tol, std::max(norm(r.rhs), bump_peak(phi)));
    r.elapsed_seconds = sw.elapsed();
    return r;
}

Quaternion newton_potential(const Domain& d, const QuaternionField& h, const Quaternion& p,
                            const RuleSet& rules) {
    const QuaternionField integrand =
        wrap("E_h", [&](const Quaternion& q) { return eval_kernel(q, p) * h.evaluate(q); });
    return -singular_volume_integral(d, p, integrand, rules.singular);
}

CheckReport newton_potential_check(const Domain& d, const QuaternionField& h,
                                   const std::vector<Quaternion>& probes, const RuleSet& rules,
                                   double fd_step, double tol) {
    Stopwatch sw;
    if (probes.empty()) throw std::invalid_argument("newton_potential_check: no probes");
    CheckReport r;
    r.check_name = "newton-potential";
    double worst = -1.0;
    for (const Quaternion& probe : probes) {
        if (!d.contains(probe) || d.distance_to_boundary(probe) <= fd_step)
            throw std::invalid_argument(
                "newton_potential_check: probe too close to the boundary for the FD stencil");
        Quaternion dl{};
        for (int c = 0; c < 4; ++c) {
            const Quaternion e = unit_axis(c);
            const Quaternion gp = newton_potential(d, h, probe + fd_step * e, rules);
            const Quaternion gm = newton_potential(d, h, probe - fd_step * e, rules);
            dl += e * ((gp - gm) / (2.0 * fd_step));
        }
        const Quaternion hv = h.evaluate(probe);
        if (norm(dl - hv) > worst) {
            worst = norm(dl - hv);
            r.lhs = dl;
            r.rhs = hv;
        }
    }
    r.parameters["domain"] = d.describe();
    r.parameters["rhs_field"] = h.name;
    r.parameters["probes"] = static_cast<int>(probes.size());
    r.parameters["fd_step"] = fd_step;
    r.node_counts["singular_volume"] =
        static_cast<std::int64_t>(singular_node_count(rules.singular) * 8 * probes.size());
    finalize_report(r, tol, std::max(norm(r.rhs), 1.0));
    r.elapsed_seconds = sw.elapsed();
    return r;
}

Quaternion cauchy_represent(const Domain& d, const QuaternionField& f, const Quaternion& p,
                            const RuleSet& rules) {
    if (!d.contains(p)) throw std::invalid_argument("cauchy_represent: p must be interior");
    const BoundaryRule bnd = make_boundary_rule(d, rules.boundary_n);
    const SurfaceIntegrand g = [&](const Quaternion& q, const Quaternion& n) {
        return eval_kernel(q, p) * n * f.evaluate(q);
    };
    return boundary_integral(d, g, bnd);
}

CheckReport cauchy_check(const Domain& d, const QuaternionField& f, const Quaternion& p,
                         const RuleSet& rules, double tol) {
    Stopwatch sw;
    CheckReport r;
    r.check_name = "cauchy";
    r.lhs = cauchy_represent(d, f, p, rules);
    r.rhs = f.evaluate(p);
    r.parameters["domain"] = d.describe();
    r.parameters["field"] = f.name;
    r.parameters["point"] = quaternion_to_json(p);
    const auto n = static_cast<std::int64_t>(rules.boundary_n);
    r.node_counts["boundary"] = d.is_ball() ? n * n * 2 * n : 8 * n * n * n;
    finalize_report(r, tol, std::max({norm(r.lhs), norm(r.rhs), kRelErrFloor}));
    r.elapsed_seconds = sw.elapsed();
    return r;
}

WeakResidual weak_residual(const Domain& d, const QuaternionField& f, const TestFunction& phi,
                           const RuleSet& rules, const FDConfig& cfg) {
    require_support_inside(d, phi);
    const QuaternionField integrand = wrap("drphi_f", [&](const Quaternion& q) {
        return fueter_right(phi.field, q, cfg) * f.evaluate(q);
    });
    const auto edge = support_edge(phi);

    WeakResidual out;
    out.value = anchored_volume_integral(d, phi.center, integrand, rules.singular, edge).value;
    out.test_function = phi.field.name;
    const Quaternion coarse =
        anchored_volume_integral(d, phi.center, integrand, coarser(rules.singular), edge).value;
    out.estimated_quadrature_error = norm(out.value - coarse);
    return out;
}

CheckReport weak_check(const Domain& d, const QuaternionField& f, const TestFunction& phi,
                       const RuleSet& rules, const FDConfig& cfg, double tol, bool expect_zero) {
    Stopwatch sw;
    const WeakResidual res = weak_residual(d, f, phi, rules, cfg);
    const double mass = bump_mass(d, phi, rules.singular);

    CheckReport r;
    r.check_name = "weak";
    r.lhs = res.value;
    if (!expect_zero) {
        // Independent route via integration by parts: -int phi (D_l f) dV.
        const QuaternionField byparts = wrap("phi_dlf", [&](const Quaternion& q) {
            return phi.field.evaluate(q) * fueter_left(f, q, cfg);
        });
        r.rhs = -anchored_volume_integral(d, phi.center, byparts, rules.singular,
                                          support_edge(phi))
                     .value;
    }
    r.parameters["domain"] = d.describe();
    r.parameters["field"] = f.name;
    r.parameters["bump_center"] = quaternion_to_json(phi.center);
    r.parameters["bump_radius"] = phi.radius;
    r.parameters["bump_mass"] = mass;
    r.parameters["expected"] = expect_zero ? "zero" : "byparts";
    r.parameters["estimated_quadrature_error"] = res.estimated_quadrature_error;
    r.node_counts["volume_anchored"] =
        static_cast<std::int64_t>(singular_node_count(rules.singular));
    finalize_report(r, tol, std::max(mass, norm(r.rhs)));
    r.elapsed_seconds = sw.elapsed();
    return r;
}

WeakResidual inhomogeneous_weak_residual(const Domain& d, const QuaternionField& f,
                                         const QuaternionField& h, const TestFunction& phi,
                                         const RuleSet& rules, const FDConfig& cfg) {
    require_support_inside(d, phi);
    const QuaternionField integrand = wrap("drphi_f_plus_phi_h", [&](const Quaternion& q) {
        return fueter_right(phi.field, q, cfg) * f.evaluate(q) +
               phi.field.evaluate(q) * h.evaluate(q);
    });
    const auto edge = support_edge(phi);

    WeakResidual out;
    out.value = anchored_volume_integral(d, phi.center, integrand, rules.singular, edge).value;
    out.test_function = phi.field.name;
    const Quaternion coarse =
        anchored_volume_integral(d, phi.center, integrand, coarser(rules.singular), edge).value;
    out.estimated_quadrature_error = norm(out.value - coarse);
    return out;
}

CheckReport weak_inhom_check(const Domain& d, const QuaternionField& f, const QuaternionField& h,
                             const TestFunction& phi, const RuleSet& rules, const FDConfig& cfg,
                             double tol) {
    Stopwatch sw;
    const WeakResidual res = inhomogeneous_weak_residual(d, f, h, phi, rules, cfg);

    const double mass = bump_mass(d, phi, rules.singular);
    const QuaternionField phi_h = wrap("phi_h", [&](const Quaternion& q) {
        return phi.field.evaluate(q) * h.evaluate(q);
    });
    const double source_scale =
        norm(anchored_volume_integral(d, phi.center, phi_h, rules.singular, support_edge(phi))
                 .value);

    CheckReport r;
    r.check_name = "weak-inhom";
    r.lhs = res.value;
    r.rhs = Quaternion{};
    r.parameters["domain"] = d.describe();
    r.parameters["field"] = f.name;
    r.parameters["rhs_field"] = h.name;
    r.parameters["bump_center"] = quaternion_to_json(phi.center);
    r.parameters["bump_radius"] = phi.radius;
    r.parameters["bump_mass"] = mass;
    r.parameters["source_scale"] = source_scale;
    r.parameters["estimated_quadrature_error"] = res.estimated_quadrature_error;
    r.node_counts["volume_anchored"] =
        static_cast<std::int64_t>(singular_node_count(rules.singular));
    finalize_report(r, tol, std::max(source_scale, mass));
    r.elapsed_seconds = sw.elapsed();
    return r;
}

namespace {

// 2 v phi / r with v = (1/2) df/d-iota; phi(q) = 0 contributes nothing, so
// the angular derivative is only taken on the support.
QuaternionField semiweak_rhs_integrand(const QuaternionField& f, const TestFunction& phi,
                                       const FDConfig& cfg) {
    return wrap("two_v_phi_over_r", [&f, &phi, cfg](const Quaternion& q) {
        const Quaternion phi_q = phi.field.evaluate(q);
        if (phi_q == Quaternion{}) return Quaternion{};
        const SliceCoords s = to_slice(q);
        return cullen_v(f, q, cfg) * phi_q * (2.0 / s.r);
    });
}

}  // namespace

WeakResidual semiweak_cullen_residual(const Domain& d, const QuaternionField& f,
                                      const TestFunction& phi, const RuleSet& rules,
                                      const FDConfig& cfg) {
    require_support_inside(d, phi);
    require_off_axis(phi.center, phi.radius);

    const QuaternionField lhs_integrand = wrap("drphi_f", [&](const Quaternion& q) {
        return fueter_right(phi.field, q, cfg) * f.evaluate(q);
    });
    const QuaternionField rhs_integrand = semiweak_rhs_integrand(f, phi, cfg);
    const auto edge = support_edge(phi);
    const auto at = [&](const QuaternionField& g, const SingularRuleSpec& spec) {
        return anchored_volume_integral(d, phi.center, g, spec, edge).value;
    };

    WeakResidual out;
    out.value = at(lhs_integrand, rules.singular) - at(rhs_integrand, rules.singular);
    out.test_function = phi.field.name;
    const Quaternion coarse_value =
        at(lhs_integrand, coarser(rules.singular)) - at(rhs_integrand, coarser(rules.singular));
    out.estimated_quadrature_error = norm(out.value - coarse_value);
    return out;
}

CheckReport semiweak_check(const Domain& d, const QuaternionField& f, const TestFunction& phi,
                           const RuleSet& rules, const FDConfig& cfg, double tol) {
    Stopwatch sw;
    require_support_inside(d, phi);
    require_off_axis(phi.center, phi.radius);

    const QuaternionField lhs_integrand = wrap("drphi_f", [&](const Quaternion& q) {
        return fueter_right(phi.field, q, cfg) * f.evaluate(q);
    });
    const QuaternionField rhs_integrand = semiweak_rhs_integrand(f, phi, cfg);
    const auto edge = support_edge(phi);
    const double mass = bump_mass(d, phi, rules.singular);

    CheckReport r;
    r.check_name = "semiweak-cullen";
    r.lhs = anchored_volume_integral(d, phi.center, lhs_integrand, rules.singular, edge).value;
    r.rhs = anchored_volume_integral(d, phi.center, rhs_integrand, rules.singular, edge).value;
    r.parameters["domain"] = d.describe();
    r.parameters["field"] = f.name;
    r.parameters["bump_center"] = quaternion_to_json(phi.center);
    r.parameters["bump_radius"] = phi.radius;
    r.parameters["bump_mass"] = mass;
    r.node_counts["volume_anchored"] =
        static_cast<std::int64_t>(singular_node_count(rules.singular));
    finalize_report(r, tol, std::max({norm(r.lhs), norm(r.rhs), mass}));
    r.elapsed_seconds = sw.elapsed();
    return r;
}

Quaternion cullen_represent(const Domain& d, const QuaternionField& f, const Quaternion& p,
                            const RuleSet& rules, const FDConfig& cfg) {
    if (!d.contains(p)) throw std::invalid_argument("cullen_represent: p must be interior");
    require_off_axis(d.centroid(), 0.5 * d.diameter());

    const QuaternionField volume_part = wrap("E_two_v_over_r", [&](const Quaternion& q) {
        const SliceCoords s = to_slice(q);
        return eval_kernel(q, p) * cullen_v(f, q, cfg) * (2.0 / s.r);
    });
    const Quaternion vol = singular_volume_integral(d, p, volume_part, rules.singular);

    const BoundaryRule bnd = make_boundary_rule(d, rules.boundary_n);
    const SurfaceIntegrand g = [&](const Quaternion& q, const Quaternion& n) {
        return eval_kernel(q, p) * n * f.evaluate(q);
    };
    return vol + boundary_integral(d, g, bnd);
}

CheckReport cullen_represent_check(const Domain& d, const QuaternionField& f, const Quaternion& p,
                                   const RuleSet& rules, const FDConfig& cfg, double tol) {
    Stopwatch sw;
    CheckReport r;
    r.check_name = "cullen-represent";
    r.lhs = cullen_represent(d, f, p, rules, cfg);
    r.rhs = f.evaluate(p);
    r.parameters["domain"] = d.describe();
    r.parameters["field"] = f.name;
    r.parameters["point"] = quaternion_to_json(p);
    r.node_counts["singular_volume"] =
        static_cast<std::int64_t>(singular_node_count(rules.singular));
    const auto n = static_cast<std::int64_t>(rules.boundary_n);
    r.node_counts["boundary"] = d.is_ball() ? n * n * 2 * n : 8 * n * n * n;
    finalize_report(r, tol, std::max({norm(r.lhs), norm(r.rhs), kRelErrFloor}));
    r.elapsed_seconds = sw.elapsed();
    return r;
}

CheckReport classical_from_weak_probe(const Domain& d, const QuaternionField& f,
                                      const QuaternionField& h,
                                      const std::vector<Quaternion>& probes, const FDConfig& cfg,
                                      double tol) {
    Stopwatch sw;
    if (probes.empty()) throw std::invalid_argument("classical_from_weak_probe: no probes");
    CheckReport r;
    r.check_name = "classical-probe";
    double worst = -1.0;
    for (const Quaternion& probe : probes) {
        if (!d.contains(probe))
            throw std::invalid_argument("classical_from_weak_probe: probe must be interior");
        const Quaternion dl = fueter_left(f, probe, cfg);
        const Quaternion hv = h.evaluate(probe);
        if (norm(dl - hv) > worst) {
            worst = norm(dl - hv);
            r.lhs = dl;
            r.rhs = hv;
        }
    }
    r.parameters["domain"] = d.describe();
    r.parameters["field"] = f.name;
    r.parameters["rhs_field"] = h.name;
    r.parameters["probes"] = static_cast<int>(probes.size());
    finalize_report(r, tol, std::max(norm(r.rhs), 1.0));
    r.elapsed_seconds = sw.elapsed();
    return r;
}

}  // namespace quatcheck
