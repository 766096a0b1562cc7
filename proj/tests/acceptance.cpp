// Acceptance suite: one PASS/FAIL line per criterion, with the measured numbers.

#include <polydec/applications.hpp>
#include <polydec/catalog.hpp>
#include <polydec/harness.hpp>
#include <polydec/meshgen.hpp>
#include <polydec/selftest.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

using namespace polydec;

namespace {

const std::filesystem::path config_dir = POLYDEC_CONFIG_DIR;

int failures = 0;

void verdict(int id, bool pass, const std::string& title, const std::string& detail)
{
    std::printf("%s %d %s: %s\n", pass ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

void note(const std::string& line)
{
    std::printf("    %s\n", line.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double slope_or_nan(const std::optional<SlopeFit>& fit)
{
    return fit ? fit->slope : std::nan("");
}

ExperimentReport run(const std::string& name)
{
    const auto report = run_convergence(load_config(config_dir / (name + ".cfg")));
    for (const auto& level : report.levels) {
        if (!level.ok) note(name + " level " + std::to_string(level.level) + " failed: " + level.error);
    }
    return report;
}

void identities()
{
    const auto checks = exact_identity_checks(7, 20);
    const auto find = [&](const std::string& name) {
        return *std::find_if(checks.begin(), checks.end(), [&](const IdentityCheck& c) { return c.name == name; });
    };
    for (const auto& c : checks) note(fmt("%-28s error %.2e (tol %.0e)", c.name.c_str(), c.error, c.tolerance));

    bool ok = true;
    std::string worst;
    double worst_error = 0.0;
    for (const auto* name : {"d1 d0 = 0", "wedge skew-commutativity", "Leibniz 0^0", "Leibniz 0^1", "L_X 1 = 0",
                             "HHD reconstruction"}) {
        const auto c = find(name);
        ok = ok && c.pass;
        if (c.error >= worst_error) {
            worst_error = c.error;
            worst = name;
        }
    }
    verdict(1, ok, "exact identities on 20 random meshes", fmt("worst %.2e (%s), tol 1e-12", worst_error, worst.c_str()));

    const auto mu = find("planar *mu = 1"), one = find("planar *1 = mu");
    verdict(2, mu.pass && one.pass, "planar Hodge exactness",
            fmt("*mu = 1 error %.2e, *1 = mu error %.2e, tol 1e-12", mu.error, one.error));

    const auto lin = find("linear precision of Delta_0");
    verdict(3, lin.pass, "linear precision of Delta_0", fmt("error %.2e, tol 1e-10", lin.error));
}

void convergence_slopes()
{
    bool ok = true;
    double worst = 1e300;
    std::string worst_name;
    for (const auto* surface : {"plane", "torus", "sphere"}) {
        for (const auto* op : {"wedge01", "wedge02", "wedge11", "star0", "star1", "star2", "inner0", "inner1", "inner2"}) {
            const std::string name = std::string(surface) + "_" + op;
            const auto r = run(name);
            const double l2 = slope_or_nan(r.l2_vs_h), linf = slope_or_nan(r.linf_vs_h);
            note(fmt("%-16s slope vs h: L2 %.3f  Linf %.3f", name.c_str(), l2, linf));
            const double m = std::min(l2, linf);
            if (!(m >= 0.8)) ok = false;
            if (!(m >= worst)) {
                worst = m;
                worst_name = name;
            }
        }
    }
    verdict(4, ok, "wedge, star and inner product slopes vs h", fmt("minimum %.3f (%s), need >= 0.8", worst, worst_name.c_str()));
}

void contraction_slopes()
{
    bool ok = true;
    std::string detail;
    for (const auto* surface : {"torus", "sphere"}) {
        const auto two = run(std::string(surface) + "_contract2");
        const auto one = run(std::string(surface) + "_contract1");
        const double t2 = slope_or_nan(two.l2_vs_h), i2 = slope_or_nan(two.linf_vs_h);
        const double t1 = slope_or_nan(one.l2_vs_h), i1 = slope_or_nan(one.linf_vs_h);
        note(fmt("%s contract2 slope vs h: L2 %.3f  Linf %.3f", surface, t2, i2));
        note(fmt("%s contract1 slope vs h: L2 %.3f  Linf %.3f", surface, t1, i1));
        const bool pass = t2 >= 0.8 && i2 >= 0.8 && t1 >= 0.8 && std::abs(i1 - 0.5) <= 0.25;
        ok = ok && pass;
        detail += fmt("%s 1-form Linf %.3f; ", surface, i1);
    }
    verdict(5, ok, "contraction slopes", detail + "need 2-form >= 0.8, 1-form L2 >= 0.8, 1-form Linf in [0.25, 0.75]");
}

void lie_regimes()
{
    const auto regular = run("sphere_lie1_regular");
    const auto jittered = run("sphere_lie1_jitter");
    const double s_reg = slope_or_nan(regular.l2_vs_vertices), s_jit = slope_or_nan(jittered.l2_vs_vertices);
    note(fmt("regular: L2 slope vs |V| %.3f (vs h %.3f)", s_reg, slope_or_nan(regular.l2_vs_h)));
    note(fmt("jittered: L2 slope vs |V| %.3f (vs h %.3f)", s_jit, slope_or_nan(jittered.l2_vs_h)));
    verdict(6, s_reg >= -0.7 && s_reg <= -0.3 && std::abs(s_jit) < 0.15, "Lie derivative regime split",
            fmt("regular %.3f (need -0.5 +- 0.2), jittered %.3f (need |s| < 0.15)", s_reg, s_jit));
}

void codifferential_comparison()
{
    const auto config = load_config(config_dir / "plane_codiff1_compare.cfg");
    const auto cmp = compare_schemes(config, config.scheme, *config.compare);
    const double s1 = slope_or_nan(cmp.first.l2_vs_vertices), s2 = slope_or_nan(cmp.second.l2_vs_vertices);
    for (const auto* r : {&cmp.first, &cmp.second}) {
        for (const auto& level : r->levels) {
            note(fmt("%-4s nV %6d  L2 %.4e  Linf %.4e", to_string(r->config.scheme).c_str(), level.num_vertices, level.l2, level.linf));
        }
    }
    // the same plateaus under the quadratic-form reading of the L2 error
    const auto squared_plateau = [](const ExperimentReport& r) {
        double s = 0.0;
        for (std::size_t i = r.levels.size() - 3; i < r.levels.size(); ++i) s += r.levels[i].l2 * r.levels[i].l2;
        return s / 3.0;
    };
    note(fmt("quadratic-form plateaus: ours %.4e, aw %.4e, ratio %.3f", squared_plateau(cmp.first),
             squared_plateau(cmp.second), squared_plateau(cmp.second) / squared_plateau(cmp.first)));
    const bool plateau = std::abs(s1) < 0.15 && std::abs(s2) < 0.15;
    verdict(7, plateau && cmp.ratio >= 3.0, "codifferential comparison",
            fmt("plateaus ours %.4e, aw %.4e, ratio %.3f (need >= 3); slopes vs |V| %.3f, %.3f (need |s| < 0.15)",
                cmp.plateau_first, cmp.plateau_second, cmp.ratio, s1, s2));
}

// Continuous stream function of the decomposed torus field: the two Gaussian bumps plus the
// potential of the non-harmonic part of (-y, x, 0), a function of the tube angle alone.
double hhd_potential(const Vec3& p)
{
    constexpr double major = 1.0, minor = 0.5;
    const double c = major * std::sqrt(major * major - minor * minor);
    const auto [c1, c2] = hhd_rotation_centers();
    const double rho = std::hypot(p.x(), p.y());
    const double theta = std::atan2(p.z(), rho - major);
    const int n = 400;
    double h = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = (i + 0.5) * theta / n;
        const double r = major + minor * std::cos(t);
        h += (r - c / r) * theta / n;
    }
    return std::exp(-(p - c1).squaredNorm()) - std::exp(-(p - c2).squaredNorm()) + minor * h;
}

double mean_angle_degrees(const std::vector<Vec3>& field, const VectorField& reference, const PolygonMesh& mesh, double exclude)
{
    const auto [c1, c2] = hhd_rotation_centers();
    double sum = 0.0;
    int count = 0;
    for (int v = 0; v < mesh.num_vertices(); ++v) {
        const Vec3& p = mesh.position(v);
        if ((p - c1).norm() < exclude || (p - c2).norm() < exclude) continue;
        sum += std::acos(std::clamp(field[v].normalized().dot(reference.value(p).normalized()), -1.0, 1.0));
        ++count;
    }
    return sum / count * 180.0 / std::numbers::pi;
}

double relative_sharp_distance(const std::vector<Vec3>& a, const std::vector<Vec3>& b, const Vector& weights)
{
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += weights[i] * (a[i] - b[i]).squaredNorm();
        den += weights[i] * b[i].squaredNorm();
    }
    return std::sqrt(num / den);
}

void applications()
{
    // mean curvature flow on a unit sphere
    const auto sphere = gen_regular(AnalyticSurface::sphere(), 13);
    const auto flow = mean_curvature_flow(sphere, {.t = 1e-4, .iterations = 10});
    bool mcf_ok = true;
    for (std::size_t i = 1; i < flow.size(); ++i) {
        mcf_ok = mcf_ok && mean_vertex_radius(flow[i]) < mean_vertex_radius(flow[i - 1]) &&
                 coordinate_dirichlet_energy(flow[i]) < coordinate_dirichlet_energy(flow[i - 1]);
    }
    note(fmt("MCF |V| %d: radius %.8f -> %.8f, energy %.6f -> %.6f", sphere.num_vertices(), mean_vertex_radius(flow.front()),
             mean_vertex_radius(flow.back()), coordinate_dirichlet_energy(flow.front()), coordinate_dirichlet_energy(flow.back())));

    // Helmholtz-Hodge decomposition on a 20k-face mixed-polygon torus
    const auto torus = AnalyticSurface::torus();
    const DecOperators hhd_ops(unstructure(gen_regular(torus, 200, 100), 0.1, 5).mesh);
    const auto& tm = hhd_ops.mesh();
    const auto hhd = helmholtz_hodge(hhd_ops, builtin_vector_field("torus_hhd"), {.tol = 1e-8, .sharps = true});
    const double angle = mean_angle_degrees(hhd.gamma_sharp, builtin_vector_field("torus_harmonic"), tm, 1.0);
    const Vector potential = hhd_ops.hodge_star(2).apply(hhd.beta).values;
    Eigen::Index imax = 0, imin = 0;
    potential.maxCoeff(&imax);
    potential.minCoeff(&imin);
    Vec3 pmax, pmin;
    double bmax = -1e300, bmin = 1e300;
    for (int i = 0; i < 720; ++i) {
        for (int j = 0; j < 360; ++j) {
            const double phi = 2 * std::numbers::pi * i / 720, theta = 2 * std::numbers::pi * j / 360 - std::numbers::pi;
            const double rho = 1.0 + 0.5 * std::cos(theta);
            const Vec3 p(rho * std::cos(phi), rho * std::sin(phi), 0.5 * std::sin(theta));
            const double b = hhd_potential(p);
            if (b > bmax) bmax = b, pmax = p;
            if (b < bmin) bmin = b, pmin = p;
        }
    }
    const double dmax = (tm.position(static_cast<int>(imax)) - pmax).norm();
    const double dmin = (tm.position(static_cast<int>(imin)) - pmin).norm();
    const auto [c1, c2] = hhd_rotation_centers();
    note(fmt("continuous extrema (%.3f, %.3f, %.3f) and (%.3f, %.3f, %.3f); discrete ones are %.3f and %.3f from the rotation centers",
             pmax.x(), pmax.y(), pmax.z(), pmin.x(), pmin.y(), pmin.z(), (tm.position(static_cast<int>(imax)) - c1).norm(),
             (tm.position(static_cast<int>(imin)) - c2).norm()));
    const bool hhd_ok = hhd.report.converged && angle < 15.0 && dmax < 0.25 && dmin < 0.25;
    note(fmt("HHD |V| %d: CGLS %d iterations, converged %d; gamma angle %.2f deg; extrema off by %.3f, %.3f", tm.num_vertices(),
             hhd.report.iterations, hhd.report.converged ? 1 : 0, angle, dmax, dmin));

    // Lie advection of the vortex 1-form by the rotation field
    const DecOperators adv_ops(gen_regular(torus, 128, 64));
    const auto& am = adv_ops.mesh();
    const auto x = flat(builtin_vector_field("torus_rotation"), am);
    const auto b0 = flat(builtin_vector_field("torus_vortex"), am);
    const auto adv = lie_advect_partial(adv_ops, x, b0, {.t = 1e-3, .iterations = 6283, .snapshot_every = 3142});
    bool adv_ok = !adv.blew_up && adv.steps == std::vector<int>{0, 3142, 6283};
    double half = std::nan(""), full = std::nan("");
    if (adv_ok) {
        const auto s0 = sharp(b0, am);
        const Vector w = assembly::vertex_mass_aw(am);
        half = relative_sharp_distance(sharp(adv.snapshots[1], am), s0, w);
        full = relative_sharp_distance(sharp(adv.snapshots[2], am), s0, w);
        adv_ok = full <= 0.5 * half;
    }
    note(fmt("advection |V| %d: relative distance at half period %.4f, full period %.4f", am.num_vertices(), half, full));

    verdict(8, mcf_ok && hhd_ok && adv_ok, "applications",
            fmt("MCF monotone %s; HHD angle %.2f deg (< 15), extrema %.3f/%.3f (< 0.25); advection %.4f vs %.4f (need <= half)",
                mcf_ok ? "yes" : "no", angle, dmax, dmin, full, half));
}

template <typename F>
void timed(const char* name, F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    try {
        f();
    } catch (const std::exception& e) {
        std::printf("FAIL %s: %s\n", name, e.what());
        ++failures;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    note(fmt("(%s took %.1f s)", name, seconds));
}

} // namespace

int main()
{
    timed("identities", identities);
    timed("convergence slopes", convergence_slopes);
    timed("contraction slopes", contraction_slopes);
    timed("Lie derivative regimes", lie_regimes);
    timed("codifferential comparison", codifferential_comparison);
    timed("applications", applications);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
