#include <polydec/catalog.hpp>
#include <polydec/error.hpp>

#include <cmath>

namespace polydec {

namespace {

using std::cos;
using std::exp;
using std::sin;

const double sqrt2_2 = std::sqrt(2.0) / 2.0;

Vec3 zero_vector(const Vec3&) { return Vec3::Zero(); }
double zero_scalar(const Vec3&) { return 0.0; }

FormCatalog plane_trig()
{
    FormCatalog c;
    c.name = "plane_trig";
    c.surface = AnalyticSurface::plane();
    c.alpha0 = {[](const Vec3& p) { return sin(p.x()) * cos(p.y()) + 1.0; }};
    c.beta1 = {[](const Vec3& p) {
        return Vec3(sin(p.x()) * sin(p.x()) - 1.0, 3.0 * cos(p.x() + 2.0) + sin(p.y()), 0.0);
    }};
    c.gamma1 = {[](const Vec3& p) { return Vec3(cos(p.x()) * sin(p.y()) + 3.0, cos(p.y()), 0.0); }};
    c.omega2 = {[](const Vec3& p) { return Vec3(0.0, 0.0, sin(p.x() * p.y()) + cos(1.0)); }};
    c.x = {[](const Vec3&) { return Vec3(1.0, 0.0, 0.0); }};

    c.codiff_beta = ScalarField{[](const Vec3& p) { return -(sin(2.0 * p.x()) + cos(p.y())); }};
    c.codiff_omega = CovectorField{[](const Vec3& p) {
        const double s = cos(p.x() * p.y());
        return Vec3(p.x() * s, -p.y() * s, 0.0);
    }};
    c.laplace_alpha = ScalarField{[](const Vec3& p) { return 2.0 * sin(p.x()) * cos(p.y()); }};
    // X = d/dx is constant, so L_X acts as the partial x-derivative on components
    c.lie_alpha = ScalarField{[](const Vec3& p) { return cos(p.x()) * cos(p.y()); }};
    c.lie_beta = CovectorField{[](const Vec3& p) { return Vec3(sin(2.0 * p.x()), -3.0 * sin(p.x() + 2.0), 0.0); }};
    c.lie_omega = TwoFormField{[](const Vec3& p) { return Vec3(0.0, 0.0, p.y() * cos(p.x() * p.y())); }};
    return c;
}

FormCatalog plane_codiff()
{
    FormCatalog c;
    c.name = "plane_codiff";
    c.surface = AnalyticSurface::plane();
    c.alpha0 = {[](const Vec3& p) { return sin(p.x() - 1.0) - cos(2.0 * p.y()); }};
    c.beta1 = {[](const Vec3& p) {
        return Vec3(sin(2.0 * p.x()) + cos(p.y() / 2.0), 3.0 * sin(p.x()) - cos(p.y()), 0.0);
    }};
    c.gamma1 = {[](const Vec3& p) { return Vec3(cos(p.x()) * sin(p.y()) + 3.0, cos(p.y()), 0.0); }};
    c.omega2 = {[](const Vec3& p) {
        return Vec3(0.0, 0.0, sin((p.x() + 1.0) / 4.0) + cos(1.0 - p.y() / 3.0));
    }};
    c.x = {[](const Vec3&) { return Vec3(1.0, 0.0, 0.0); }};

    c.codiff_beta = ScalarField{[](const Vec3& p) { return -(2.0 * cos(2.0 * p.x()) + sin(p.y())); }};
    c.codiff_omega = CovectorField{[](const Vec3& p) {
        return Vec3(sin(1.0 - p.y() / 3.0) / 3.0, -cos((p.x() + 1.0) / 4.0) / 4.0, 0.0);
    }};
    c.laplace_alpha = ScalarField{[](const Vec3& p) { return sin(p.x() - 1.0) - 4.0 * cos(2.0 * p.y()); }};
    c.lie_alpha = ScalarField{[](const Vec3& p) { return cos(p.x() - 1.0); }};
    c.lie_beta = CovectorField{[](const Vec3& p) { return Vec3(2.0 * cos(2.0 * p.x()), 3.0 * cos(p.x()), 0.0); }};
    c.lie_omega = TwoFormField{[](const Vec3& p) { return Vec3(0.0, 0.0, cos((p.x() + 1.0) / 4.0) / 4.0); }};
    return c;
}

FormCatalog torus_hodge()
{
    const auto surface = AnalyticSurface::torus(1.0, 0.5);
    FormCatalog c;
    c.name = "torus_hodge";
    c.surface = surface;
    c.alpha0 = {[](const Vec3& p) { return p.x() * p.x() + p.y() * p.y(); }};
    c.beta1 = {[](const Vec3& p) { return Vec3(-p.y(), p.x(), 0.0); }};
    // *beta: orthogonal to (-y, x, 0) on the torus R = 1, r = 1/2
    const VectorFn y = [](const Vec3& p) {
        const double rho2 = p.x() * p.x() + p.y() * p.y();
        return Vec3(-2.0 * p.x() * p.z(), -2.0 * p.y() * p.z(), 2.0 * (rho2 - std::sqrt(rho2)));
    };
    c.gamma1 = {y};
    c.omega2 = {[surface](const Vec3& p) { return surface.normal(p); }};
    c.x = {y};
    return c;
}

FormCatalog sphere_jitter()
{
    FormCatalog c;
    c.name = "sphere_jitter";
    c.surface = AnalyticSurface::sphere();
    c.alpha0 = {[](const Vec3& p) { return p.x() * p.x() + p.y() * p.y(); }};
    c.beta1 = {[](const Vec3& p) { return Vec3(-p.x() * p.z(), -p.y() * p.z(), p.x() * p.x() + p.y() * p.y()); }};
    c.gamma1 = {[](const Vec3& p) { return Vec3(-p.y(), p.x(), 0.0); }};
    c.omega2 = {[](const Vec3& p) { return p; }};
    c.x = {[](const Vec3& p) { return Vec3(-p.y(), p.x(), 0.0); }};
    // every form above is invariant under rotation about z
    c.lie_alpha = ScalarField{zero_scalar};
    c.lie_beta = CovectorField{zero_vector};
    c.lie_omega = TwoFormField{zero_vector};
    return c;
}

Vec3 gaussian_gradient(const Vec3& p, const Vec3& center)
{
    const Vec3 d = p - center;
    return -2.0 * d * exp(-d.squaredNorm());
}

} // namespace

FormCatalog catalog_entry(const std::string& name)
{
    if (name == "plane_trig") return plane_trig();
    if (name == "plane_codiff") return plane_codiff();
    if (name == "torus_hodge") return torus_hodge();
    if (name == "sphere_jitter") return sphere_jitter();
    throw Error(ErrorKind::InvalidConfig, "unknown form catalog '" + name + "'");
}

std::vector<std::string> catalog_names()
{
    return {"plane_trig", "plane_codiff", "torus_hodge", "sphere_jitter"};
}

std::pair<Vec3, Vec3> hhd_rotation_centers()
{
    return {Vec3(1.5, 0.0, 0.0), Vec3(-sqrt2_2, sqrt2_2, 0.5)};
}

VectorField builtin_vector_field(const std::string& name)
{
    const auto torus = AnalyticSurface::torus(1.0, 0.5);
    const auto harmonic = [](const Vec3& p) { return Vec3(-p.y(), p.x(), 0.0); };
    const auto rotational = [torus](const Vec3& p) {
        const auto [c1, c2] = hhd_rotation_centers();
        return Vec3((gaussian_gradient(p, c1) - gaussian_gradient(p, c2)).cross(torus.normal(p)));
    };
    if (name == "torus_rotation" || name == "torus_harmonic") return {harmonic};
    if (name == "torus_rotational") return {rotational};
    if (name == "torus_hhd") return {[=](const Vec3& p) { return Vec3(harmonic(p) + rotational(p)); }};
    if (name == "torus_vortex") {
        return {[torus](const Vec3& p) {
            const Vec3 c(-sqrt2_2, sqrt2_2, 0.5);
            return Vec3(-gaussian_gradient(p, c).cross(torus.normal(p)));
        }};
    }
    throw Error(ErrorKind::InvalidConfig, "unknown builtin field '" + name + "'");
}

std::vector<std::string> builtin_vector_field_names()
{
    return {"torus_rotation", "torus_harmonic", "torus_rotational", "torus_hhd", "torus_vortex"};
}

} // namespace polydec
