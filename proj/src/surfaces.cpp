#include <polydec/error.hpp>
#include <polydec/quadrature.hpp>
#include <polydec/surfaces.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polydec {

namespace {

constexpr double pi = std::numbers::pi;

} // namespace

AnalyticSurface AnalyticSurface::torus(double major_radius, double minor_radius)
{
    AnalyticSurface s(SurfaceKind::Torus);
    s.major_ = major_radius;
    s.minor_ = minor_radius;
    return s;
}

AnalyticSurface AnalyticSurface::from_name(const std::string& name)
{
    if (name == "plane") return plane();
    if (name == "sphere") return sphere();
    if (name == "torus") return torus();
    throw Error(ErrorKind::InvalidConfig, "unknown surface '" + name + "'");
}

std::string AnalyticSurface::name() const
{
    switch (kind_) {
    case SurfaceKind::Plane: return "plane";
    case SurfaceKind::Sphere: return "sphere";
    case SurfaceKind::Torus: return "torus";
    }
    return "?";
}

Vec3 AnalyticSurface::project(const Vec3& p) const
{
    switch (kind_) {
    case SurfaceKind::Plane:
        return {std::clamp(p.x(), -1.0, 1.0), std::clamp(p.y(), -1.0, 1.0), 0.0};
    case SurfaceKind::Sphere: {
        const double n = p.norm();
        return n > 0.0 ? Vec3(p / n) : Vec3(0.0, 0.0, 1.0);
    }
    case SurfaceKind::Torus: {
        const double rho = std::hypot(p.x(), p.y());
        const Vec3 ring = rho > 0.0 ? Vec3(major_ * p.x() / rho, major_ * p.y() / rho, 0.0) : Vec3(major_, 0.0, 0.0);
        const Vec3 offset = p - ring;
        const double len = offset.norm();
        return ring + (len > 0.0 ? Vec3(minor_ * offset / len) : Vec3(minor_ * ring / major_));
    }
    }
    return p;
}

Vec3 AnalyticSurface::normal(const Vec3& p) const
{
    switch (kind_) {
    case SurfaceKind::Plane: return Vec3::UnitZ();
    case SurfaceKind::Sphere: return project(p);
    case SurfaceKind::Torus: {
        const Vec3 q = project(p);
        const double rho = std::hypot(q.x(), q.y());
        const Vec3 ring(major_ * q.x() / rho, major_ * q.y() / rho, 0.0);
        return (q - ring) / minor_;
    }
    }
    return Vec3::UnitZ();
}

std::array<Vec3, 2> AnalyticSurface::tangent_basis(const Vec3& p) const
{
    const Vec3 n = normal(p);
    const Vec3 helper = std::abs(n.z()) < 0.9 ? Vec3::UnitZ() : Vec3::UnitX();
    const Vec3 t1 = helper.cross(n).normalized();
    return {t1, n.cross(t1)};
}

double AnalyticSurface::integrate(const std::function<double(const Vec3&, const Vec3&)>& f, int nodes) const
{
    double total = 0.0;
    switch (kind_) {
    case SurfaceKind::Plane: {
        const auto rule = gauss_legendre(nodes);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
                const Vec3 p(2.0 * rule.nodes[i] - 1.0, 2.0 * rule.nodes[j] - 1.0, 0.0);
                total += 4.0 * rule.weights[i] * rule.weights[j] * f(p, Vec3::UnitZ());
            }
        }
        break;
    }
    case SurfaceKind::Sphere: {
        const auto rule = gauss_legendre(nodes);
        const int nphi = 2 * nodes;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double theta = pi * rule.nodes[i];
            const double w = pi * rule.weights[i] * std::sin(theta) * (2.0 * pi / nphi);
            for (int j = 0; j < nphi; ++j) {
                const double phi = 2.0 * pi * j / nphi;
                const Vec3 p(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta));
                total += w * f(p, p);
            }
        }
        break;
    }
    case SurfaceKind::Torus: {
        // both angles periodic: the trapezoid rule converges spectrally
        const int nu = 2 * nodes, nv = 2 * nodes;
        const double du = 2.0 * pi / nu, dv = 2.0 * pi / nv;
        for (int i = 0; i < nu; ++i) {
            const double u = i * du;
            for (int j = 0; j < nv; ++j) {
                const double v = j * dv;
                const Vec3 n(std::cos(v) * std::cos(u), std::cos(v) * std::sin(u), std::sin(v));
                const Vec3 p(major_ * std::cos(u), major_ * std::sin(u), 0.0);
                const double jac = minor_ * (major_ + minor_ * std::cos(v));
                total += du * dv * jac * f(p + minor_ * n, n);
            }
        }
        break;
    }
    }
    return total;
}

double AnalyticSurface::area() const
{
    switch (kind_) {
    case SurfaceKind::Plane: return 4.0;
    case SurfaceKind::Sphere: return 4.0 * pi;
    case SurfaceKind::Torus: return 4.0 * pi * pi * major_ * minor_;
    }
    return 0.0;
}

} // namespace polydec
