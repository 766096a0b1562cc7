#pragma once

#include <polydec/mesh.hpp>

#include <array>
#include <functional>
#include <string>

namespace polydec {

enum class SurfaceKind { Plane, Sphere, Torus };

///
/// Smooth reference surface for mesh generation and analytic oracles.
///   Plane:  the square [-1,1]^2 in z = 0, normal +z.
///   Sphere: unit sphere, outward normal.
///   Torus:  azimuthally symmetric about z, major radius R, minor radius r, outward normal.
///
class AnalyticSurface {
public:
    static AnalyticSurface plane() { return AnalyticSurface(SurfaceKind::Plane); }
    static AnalyticSurface sphere() { return AnalyticSurface(SurfaceKind::Sphere); }
    static AnalyticSurface torus(double major_radius = 1.0, double minor_radius = 0.5);
    /// "plane" | "sphere" | "torus"; throws InvalidConfig otherwise.
    static AnalyticSurface from_name(const std::string& name);

    SurfaceKind kind() const { return kind_; }
    std::string name() const;
    double major_radius() const { return major_; }
    double minor_radius() const { return minor_; }

    /// Closest point on the surface (the plane clamps to the square).
    Vec3 project(const Vec3& p) const;
    /// Unit normal at the closest point.
    Vec3 normal(const Vec3& p) const;
    /// Two orthonormal tangent vectors at the closest point.
    std::array<Vec3, 2> tangent_basis(const Vec3& p) const;
    /// Distance from p to the surface.
    double distance(const Vec3& p) const { return (project(p) - p).norm(); }

    /// Surface integral of f(point, unit normal) by a tensor rule in the natural parametrization.
    double integrate(const std::function<double(const Vec3&, const Vec3&)>& f, int nodes = 96) const;

    double area() const;

private:
    explicit AnalyticSurface(SurfaceKind kind) : kind_(kind) {}

    SurfaceKind kind_;
    double major_ = 1.0;
    double minor_ = 0.5;
};

} // namespace polydec
