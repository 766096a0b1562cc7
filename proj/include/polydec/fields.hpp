#pragma once

#include <polydec/mesh.hpp>

#include <functional>
#include <variant>

namespace polydec {

using ScalarFn = std::function<double(const Vec3&)>;
using VectorFn = std::function<Vec3(const Vec3&)>;

/// A(x, y, z); discretized by point evaluation.
struct ScalarField {
    ScalarFn value;
};

/// B = Bx dx + By dy + Bz dz, integrated along edges.
struct CovectorField {
    VectorFn components;
};

/// W = Wx dy^dz + Wy dz^dx + Wz dx^dy, i.e. W(u, v) = <W, u x v>; integrated as flux.
struct TwoFormField {
    VectorFn flux;
};

/// Tangent vector field X(x, y, z).
struct VectorField {
    VectorFn value;
};

using AnalyticField = std::variant<ScalarField, CovectorField, TwoFormField>;

int field_degree(const AnalyticField& field);

} // namespace polydec
