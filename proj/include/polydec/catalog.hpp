#pragma once

#include <polydec/fields.hpp>
#include <polydec/surfaces.hpp>

#include <optional>
#include <string>
#include <vector>

namespace polydec {

///
/// Named analytic test set on one surface: the forms fed to the operators, the vector field used
/// for contraction/Lie derivatives, and hand-derived closed forms for derivative operators.
/// Algebraic results (wedge, star, contraction, norms) are derived generically from the forms
/// and the surface normal by the harness.
///
/// Sign conventions: delta = -*d*, Laplacian = delta d (approximates minus the Laplace-Beltrami
/// operator on functions).
///
struct FormCatalog {
    std::string name;
    AnalyticSurface surface = AnalyticSurface::plane();
    ScalarField alpha0;
    CovectorField beta1;
    CovectorField gamma1;
    TwoFormField omega2;
    VectorField x;

    std::optional<ScalarField> codiff_beta;    ///< delta beta
    std::optional<CovectorField> codiff_omega; ///< delta omega
    std::optional<ScalarField> laplace_alpha;  ///< delta d alpha
    std::optional<ScalarField> lie_alpha;      ///< L_X alpha
    std::optional<CovectorField> lie_beta;     ///< L_X beta
    std::optional<TwoFormField> lie_omega;     ///< L_X omega
};

/// plane_trig, plane_codiff, torus_hodge, sphere_jitter. Throws InvalidConfig for unknown names.
FormCatalog catalog_entry(const std::string& name);
std::vector<std::string> catalog_names();

/// Builtin tangent vector fields for the applications:
///   torus_rotation  X = (-y, x, 0)
///   torus_hhd       X_H + X_R, two Gaussian rotations about (3/2, 0, 0) (CCW) and
///                   (-sqrt2/2, sqrt2/2, 1/2) (CW)
///   torus_harmonic  X_H = (-y, x, 0)
///   torus_rotational X_R
///   torus_vortex    Y = -grad exp(-|p - c|^2) x n, c = (-sqrt2/2, sqrt2/2, 1/2)
/// All use the torus R = 1, r = 1/2.
VectorField builtin_vector_field(const std::string& name);
std::vector<std::string> builtin_vector_field_names();

/// Centers of the two rotations of torus_hhd: {CCW (potential maximum), CW (minimum)}.
std::pair<Vec3, Vec3> hhd_rotation_centers();

} // namespace polydec
