#pragma once

#include <polydec/cochain.hpp>
#include <polydec/fields.hpp>
#include <polydec/operators.hpp>

#include <optional>
#include <variant>
#include <vector>

namespace polydec {

struct FlowConfig {
    double t = 1e-4;
    int iterations = 10;
    Scheme scheme = Scheme::Ours;
};

///
/// Implicit mean curvature flow. Each step solves (I + t Delta) f_t = f_0 per coordinate with
/// Delta = delta d rebuilt from the current geometry. Delta here is the positive operator
/// (approximating minus Laplace-Beltrami), so the system smooths. Returns the input followed by
/// one mesh per iteration. Throws GeometryCollapse, SolverFailure, InvalidConfig.
///
std::vector<PolygonMesh> mean_curvature_flow(const PolygonMesh& mesh, const FlowConfig& config);

struct HHDResult {
    Cochain delta_beta; ///< rotational part, delta_2 beta
    Cochain gamma;      ///< harmonic candidate, omega - delta beta
    Cochain beta;       ///< potential 2-cochain
    SolveReport report;
    std::vector<Vec3> delta_beta_sharp; ///< empty unless requested
    std::vector<Vec3> gamma_sharp;
};

using HHDInput = std::variant<VectorField, Cochain>;

struct HHDOptions {
    double tol = 1e-10;
    int max_iter = 0;
    bool sharps = false;
};

///
/// Two-component Helmholtz-Hodge decomposition omega = delta beta + gamma. beta is the
/// minimal-norm least-squares solution of d_1 delta_2 beta = d_1 omega.
///
HHDResult helmholtz_hodge(const DecOperators& ops, const HHDInput& input, const HHDOptions& options = {});

struct AdvectionOptions {
    double t = 1e-3;
    int iterations = 1000;
    int snapshot_every = 0; ///< 0 keeps only the first and last state
    double blowup = 1e12;
};

struct AdvectionResult {
    std::vector<int> steps;
    std::vector<Cochain> snapshots;
    bool blew_up = false;
};

///
/// Forward Euler alpha_{k+1} = alpha_k - t L_X alpha_k, for 0- and 1-forms. Throws
/// NumericalBlowup when a value exceeds options.blowup; lie_advect_partial returns the snapshots
/// taken so far instead.
///
AdvectionResult lie_advect(const DecOperators& ops, const Cochain& x_flat, const Cochain& alpha0,
                           const AdvectionOptions& options);
AdvectionResult lie_advect_partial(const DecOperators& ops, const Cochain& x_flat, const Cochain& alpha0,
                                   const AdvectionOptions& options);

/// sum_c (d0 f_c)^T M1 (d0 f_c) over the three coordinate functions, M1 the per-face midpoint mass.
double coordinate_dirichlet_energy(const PolygonMesh& mesh);
/// Mean distance of the vertices from the origin.
double mean_vertex_radius(const PolygonMesh& mesh);

} // namespace polydec
