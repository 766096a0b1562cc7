#include <polydec/applications.hpp>
#include <polydec/error.hpp>

#include <Eigen/SparseLU>

#include <cmath>
#include <string>

namespace polydec {

namespace {

void check_geometry(const PolygonMesh& mesh, int iteration)
{
    for (int f = 0; f < mesh.num_faces(); ++f) {
        if (mesh.is_degenerate(f)) {
            throw Error(ErrorKind::GeometryCollapse,
                        "face " + std::to_string(f) + " collapsed at iteration " + std::to_string(iteration));
        }
    }
}

} // namespace

std::vector<PolygonMesh> mean_curvature_flow(const PolygonMesh& mesh, const FlowConfig& config)
{
    if (!(std::isfinite(config.t) && config.t >= 0.0)) throw Error(ErrorKind::InvalidConfig, "time step must be finite and nonnegative");
    if (config.iterations < 0) throw Error(ErrorKind::InvalidConfig, "iteration count must be nonnegative");

    std::vector<PolygonMesh> out{mesh};
    out.reserve(config.iterations + 1);
    const int n = mesh.num_vertices();
    for (int it = 1; it <= config.iterations; ++it) {
        const PolygonMesh& current = out.back();
        const DecOperators ops(current);
        const SparseMatrix system = identity(n) + config.t * ops.laplacian(0, config.scheme).matrix;

        Eigen::SparseLU<SparseMatrix> lu;
        lu.compute(system);
        if (lu.info() != Eigen::Success) {
            throw Error(ErrorKind::SolverFailure, "MCF system factorization failed at iteration " + std::to_string(it));
        }

        std::vector<Vec3> positions(n);
        for (int c = 0; c < 3; ++c) {
            Vector f0(n);
            for (int v = 0; v < n; ++v) f0[v] = current.position(v)[c];
            const Vector f = lu.solve(f0);
            if (!f.allFinite()) throw Error(ErrorKind::SolverFailure, "MCF produced non-finite positions");
            for (int v = 0; v < n; ++v) positions[v][c] = f[v];
        }
        PolygonMesh next = current.with_positions(std::move(positions));
        check_geometry(next, it);
        out.push_back(std::move(next));
    }
    return out;
}

HHDResult helmholtz_hodge(const DecOperators& ops, const HHDInput& input, const HHDOptions& options)
{
    const auto& mesh = ops.mesh();
    Cochain omega = std::holds_alternative<VectorField>(input) ? flat(std::get<VectorField>(input), mesh)
                                                               : std::get<Cochain>(input);
    if (omega.degree != 1) throw Error(ErrorKind::DegreeMismatch, "HHD expects a 1-form");
    check_cochain(mesh, omega);

    const SparseMatrix& d1 = ops.exterior_derivative(1).matrix;
    const SparseMatrix& delta2 = ops.codifferential(2).matrix;
    const SparseMatrix system = d1 * delta2;
    const Vector rhs = d1 * omega.values;

    SolveOptions so;
    so.method = SolveMethod::LeastSquares;
    so.tol = options.tol;
    so.max_iter = options.max_iter;
    auto solved = solve(system, rhs, so);
    if (!solved.x.allFinite()) throw Error(ErrorKind::SolverFailure, "HHD solve produced non-finite values");

    HHDResult r;
    r.beta = Cochain{2, solved.x};
    r.delta_beta = Cochain{1, delta2 * solved.x};
    r.gamma = omega - r.delta_beta;
    r.report = std::move(solved.report);
    if (options.sharps) {
        r.delta_beta_sharp = sharp(r.delta_beta, mesh);
        r.gamma_sharp = sharp(r.gamma, mesh);
    }
    return r;
}

AdvectionResult lie_advect_partial(const DecOperators& ops, const Cochain& x_flat, const Cochain& alpha0,
                                   const AdvectionOptions& options)
{
    if (alpha0.degree != 0 && alpha0.degree != 1) throw Error(ErrorKind::DegreeMismatch, "advection is defined for 0- and 1-forms");
    if (!(std::isfinite(options.t) && options.t >= 0.0)) throw Error(ErrorKind::InvalidConfig, "time step must be finite and nonnegative");
    if (options.iterations < 0) throw Error(ErrorKind::InvalidConfig, "iteration count must be nonnegative");
    check_cochain(ops.mesh(), alpha0);

    const SparseMatrix step = identity(static_cast<int>(alpha0.size())) -
                              options.t * ops.lie_operator(x_flat, alpha0.degree).matrix;
    AdvectionResult r;
    r.steps.push_back(0);
    r.snapshots.push_back(alpha0);
    Vector a = alpha0.values;
    for (int it = 1; it <= options.iterations; ++it) {
        a = step * a;
        if (!a.allFinite() || a.cwiseAbs().maxCoeff() > options.blowup) {
            r.blew_up = true;
            r.steps.push_back(it);
            r.snapshots.push_back(Cochain{alpha0.degree, a});
            return r;
        }
        const bool take = it == options.iterations || (options.snapshot_every > 0 && it % options.snapshot_every == 0);
        if (take) {
            r.steps.push_back(it);
            r.snapshots.push_back(Cochain{alpha0.degree, a});
        }
    }
    return r;
}

AdvectionResult lie_advect(const DecOperators& ops, const Cochain& x_flat, const Cochain& alpha0,
                           const AdvectionOptions& options)
{
    auto r = lie_advect_partial(ops, x_flat, alpha0, options);
    if (r.blew_up) {
        throw Error(ErrorKind::NumericalBlowup, "advection exceeded the blowup bound at step " + std::to_string(r.steps.back()));
    }
    return r;
}

double coordinate_dirichlet_energy(const PolygonMesh& mesh)
{
    const SparseMatrix d0 = assembly::d0(mesh);
    const SparseMatrix m1 = assembly::one_form_mass_aw(mesh);
    double energy = 0.0;
    for (int c = 0; c < 3; ++c) {
        Vector f(mesh.num_vertices());
        for (int v = 0; v < mesh.num_vertices(); ++v) f[v] = mesh.position(v)[c];
        const Vector df = d0 * f;
        energy += df.dot(m1 * df);
    }
    return energy;
}

double mean_vertex_radius(const PolygonMesh& mesh)
{
    double sum = 0.0;
    for (const auto& p : mesh.positions()) sum += p.norm();
    return mesh.num_vertices() > 0 ? sum / mesh.num_vertices() : 0.0;
}

} // namespace polydec
