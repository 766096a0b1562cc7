#include <polydec/selftest.hpp>
#include <polydec/applications.hpp>
#include <polydec/meshgen.hpp>
#include <polydec/operators.hpp>
#include <polydec/rng.hpp>

#include <algorithm>

namespace polydec {

namespace {

Cochain random_cochain(const PolygonMesh& mesh, int degree, Rng& rng)
{
    Cochain c = Cochain::zero(mesh, degree);
    for (Eigen::Index i = 0; i < c.size(); ++i) c.values[i] = rng.uniform(-1.0, 1.0);
    return c;
}

double relative(const Vector& diff, const Vector& scale)
{
    const double s = std::max(1.0, scale.cwiseAbs().maxCoeff());
    return diff.size() == 0 ? 0.0 : diff.cwiseAbs().maxCoeff() / s;
}

PolygonMesh random_mesh(int index, Rng& rng)
{
    const int n = 5 + static_cast<int>(rng.below(5));
    const std::uint64_t seed = rng.below(1u << 30);
    switch (index % 3) {
    case 0: {
        const auto plane = AnalyticSurface::plane();
        return unstructure(jitter(gen_regular(plane, n), plane, 0.3, seed), 0.3, seed + 1).mesh;
    }
    case 1: {
        const auto sphere = AnalyticSurface::sphere();
        return unstructure(jitter(gen_regular(sphere, n), sphere, 0.2, seed), 0.3, seed + 1).mesh;
    }
    default: {
        const auto torus = AnalyticSurface::torus();
        return unstructure(gen_regular(torus, 2 * n, n), 0.3, seed).mesh;
    }
    }
}

} // namespace

std::vector<IdentityCheck> exact_identity_checks(std::uint64_t seed, int meshes)
{
    Rng rng(seed);
    double dd = 0.0, skew = 0.0, leibniz0 = 0.0, leibniz1 = 0.0, lie_const = 0.0, hhd = 0.0;
    for (int m = 0; m < meshes; ++m) {
        const DecOperators ops(random_mesh(m, rng));
        const auto& mesh = ops.mesh();
        const SparseMatrix ddm = ops.exterior_derivative(1).matrix * ops.exterior_derivative(0).matrix;
        for (int k = 0; k < ddm.outerSize(); ++k) {
            for (SparseMatrix::InnerIterator it(ddm, k); it; ++it) dd = std::max(dd, std::abs(it.value()));
        }

        const Cochain a0 = random_cochain(mesh, 0, rng), b0 = random_cochain(mesh, 0, rng);
        const Cochain a1 = random_cochain(mesh, 1, rng), b1 = random_cochain(mesh, 1, rng);
        const Cochain ab = wedge(a1, b1, mesh);
        skew = std::max(skew, relative((ab + wedge(b1, a1, mesh)).values, ab.values));

        const auto& d0 = ops.exterior_derivative(0);
        const auto& d1 = ops.exterior_derivative(1);
        const Cochain lhs0 = d0.apply(wedge(a0, b0, mesh));
        const Cochain rhs0 = wedge(d0.apply(a0), b0, mesh) + wedge(a0, d0.apply(b0), mesh);
        leibniz0 = std::max(leibniz0, relative((lhs0 - rhs0).values, lhs0.values));
        const Cochain lhs1 = d1.apply(wedge(a0, b1, mesh));
        const Cochain rhs1 = wedge(d0.apply(a0), b1, mesh) + wedge(a0, d1.apply(b1), mesh);
        leibniz1 = std::max(leibniz1, relative((lhs1 - rhs1).values, lhs1.values));

        const Cochain x = random_cochain(mesh, 1, rng);
        const Cochain one = Cochain::constant(mesh, 0, 1.0);
        lie_const = std::max(lie_const, lie_derivative(ops, x, one).values.cwiseAbs().maxCoeff());

        const Cochain omega = random_cochain(mesh, 1, rng);
        HHDOptions ho;
        ho.tol = 1e-8;
        const auto r = helmholtz_hodge(ops, omega, ho);
        hhd = std::max(hhd, relative((omega - (r.delta_beta + r.gamma)).values, omega.values));
    }

    // planar checks on jittered, unstructured squares
    double star_mu = 0.0, star_one = 0.0, linear = 0.0;
    const auto plane = AnalyticSurface::plane();
    for (int m = 0; m < 5; ++m) {
        const std::uint64_t s = seed + 100 + m;
        const DecOperators ops(unstructure(jitter(gen_regular(plane, 8 + 3 * m), plane, 0.35, s), 0.3, s).mesh);
        const auto& mesh = ops.mesh();
        Cochain mu = Cochain::zero(mesh, 2);
        for (int f = 0; f < mesh.num_faces(); ++f) mu.values[f] = mesh.face_geometry(f).area;
        const Cochain one = Cochain::constant(mesh, 0, 1.0);
        star_mu = std::max(star_mu, relative((ops.hodge_star(2).apply(mu) - one).values, one.values));
        star_one = std::max(star_one, relative((ops.hodge_star(0).apply(one) - mu).values, mu.values));

        Rng r(s);
        Cochain affine = Cochain::zero(mesh, 0);
        const Vec3 g(r.uniform(-3.0, 3.0), r.uniform(-3.0, 3.0), 0.0);
        const double c = r.uniform(-3.0, 3.0);
        for (int v = 0; v < mesh.num_vertices(); ++v) affine.values[v] = g.dot(mesh.position(v)) + c;
        const Cochain lap = ops.laplacian(0).apply(affine);
        const double scale = std::max(1.0, affine.values.cwiseAbs().maxCoeff());
        for (int v = 0; v < mesh.num_vertices(); ++v) {
            if (!mesh.is_boundary_vertex(v)) linear = std::max(linear, std::abs(lap.values[v]) / scale);
        }
    }

    const auto check = [](std::string name, double error, double tol) {
        return IdentityCheck{std::move(name), error, tol, error <= tol};
    };
    return {
        check("d1 d0 = 0", dd, 1e-12),
        check("wedge skew-commutativity", skew, 1e-12),
        check("Leibniz 0^0", leibniz0, 1e-12),
        check("Leibniz 0^1", leibniz1, 1e-12),
        check("L_X 1 = 0", lie_const, 1e-12),
        check("HHD reconstruction", hhd, 1e-12),
        check("planar *mu = 1", star_mu, 1e-12),
        check("planar *1 = mu", star_one, 1e-12),
        check("linear precision of Delta_0", linear, 1e-10),
    };
}

} // namespace polydec
