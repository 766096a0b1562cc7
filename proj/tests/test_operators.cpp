#include "support.hpp"

#include <polydec/cochain.hpp>
#include <polydec/meshgen.hpp>
#include <polydec/operators.hpp>

#include <Eigen/Eigenvalues>

using namespace polydec;
using testing::kind_of;

namespace {

Cochain linear_form(const PolygonMesh& m, const Vec3& g)
{
    return discretize(CovectorField{[=](const Vec3&) { return g; }}, m);
}

Cochain scalar(const PolygonMesh& m, const ScalarFn& f)
{
    return discretize(ScalarField{f}, m);
}

PolygonMesh mixed_torus()
{
    const auto s = AnalyticSurface::torus();
    return unstructure(jitter(gen_regular(s, 12, 6), s, 0.3, 3), 0.3, 3).mesh;
}

double min_eigenvalue(const SparseMatrix& m)
{
    const Eigen::MatrixXd dense(m);
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(dense).eigenvalues().minCoeff();
}

double asymmetry(const SparseMatrix& m)
{
    return (Eigen::MatrixXd(m) - Eigen::MatrixXd(m).transpose()).cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("0-form wedge 1-form averages the endpoints")
{
    const auto m = PolygonMesh::build({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 2}});
    Cochain a = Cochain::zero(m, 0), b = Cochain::zero(m, 1);
    a.values << 2, 4, 0;
    b.values[m.find_edge(0, 1)] = 3;
    CHECK(wedge(a, b, m)[m.find_edge(0, 1)] == doctest::Approx(9.0));
}

TEST_CASE("dx ^ dy equals the area on planar polygons")
{
    for (const auto& m : {testing::unit_square(), testing::pentagon()}) {
        const auto w = wedge(linear_form(m, {1, 0, 0}), linear_form(m, {0, 1, 0}), m);
        CHECK(w[0] == doctest::Approx(m.face_geometry(0).area));
    }
}

TEST_CASE("triangle wedge is the Whitney formula")
{
    const auto m = PolygonMesh::build({{0, 0, 0}, {1.3, 0.2, 0}, {0.4, 0.9, 0.1}}, {{0, 1, 2}});
    Cochain b = Cochain::zero(m, 1), g = Cochain::zero(m, 1);
    b.values << 0.7, -1.1, 0.4;
    g.values << 0.2, 0.5, -0.9;
    std::array<double, 3> bf{}, gf{};
    const auto hes = m.face_halfedges(0);
    for (int i = 0; i < 3; ++i) {
        bf[i] = hes[i].sign * b[hes[i].edge];
        gf[i] = hes[i].sign * g[hes[i].edge];
    }
    double expected = 0.0;
    for (int i = 0; i < 3; ++i) expected += bf[i] * (gf[(i + 1) % 3] - gf[(i + 2) % 3]) / 6.0;
    CHECK(wedge(b, g, m)[0] == doctest::Approx(expected));
}

TEST_CASE("wedge degree overflow")
{
    const auto m = testing::unit_square();
    CHECK(kind_of([&] { wedge(Cochain::zero(m, 1), Cochain::zero(m, 2), m); }) == ErrorKind::DegreeOverflow);
}

TEST_CASE("1-form wedge is skew and 0-forms commute")
{
    const auto m = mixed_torus();
    const auto b = discretize(CovectorField{[](const Vec3& p) { return Vec3(p.y(), std::sin(p.z()), p.x() * p.z()); }}, m);
    const auto g = discretize(CovectorField{[](const Vec3& p) { return Vec3(1, p.x(), -p.y()); }}, m);
    const auto a = scalar(m, [](const Vec3& p) { return std::cos(p.x() + p.z()); });
    CHECK((wedge(b, g, m).values + wedge(g, b, m).values).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((wedge(a, b, m).values - wedge(b, a, m).values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("wedge is invariant under cyclic relabeling of a face")
{
    const std::vector<Vec3> p{{0, 0, 0}, {2, 0, 0.1}, {2.5, 1.5, 0}, {1, 2.5, -0.2}, {-0.5, 1, 0}};
    const auto a = PolygonMesh::build(p, {{0, 1, 2, 3, 4}});
    const auto b = PolygonMesh::build(p, {{2, 3, 4, 0, 1}});
    const VectorFn f = [](const Vec3& q) { return Vec3(q.y() * q.y(), q.x(), 1); };
    const VectorFn g = [](const Vec3& q) { return Vec3(-q.z(), 2, q.x() * q.y()); };
    const double wa = wedge(discretize(CovectorField{f}, a), discretize(CovectorField{g}, a), a)[0];
    const double wb = wedge(discretize(CovectorField{f}, b), discretize(CovectorField{g}, b), b)[0];
    CHECK(wa == doctest::Approx(wb).epsilon(1e-14));
}

TEST_CASE("Leibniz rule for 0-forms")
{
    const auto m = mixed_torus();
    const DecOperators ops(m);
    const auto& d0 = ops.exterior_derivative(0);
    const auto& d1 = ops.exterior_derivative(1);
    const auto a = scalar(m, [](const Vec3& p) { return p.x() * p.y() + p.z(); });
    const auto c = scalar(m, [](const Vec3& p) { return std::exp(p.z()) - p.x(); });
    const auto b = discretize(CovectorField{[](const Vec3& p) { return Vec3(p.z(), 1, p.y()); }}, m);

    const auto lhs0 = d0.apply(wedge(a, c, m));
    const auto rhs0 = wedge(d0.apply(a), c, m) + wedge(a, d0.apply(c), m);
    CHECK((lhs0.values - rhs0.values).cwiseAbs().maxCoeff() < 1e-13);

    const auto lhs1 = d1.apply(wedge(a, b, m));
    const auto rhs1 = wedge(d0.apply(a), b, m) + wedge(a, d1.apply(b), m);
    CHECK((lhs1.values - rhs1.values).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("wedge is not associative, except with constant 0-forms")
{
    const auto m = testing::pentagon();
    const auto b = linear_form(m, {1, 0, 0});
    const auto g = linear_form(m, {0, 1, 0});
    const auto a = scalar(m, [](const Vec3& p) { return p.x() * p.x() + 3 * p.y(); });
    const double left = wedge(wedge(a, b, m), g, m)[0];
    const double right = wedge(a, wedge(b, g, m), m)[0];
    CHECK(std::abs(left - right) > 1e-3);

    const auto c = Cochain::constant(m, 0, 1.7);
    CHECK(wedge(wedge(c, b, m), g, m)[0] == doctest::Approx(wedge(c, wedge(b, g, m), m)[0]));
}

TEST_CASE("Hodge stars on a planar polygon")
{
    const auto m = testing::pentagon();
    const DecOperators ops(m);
    const double area = m.face_geometry(0).area;
    CHECK(ops.hodge_star(0).apply(Cochain::constant(m, 0, 1.0))[0] == doctest::Approx(area));
    const auto one = ops.hodge_star(2).apply(Cochain::constant(m, 2, area));
    CHECK((one.values.array() - 1.0).abs().maxCoeff() < 1e-14);
    // star dx = dy, star dy = -dx for constant forms
    const auto sx = ops.hodge_star(1).apply(linear_form(m, {1, 0, 0}));
    const auto sy = ops.hodge_star(1).apply(linear_form(m, {0, 1, 0}));
    CHECK((sx.values - linear_form(m, {0, 1, 0}).values).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((sy.values + linear_form(m, {1, 0, 0}).values).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("one-face 1-form inner product equals the midpoint mass")
{
    const auto m = testing::pentagon();
    const DecOperators ops(m);
    const Eigen::MatrixXd ours(ops.inner_product(1).matrix);
    const Eigen::MatrixXd aw(ops.inner_product(1, Scheme::AlexaWardetzky).matrix);
    CHECK((ours - aw).cwiseAbs().maxCoeff() < 1e-13);

    const auto two = testing::two_quads();
    const DecOperators ops2(two);
    const Eigen::MatrixXd ours2(ops2.inner_product(1).matrix);
    const Eigen::MatrixXd aw2(ops2.inner_product(1, Scheme::AlexaWardetzky).matrix);
    CHECK((ours2 - aw2).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("0- and 2-form inner products are symmetric positive semidefinite")
{
    const auto m = mixed_torus();
    const DecOperators ops(m);
    for (int k : {0, 2}) {
        const auto& g = ops.inner_product(k).matrix;
        CHECK(asymmetry(g) < 1e-12);
        CHECK(min_eigenvalue(g) > -1e-12);
    }
    for (int k = 0; k < 2; ++k) {
        const auto& g = ops.inner_product(k, Scheme::AlexaWardetzky).matrix;
        CHECK(asymmetry(g) < 1e-12);
        CHECK(min_eigenvalue(g) > -1e-12);
    }
}

TEST_CASE("the 1-form inner product is sum(alpha ^ *beta), not symmetric across faces")
{
    const auto m = testing::two_quads();
    const DecOperators ops(m);
    const auto a = discretize(CovectorField{[](const Vec3& p) { return Vec3(p.y(), 1, 0); }}, m);
    const auto b = discretize(CovectorField{[](const Vec3& p) { return Vec3(1, -p.x() * p.x(), 0); }}, m);
    const double direct = wedge(a, ops.hodge_star(1).apply(b), m).values.sum();
    CHECK(a.values.dot(ops.inner_product(1).matrix * b.values) == doctest::Approx(direct).epsilon(1e-13));
    CHECK(asymmetry(ops.inner_product(1).matrix) > 1e-3);
}

TEST_CASE("the 1-form inner product is symmetric positive semidefinite on a uniform planar grid")
{
    const DecOperators ops(gen_regular(AnalyticSurface::plane(), 6));
    const auto& g = ops.inner_product(1).matrix;
    CHECK(asymmetry(g) < 1e-12);
    CHECK(min_eigenvalue(g) > -1e-12);
}

TEST_CASE("d d = 0 through the cache")
{
    const DecOperators ops(mixed_torus());
    const SparseMatrix dd = ops.exterior_derivative(1).matrix * ops.exterior_derivative(0).matrix;
    CHECK(dd.norm() == 0.0);
    CHECK(&ops.exterior_derivative(0) == &ops.exterior_derivative(0));
    CHECK(kind_of([&] { ops.exterior_derivative(2); }) == ErrorKind::DegreeOverflow);
}

TEST_CASE("contraction and Lie matrices agree with the cochain route")
{
    const auto m = mixed_torus();
    const DecOperators ops(m);
    const auto x = flat(VectorField{[](const Vec3& p) { return Vec3(-p.y(), p.x(), 0); }}, m);
    const auto a = scalar(m, [](const Vec3& p) { return p.x() * p.z(); });
    const auto b = discretize(CovectorField{[](const Vec3& p) { return Vec3(p.z(), -p.x(), p.y()); }}, m);
    const auto w = discretize(TwoFormField{[](const Vec3& p) { return Vec3(1, p.y(), p.x()); }}, m);

    CHECK((ops.contraction_operator(x, 1).apply(b).values - contraction(ops, x, b).values).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((ops.contraction_operator(x, 2).apply(w).values - contraction(ops, x, w).values).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((ops.lie_operator(x, 0).apply(a).values - lie_derivative(ops, x, a).values).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((ops.lie_operator(x, 1).apply(b).values - lie_derivative(ops, x, b).values).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((ops.lie_operator(x, 2).apply(w).values - lie_derivative(ops, x, w).values).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(contraction(ops, x, a).values.norm() == 0.0);
}

TEST_CASE("Lie derivative of a constant vanishes")
{
    const auto m = mixed_torus();
    const DecOperators ops(m);
    const auto x = flat(VectorField{[](const Vec3& p) { return Vec3(p.z(), 1, -p.x()); }}, m);
    CHECK(lie_derivative(ops, x, Cochain::constant(m, 0, 3.0)).values.cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("the comparison scheme rejects unsupported degrees")
{
    const DecOperators ops(testing::unit_square());
    CHECK(kind_of([&] { ops.inner_product(2, Scheme::AlexaWardetzky); }) == ErrorKind::SchemeDegreeUnsupported);
    CHECK(kind_of([&] { ops.codifferential(2, Scheme::AlexaWardetzky); }) == ErrorKind::SchemeDegreeUnsupported);
    CHECK(kind_of([&] { ops.laplacian(1, Scheme::AlexaWardetzky); }) == ErrorKind::SchemeDegreeUnsupported);
}

TEST_CASE("function Laplacian: constants vanish and the sign is minus Laplace-Beltrami")
{
    const auto m = gen_regular(AnalyticSurface::plane(), 10);
    const DecOperators ops(m);
    for (auto scheme : {Scheme::Ours, Scheme::AlexaWardetzky}) {
        const auto& lap = ops.laplacian(0, scheme);
        CHECK(lap.apply(Cochain::constant(m, 0, 2.0)).values.cwiseAbs().maxCoeff() < 1e-12);
        // minus the Laplace-Beltrami operator: x^2 + y^2 maps to -4 inside
        const auto r = lap.apply(scalar(m, [](const Vec3& p) { return p.x() * p.x() + p.y() * p.y(); }));
        for (int v = 0; v < m.num_vertices(); ++v) {
            // away from the first ring, where the boundary terms enter
            const Vec3& p = m.position(v);
            if (std::abs(p.x()) < 0.7 && std::abs(p.y()) < 0.7) CHECK(r[v] == doctest::Approx(-4.0).epsilon(1e-8));
        }
    }
}
