#include "support.hpp"

#include <polydec/cochain.hpp>
#include <polydec/meshgen.hpp>
#include <polydec/operators.hpp>

#include <filesystem>

using namespace polydec;
using testing::kind_of;

TEST_CASE("constant 0-form discretizes to a constant cochain")
{
    const auto m = gen_regular(AnalyticSurface::sphere(), 4);
    const auto c = discretize(ScalarField{[](const Vec3&) { return 2.5; }}, m);
    CHECK(c.degree == 0);
    CHECK((c.values.array() == 2.5).all());
}

TEST_CASE("dx along a diagonal edge")
{
    const auto m = PolygonMesh::build({{0, 0, 0}, {1, 1, 0}, {0, 1, 0}}, {{0, 1, 2}});
    const auto c = discretize(CovectorField{[](const Vec3&) { return Vec3(1, 0, 0); }}, m);
    CHECK(c[m.find_edge(0, 1)] == doctest::Approx(1.0));
    CHECK(c[m.find_edge(1, 2)] == doctest::Approx(-1.0)); // canonical 1 -> 2 runs in -x
}

TEST_CASE("dx^dy over the unit square")
{
    const auto c = discretize(TwoFormField{[](const Vec3&) { return Vec3(0, 0, 1); }}, testing::unit_square());
    CHECK(c[0] == doctest::Approx(1.0));
}

TEST_CASE("flat of a rotation field")
{
    const auto m = PolygonMesh::build({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}, {{0, 1, 2}});
    const auto c = flat(VectorField{[](const Vec3& p) { return Vec3(-p.y(), p.x(), 0); }}, m);
    CHECK(c[m.find_edge(0, 1)] == doctest::Approx(1.0));
}

TEST_CASE("flat scales linearly")
{
    const auto m = jitter(gen_regular(AnalyticSurface::plane(), 6), AnalyticSurface::plane(), 0.3, 2);
    const VectorFn x = [](const Vec3& p) { return Vec3(std::sin(p.y()), p.x() * p.x(), 0); };
    const auto a = flat(VectorField{x}, m);
    const auto b = flat(VectorField{[&](const Vec3& p) { return Vec3(-3.0 * x(p)); }}, m);
    CHECK((b.values + 3.0 * a.values).norm() < 1e-13);
}

TEST_CASE("d0 of a sampled polynomial equals the integrated differential")
{
    const auto m = unstructure(gen_regular(AnalyticSurface::plane(), 8), 0.3, 4).mesh;
    const ScalarFn f = [](const Vec3& p) { return p.x() * p.x() * p.y() - 2 * p.y() + 1; };
    const VectorFn df = [](const Vec3& p) { return Vec3(2 * p.x() * p.y(), p.x() * p.x() - 2, 0); };
    const Vector lhs = assembly::d0(m) * discretize(ScalarField{f}, m).values;
    const Vector rhs = discretize(CovectorField{df}, m).values;
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("sharp is exact for constant fields on rectangles")
{
    const auto m = gen_regular(AnalyticSurface::plane(), 5);
    const Vec3 x(0.3, -1.2, 0);
    const auto s = sharp(flat(VectorField{[&](const Vec3&) { return x; }}, m), m);
    for (const auto& v : s) CHECK((v - x).norm() < 1e-13);
}

TEST_CASE("error norms")
{
    const auto m = testing::unit_square();
    Cochain a = Cochain::zero(m, 1), b = Cochain::zero(m, 1);
    a.values[0] = 1.0;
    const auto n1 = error_norms(a, b, m);
    CHECK(n1.linf == 1.0);
    CHECK(n1.l2 == doctest::Approx(0.5));

    Cochain f = Cochain::constant(m, 2, -0.7);
    const auto n2 = error_norms(f, Cochain::zero(m, 2), m);
    CHECK(n2.l2 == doctest::Approx(0.7));
    CHECK(n2.linf == doctest::Approx(0.7));

    CHECK(kind_of([&] { error_norms(a, f, m); }) == ErrorKind::DegreeMismatch);
}

TEST_CASE("interior mask drops cells touching the boundary")
{
    const auto m = gen_regular(AnalyticSurface::plane(), 4);
    const auto keep = interior_cells(m, 2);
    CHECK(std::count(keep.begin(), keep.end(), true) == 4);
    const auto t = gen_regular(AnalyticSurface::torus(), 6, 4);
    const auto all = interior_cells(t, 1);
    CHECK(std::count(all.begin(), all.end(), true) == t.num_edges());
}

TEST_CASE("degree and length checks")
{
    const auto m = testing::unit_square();
    CHECK(kind_of([&] { discretize(AnalyticField{ScalarField{[](const Vec3&) { return 0.0; }}}, m, 1); }) ==
          ErrorKind::DegreeMismatch);
    CHECK(kind_of([&] { check_cochain(m, Cochain{1, Vector::Zero(3)}); }) == ErrorKind::DimensionMismatch);
    CHECK(kind_of([&] { Cochain::zero(m, 0) + Cochain::zero(m, 1); }) == ErrorKind::DegreeMismatch);
}

TEST_CASE("cochain CSV round trip")
{
    const auto m = gen_regular(AnalyticSurface::torus(), 6, 4);
    Cochain c = discretize(CovectorField{[](const Vec3& p) { return Vec3(p.z(), std::exp(p.x()), 1.0 / 3); }}, m);
    const auto path = std::filesystem::temp_directory_path() / "polydec_cochain.csv";
    write_cochain_csv(c, path);
    const auto r = read_cochain_csv(path, 1);
    CHECK(r.degree == 1);
    CHECK(r.values == c.values);
    std::filesystem::remove(path);
}
