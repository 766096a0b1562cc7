#include "support.hpp"

#include <polydec/meshgen.hpp>
#include <polydec/surfaces.hpp>

#include <map>
#include <numbers>

using namespace polydec;
using testing::kind_of;

TEST_CASE("regular meshes have the expected topology")
{
    const auto plane = gen_regular(AnalyticSurface::plane(), 4);
    CHECK(plane.num_vertices() == 25);
    CHECK(plane.num_faces() == 16);
    CHECK(plane.euler_characteristic() == 1);

    const auto sphere = gen_regular(AnalyticSurface::sphere(), 3);
    CHECK(sphere.num_faces() == 54);
    CHECK(sphere.euler_characteristic() == 2);

    const auto torus = gen_regular(AnalyticSurface::torus(), 12, 6);
    CHECK(torus.num_faces() == 72);
    CHECK(torus.euler_characteristic() == 0);
}

TEST_CASE("generated faces follow the surface normal")
{
    for (const auto& s : {AnalyticSurface::plane(), AnalyticSurface::sphere(), AnalyticSurface::torus()}) {
        const auto m = gen_regular(s, 8);
        for (int f = 0; f < m.num_faces(); ++f) {
            const auto& g = m.face_geometry(f);
            CHECK(g.unit_normal.dot(s.normal(g.centroid)) > 0.5);
        }
    }
}

TEST_CASE("jitter r = 0 is the identity")
{
    const auto s = AnalyticSurface::sphere();
    const auto m = gen_regular(s, 5);
    const auto j = jitter(m, s, 0.0, 3);
    for (int v = 0; v < m.num_vertices(); ++v) CHECK((j.position(v) - m.position(v)).norm() < 1e-15);
}

TEST_CASE("jittered sphere vertices stay on the sphere")
{
    const auto s = AnalyticSurface::sphere();
    const auto j = jitter(gen_regular(s, 8), s, 0.4, 11);
    for (const auto& p : j.positions()) CHECK(std::abs(p.norm() - 1.0) < 1e-12);
}

TEST_CASE("jittered plane keeps the square and its corners")
{
    const auto s = AnalyticSurface::plane();
    const auto m = gen_regular(s, 10);
    const auto j = jitter(m, s, 0.4, 5);
    double area = 0.0;
    for (int f = 0; f < j.num_faces(); ++f) area += j.face_geometry(f).area;
    CHECK(area == doctest::Approx(4.0).epsilon(1e-12));
    for (int v = 0; v < m.num_vertices(); ++v) {
        const Vec3& p = m.position(v);
        if (std::abs(std::abs(p.x()) - 1) < 1e-12 && std::abs(std::abs(p.y()) - 1) < 1e-12) {
            CHECK((j.position(v) - p).norm() == 0.0);
        }
        CHECK(j.position(v).z() == 0.0);
    }
}

TEST_CASE("jitter is deterministic in the seed")
{
    const auto s = AnalyticSurface::torus();
    const auto m = gen_regular(s, 10, 6);
    const auto a = jitter(m, s, 0.3, 42), b = jitter(m, s, 0.3, 42), c = jitter(m, s, 0.3, 43);
    CHECK(a.positions() == b.positions());
    CHECK(a.positions() != c.positions());
}

TEST_CASE("unstructure fraction 0 is the identity")
{
    const auto m = gen_regular(AnalyticSurface::plane(), 5);
    const auto r = unstructure(m, 0.0, 1);
    CHECK(r.removed == 0);
    CHECK(r.mesh.num_faces() == m.num_faces());
}

TEST_CASE("unstructure on a 2x2 grid merges one pair into a hexagon")
{
    const auto m = gen_regular(AnalyticSurface::plane(), 2);
    REQUIRE(m.num_edges() == 12);
    const auto r = unstructure(m, 0.1, 3); // floor(1.2) = 1 edge
    CHECK(r.requested == 1);
    CHECK(r.removed == 1);
    CHECK(r.mesh.num_faces() == 3);
    CHECK(r.mesh.num_edges() == 11);
    std::map<int, int> degrees;
    for (int f = 0; f < r.mesh.num_faces(); ++f) ++degrees[r.mesh.face_degree(f)];
    CHECK(degrees == std::map<int, int>{{4, 2}, {6, 1}});
}

TEST_CASE("unstructure preserves Euler characteristic, and planar area")
{
    for (const auto& s : {AnalyticSurface::plane(), AnalyticSurface::sphere(), AnalyticSurface::torus()}) {
        const auto m = gen_regular(s, 16);
        const auto r = unstructure(m, 0.3, 7);
        CHECK(r.removed == r.requested);
        CHECK(r.mesh.euler_characteristic() == m.euler_characteristic());
    }
    const auto r = unstructure(gen_regular(AnalyticSurface::plane(), 16), 0.3, 7);
    double area = 0.0;
    for (int f = 0; f < r.mesh.num_faces(); ++f) area += r.mesh.face_geometry(f).area;
    CHECK(area == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("unstructure on a 64 grid produces mixed degrees")
{
    const auto r = unstructure(gen_regular(AnalyticSurface::plane(), 64), 0.3, 1);
    std::map<int, int> degrees;
    for (int f = 0; f < r.mesh.num_faces(); ++f) ++degrees[r.mesh.face_degree(f)];
    CHECK(degrees.size() >= 3);
    CHECK(degrees.begin()->first >= 4);
}

TEST_CASE("surface projection and area")
{
    const auto torus = AnalyticSurface::torus();
    const Vec3 p = torus.project(Vec3(2.0, 0.1, 0.4));
    CHECK(torus.distance(p) < 1e-12);
    CHECK(torus.area() == doctest::Approx(4 * std::numbers::pi * std::numbers::pi * 0.5));
    CHECK(AnalyticSurface::sphere().integrate([](const Vec3&, const Vec3&) { return 1.0; }) ==
          doctest::Approx(4 * std::numbers::pi).epsilon(1e-12));
    CHECK(kind_of([] { AnalyticSurface::from_name("cube"); }) == ErrorKind::InvalidConfig);
}
