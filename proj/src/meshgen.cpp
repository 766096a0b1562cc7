#include <polydec/error.hpp>
#include <polydec/meshgen.hpp>
#include <polydec/rng.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <unordered_map>

namespace polydec {

namespace {

constexpr double pi = std::numbers::pi;

/// Reverses faces whose vector area points against the surface normal at the centroid.
void orient_along_normal(const AnalyticSurface& surface, const std::vector<Vec3>& positions,
                         std::vector<std::vector<int>>& faces)
{
    std::vector<Vec3> polygon;
    for (auto& face : faces) {
        polygon.clear();
        for (int v : face) polygon.push_back(positions[v]);
        const auto g = compute_face_geometry(polygon);
        if (g.vector_area.dot(surface.normal(g.centroid)) < 0.0) std::reverse(face.begin(), face.end());
    }
}

PolygonMesh plane_grid(int n)
{
    std::vector<Vec3> positions;
    std::vector<std::vector<int>> faces;
    const auto id = [n](int i, int j) { return j * (n + 1) + i; };
    for (int j = 0; j <= n; ++j) {
        for (int i = 0; i <= n; ++i) positions.emplace_back(-1.0 + 2.0 * i / n, -1.0 + 2.0 * j / n, 0.0);
    }
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
    }
    return PolygonMesh::build(std::move(positions), faces);
}

PolygonMesh cube_sphere(int n)
{
    // lattice points on the cube surface, keyed by integer coordinates in [0, n]^3
    std::map<std::array<int, 3>, int> index;
    std::vector<Vec3> positions;
    const auto vertex = [&](std::array<int, 3> key) {
        auto [it, inserted] = index.try_emplace(key, static_cast<int>(positions.size()));
        if (inserted) {
            Vec3 c;
            for (int k = 0; k < 3; ++k) c[k] = std::tan(pi / 4.0 * (2.0 * key[k] / n - 1.0));
            positions.push_back(c.normalized());
        }
        return it->second;
    };

    std::vector<std::vector<int>> faces;
    for (int axis = 0; axis < 3; ++axis) {
        const int a = (axis + 1) % 3, b = (axis + 2) % 3;
        for (int side : {0, n}) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    std::vector<int> face;
                    for (auto [di, dj] : {std::pair{0, 0}, {1, 0}, {1, 1}, {0, 1}}) {
                        std::array<int, 3> key{};
                        key[axis] = side;
                        key[a] = i + di;
                        key[b] = j + dj;
                        face.push_back(vertex(key));
                    }
                    faces.push_back(std::move(face));
                }
            }
        }
    }
    orient_along_normal(AnalyticSurface::sphere(), positions, faces);
    return PolygonMesh::build(std::move(positions), faces);
}

PolygonMesh torus_grid(const AnalyticSurface& surface, int n, int m)
{
    const double R = surface.major_radius(), r = surface.minor_radius();
    std::vector<Vec3> positions;
    std::vector<std::vector<int>> faces;
    const auto id = [n, m](int i, int j) { return (j % m) * n + (i % n); };
    for (int j = 0; j < m; ++j) {
        const double v = 2.0 * pi * j / m;
        for (int i = 0; i < n; ++i) {
            const double u = 2.0 * pi * i / n;
            positions.emplace_back((R + r * std::cos(v)) * std::cos(u), (R + r * std::cos(v)) * std::sin(u), r * std::sin(v));
        }
    }
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < n; ++i) faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
    }
    orient_along_normal(surface, positions, faces);
    return PolygonMesh::build(std::move(positions), faces);
}

} // namespace

PolygonMesh gen_regular(const AnalyticSurface& surface, int resolution, int minor_resolution)
{
    if (resolution < 2) throw Error(ErrorKind::InvalidConfig, "resolution must be at least 2");
    switch (surface.kind()) {
    case SurfaceKind::Plane: return plane_grid(resolution);
    case SurfaceKind::Sphere: return cube_sphere(resolution);
    case SurfaceKind::Torus: {
        const int m = minor_resolution > 0 ? minor_resolution : resolution;
        if (resolution < 3 || m < 3) throw Error(ErrorKind::InvalidConfig, "torus grid needs at least 3 x 3 cells");
        return torus_grid(surface, resolution, m);
    }
    }
    throw Error(ErrorKind::InvalidConfig, "unknown surface");
}

PolygonMesh jitter(const PolygonMesh& mesh, const AnalyticSurface& surface, double r, std::uint64_t seed)
{
    if (!(r >= 0.0)) throw Error(ErrorKind::InvalidConfig, "jitter radius must be nonnegative");
    const double distance = r * mesh_spacing(mesh).min;
    Rng rng(seed);

    std::vector<Vec3> positions = mesh.positions();
    for (auto& p : positions) {
        // draw unconditionally so the stream does not depend on which vertices are constrained
        const double angle = rng.uniform(0.0, 2.0 * pi);
        if (distance == 0.0) continue;
        Vec3 direction;
        if (surface.kind() == SurfaceKind::Plane) {
            constexpr double tol = 1e-12;
            const bool on_x = std::abs(std::abs(p.x()) - 1.0) < tol;
            const bool on_y = std::abs(std::abs(p.y()) - 1.0) < tol;
            if (on_x && on_y) continue;
            if (on_x) direction = Vec3(0.0, std::cos(angle) >= 0.0 ? 1.0 : -1.0, 0.0);
            else if (on_y) direction = Vec3(std::cos(angle) >= 0.0 ? 1.0 : -1.0, 0.0, 0.0);
            else direction = Vec3(std::cos(angle), std::sin(angle), 0.0);
        } else {
            const auto [t1, t2] = surface.tangent_basis(p);
            direction = std::cos(angle) * t1 + std::sin(angle) * t2;
        }
        p = surface.project(p + distance * direction);
    }

    PolygonMesh out = mesh.with_positions(std::move(positions));
    for (int f = 0; f < out.num_faces(); ++f) {
        const auto& g = out.face_geometry_unchecked(f);
        if (out.is_degenerate(f) || g.vector_area.dot(surface.normal(g.centroid)) <= 0.0) {
            throw Error(ErrorKind::JitterCollapse, "face " + std::to_string(f) + " collapsed");
        }
    }
    return out;
}

UnstructureResult unstructure(const PolygonMesh& mesh, double fraction, std::uint64_t seed)
{
    if (!(fraction >= 0.0 && fraction < 1.0)) throw Error(ErrorKind::InvalidConfig, "fraction must lie in [0, 1)");

    std::vector<std::vector<int>> faces(mesh.num_faces());
    for (int f = 0; f < mesh.num_faces(); ++f) faces[f].assign(mesh.face(f).begin(), mesh.face(f).end());
    std::vector<bool> alive(faces.size(), true);

    // directed halfedge (a -> b) -> owning face
    const auto key = [](int a, int b) { return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b); };
    std::unordered_map<std::uint64_t, int> owner;
    owner.reserve(mesh.num_halfedges());
    for (int f = 0; f < mesh.num_faces(); ++f) {
        const auto& fv = faces[f];
        for (std::size_t j = 0; j < fv.size(); ++j) owner[key(fv[j], fv[(j + 1) % fv.size()])] = f;
    }

    std::vector<int> candidates;
    for (int e = 0; e < mesh.num_edges(); ++e) {
        if (!mesh.is_boundary_edge(e)) candidates.push_back(e);
    }
    Rng rng(seed);
    rng.shuffle(candidates);

    UnstructureResult result{mesh, static_cast<int>(std::floor(fraction * mesh.num_edges())), 0};
    std::vector<int> merged;
    for (int e : candidates) {
        if (result.removed >= result.requested) break;
        auto [a, b] = mesh.edge(e);
        auto it_ab = owner.find(key(a, b));
        auto it_ba = owner.find(key(b, a));
        if (it_ab == owner.end() || it_ba == owner.end()) continue;
        const int f1 = it_ab->second, f2 = it_ba->second;
        if (f1 == f2) continue;

        const auto& c1 = faces[f1];
        const auto& c2 = faces[f2];
        const auto p1 = c1.size(), p2 = c2.size();
        const auto pos1 = static_cast<std::size_t>(std::find(c1.begin(), c1.end(), b) - c1.begin());
        const auto pos2 = static_cast<std::size_t>(std::find(c2.begin(), c2.end(), a) - c2.begin());
        // f1 from b around to a, then f2 strictly between a and b
        merged.clear();
        for (std::size_t k = 0; k < p1; ++k) merged.push_back(c1[(pos1 + k) % p1]);
        for (std::size_t k = 1; k + 1 < p2; ++k) merged.push_back(c2[(pos2 + k) % p2]);

        std::vector<int> sorted(merged);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;

        owner.erase(it_ab);
        owner.erase(key(b, a));
        faces[f1] = merged;
        for (std::size_t j = 0; j < merged.size(); ++j) owner[key(merged[j], merged[(j + 1) % merged.size()])] = f1;
        alive[f2] = false;
        faces[f2].clear();
        ++result.removed;
    }

    std::vector<std::vector<int>> kept;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (alive[f]) kept.push_back(std::move(faces[f]));
    }
    result.mesh = PolygonMesh::build(mesh.positions(), kept);
    return result;
}

} // namespace polydec
