#include <polydec/error.hpp>
#include <polydec/mesh.hpp>

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <unordered_map>

namespace polydec {

namespace {

std::uint64_t next_mesh_id()
{
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
}

std::uint64_t edge_key(int a, int b)
{
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

} // namespace

FaceGeometry compute_face_geometry(std::span<const Vec3> polygon)
{
    FaceGeometry g;
    const auto p = polygon.size();
    for (std::size_t j = 0; j < p; ++j) {
        g.vector_area += polygon[j].cross(polygon[(j + 1) % p]);
        g.centroid += polygon[j];
    }
    g.vector_area *= 0.5;
    g.centroid /= static_cast<double>(p);
    g.area = g.vector_area.norm();
    if (g.area > 0.0) g.unit_normal = g.vector_area / g.area;
    return g;
}

PolygonMesh PolygonMesh::build(std::vector<Vec3> positions, const std::vector<std::vector<int>>& faces)
{
    PolygonMesh mesh;
    mesh.positions_ = std::move(positions);
    const int nv = mesh.num_vertices();

    std::unordered_map<std::uint64_t, int> edge_index;
    edge_index.reserve(faces.size() * 4);

    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& verts = faces[f];
        const int p = static_cast<int>(verts.size());
        if (p < 3) {
            throw Error(ErrorKind::DegenerateFace, "face " + std::to_string(f) + " has fewer than 3 vertices");
        }
        for (int v : verts) {
            if (v < 0 || v >= nv) {
                throw Error(ErrorKind::IndexOutOfRange, "face " + std::to_string(f) + " references vertex " + std::to_string(v));
            }
        }
        std::vector<int> sorted(verts);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw Error(ErrorKind::DegenerateFace, "face " + std::to_string(f) + " repeats a vertex");
        }

        for (int j = 0; j < p; ++j) {
            const int a = verts[j];
            const int b = verts[(j + 1) % p];
            const int h = static_cast<int>(mesh.halfedges_.size());
            auto [it, inserted] = edge_index.try_emplace(edge_key(a, b), mesh.num_edges());
            if (inserted) {
                mesh.edges_.push_back({std::min(a, b), std::max(a, b)});
                mesh.edge_halfedges_.push_back({h, -1});
            } else {
                auto& slots = mesh.edge_halfedges_[it->second];
                if (slots[1] >= 0) {
                    throw Error(ErrorKind::NonManifoldEdge, "edge (" + std::to_string(a) + "," + std::to_string(b) + ") has more than two faces");
                }
                slots[1] = h;
            }
            mesh.halfedges_.push_back({it->second, a < b ? 1 : -1});
            mesh.halfedge_face_.push_back(static_cast<int>(f));
            mesh.face_vertices_.push_back(a);
        }
        mesh.face_offsets_.push_back(static_cast<int>(mesh.face_vertices_.size()));
    }

    for (int e = 0; e < mesh.num_edges(); ++e) {
        const auto& slots = mesh.edge_halfedges_[e];
        if (slots[1] >= 0 && mesh.halfedges_[slots[0]].sign == mesh.halfedges_[slots[1]].sign) {
            throw Error(ErrorKind::NonManifoldEdge, "edge " + std::to_string(e) + " is traversed in the same direction by both faces");
        }
    }

    // vertex -> faces (CSR), ordered by face index
    std::vector<int> counts(nv + 1, 0);
    for (int v : mesh.face_vertices_) ++counts[v + 1];
    for (int v = 0; v < nv; ++v) counts[v + 1] += counts[v];
    mesh.vertex_face_offsets_ = counts;
    mesh.vertex_face_list_.resize(mesh.face_vertices_.size());
    std::vector<int> cursor(counts.begin(), counts.end() - 1);
    for (int f = 0; f < mesh.num_faces(); ++f) {
        for (int v : mesh.face(f)) mesh.vertex_face_list_[cursor[v]++] = f;
    }

    mesh.boundary_vertex_.assign(nv, false);
    for (int e = 0; e < mesh.num_edges(); ++e) {
        if (mesh.is_boundary_edge(e)) {
            mesh.boundary_vertex_[mesh.edges_[e][0]] = true;
            mesh.boundary_vertex_[mesh.edges_[e][1]] = true;
        }
    }

    mesh.compute_geometry();
    return mesh;
}

PolygonMesh PolygonMesh::with_positions(std::vector<Vec3> positions) const
{
    if (static_cast<int>(positions.size()) != num_vertices()) {
        throw Error(ErrorKind::DimensionMismatch, "position count does not match vertex count");
    }
    PolygonMesh copy = *this;
    copy.positions_ = std::move(positions);
    copy.compute_geometry();
    return copy;
}

void PolygonMesh::compute_geometry()
{
    id_ = next_mesh_id();
    if (!positions_.empty()) {
        Vec3 lo = positions_.front();
        Vec3 hi = lo;
        for (const auto& x : positions_) {
            lo = lo.cwiseMin(x);
            hi = hi.cwiseMax(x);
        }
        bbox_diagonal_ = (hi - lo).norm();
    }
    area_epsilon_ = 1e-12 * bbox_diagonal_ * bbox_diagonal_;

    geometry_.resize(num_faces());
    std::vector<Vec3> polygon;
    for (int f = 0; f < num_faces(); ++f) {
        polygon.clear();
        for (int v : face(f)) polygon.push_back(positions_[v]);
        geometry_[f] = compute_face_geometry(polygon);
    }
}

int PolygonMesh::num_cells(int degree) const
{
    switch (degree) {
    case 0: return num_vertices();
    case 1: return num_edges();
    case 2: return num_faces();
    default: throw Error(ErrorKind::DegreeOverflow, "cell degree " + std::to_string(degree));
    }
}

std::span<const int> PolygonMesh::face(int f) const
{
    return {face_vertices_.data() + face_offsets_[f], static_cast<std::size_t>(face_degree(f))};
}

std::span<const Halfedge> PolygonMesh::face_halfedges(int f) const
{
    return {halfedges_.data() + face_offsets_[f], static_cast<std::size_t>(face_degree(f))};
}

std::span<const int> PolygonMesh::edge_halfedges(int e) const
{
    return {edge_halfedges_[e].data(), is_boundary_edge(e) ? 1u : 2u};
}

int PolygonMesh::find_edge(int a, int b) const
{
    if (a < 0 || b < 0 || a >= num_vertices() || b >= num_vertices()) return -1;
    for (int f : vertex_faces(a)) {
        for (const auto& he : face_halfedges(f)) {
            const auto& ev = edges_[he.edge];
            if (ev[0] == std::min(a, b) && ev[1] == std::max(a, b)) return he.edge;
        }
    }
    return -1;
}

std::span<const int> PolygonMesh::vertex_faces(int v) const
{
    return {vertex_face_list_.data() + vertex_face_offsets_[v],
            static_cast<std::size_t>(vertex_face_offsets_[v + 1] - vertex_face_offsets_[v])};
}

int PolygonMesh::incidence(int f, int e) const
{
    if (f < 0 || f >= num_faces() || e < 0 || e >= num_edges()) {
        throw Error(ErrorKind::IndexOutOfRange, "incidence(" + std::to_string(f) + "," + std::to_string(e) + ")");
    }
    for (const auto& he : face_halfedges(f)) {
        if (he.edge == e) return he.sign;
    }
    return 0;
}

const FaceGeometry& PolygonMesh::face_geometry(int f) const
{
    if (f < 0 || f >= num_faces()) {
        throw Error(ErrorKind::IndexOutOfRange, "face " + std::to_string(f));
    }
    if (is_degenerate(f)) {
        throw Error(ErrorKind::ZeroArea, "face " + std::to_string(f) + " has vector area below threshold");
    }
    return geometry_[f];
}

MeshSpacing mesh_spacing(const PolygonMesh& mesh)
{
    if (mesh.num_edges() == 0) throw Error(ErrorKind::EmptyMesh, "mesh has no edges");
    MeshSpacing s;
    s.min = std::numeric_limits<double>::infinity();
    for (int e = 0; e < mesh.num_edges(); ++e) {
        const auto& [a, b] = mesh.edge(e);
        const double len = (mesh.position(b) - mesh.position(a)).norm();
        s.mean += len;
        s.min = std::min(s.min, len);
    }
    s.mean /= mesh.num_edges();
    return s;
}

} // namespace polydec
