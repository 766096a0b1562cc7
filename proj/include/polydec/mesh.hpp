#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace polydec {

using Vec3 = Eigen::Vector3d;

/// A face-oriented instance of an edge: slot j of face f runs from v_j to v_{j+1}.
struct Halfedge {
    int edge = -1;
    int sign = 0; ///< [f:e], +1 when the slot direction agrees with the edge's canonical one
};

struct FaceGeometry {
    Vec3 vector_area = Vec3::Zero(); ///< 1/2 sum v_j x v_{j+1}
    double area = 0.0;
    Vec3 centroid = Vec3::Zero();
    Vec3 unit_normal = Vec3::Zero();
};

FaceGeometry compute_face_geometry(std::span<const Vec3> polygon);

struct MeshSpacing {
    double mean = 0.0;
    double min = 0.0;
};

///
/// Manifold polygonal surface (possibly with boundary). Edges are stored with the canonical
/// orientation lower -> higher vertex index; each face owns one halfedge per boundary slot.
/// Immutable after construction.
///
class PolygonMesh {
public:
    static PolygonMesh build(std::vector<Vec3> positions, const std::vector<std::vector<int>>& faces);

    /// Same connectivity, new vertex positions. Geometry is recomputed.
    PolygonMesh with_positions(std::vector<Vec3> positions) const;

    int num_vertices() const { return static_cast<int>(positions_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_faces() const { return static_cast<int>(face_offsets_.size()) - 1; }
    int num_halfedges() const { return static_cast<int>(halfedges_.size()); }
    int num_cells(int degree) const;
    int euler_characteristic() const { return num_vertices() - num_edges() + num_faces(); }

    const std::vector<Vec3>& positions() const { return positions_; }
    const Vec3& position(int v) const { return positions_[v]; }

    std::span<const int> face(int f) const;
    int face_degree(int f) const { return face_offsets_[f + 1] - face_offsets_[f]; }
    /// Global index of the halfedge in slot 0 of face f; slots are contiguous.
    int halfedge_offset(int f) const { return face_offsets_[f]; }
    std::span<const Halfedge> face_halfedges(int f) const;
    const Halfedge& halfedge(int h) const { return halfedges_[h]; }
    int halfedge_face(int h) const { return halfedge_face_[h]; }

    const std::array<int, 2>& edge(int e) const { return edges_[e]; }
    /// One or two global halfedge indices.
    std::span<const int> edge_halfedges(int e) const;
    bool is_boundary_edge(int e) const { return edge_halfedges_[e][1] < 0; }
    /// -1 if the two vertices share no edge.
    int find_edge(int a, int b) const;

    std::span<const int> vertex_faces(int v) const;
    bool is_boundary_vertex(int v) const { return boundary_vertex_[v]; }

    /// [f:e] in {+1, -1, 0}.
    int incidence(int f, int e) const;

    /// Throws ZeroArea for faces with vector area below area_epsilon().
    const FaceGeometry& face_geometry(int f) const;
    const FaceGeometry& face_geometry_unchecked(int f) const { return geometry_[f]; }
    bool is_degenerate(int f) const { return geometry_[f].area < area_epsilon_; }
    double area_epsilon() const { return area_epsilon_; }
    double bounding_box_diagonal() const { return bbox_diagonal_; }

    /// Unique per built mesh; used to key operator caches.
    std::uint64_t id() const { return id_; }

private:
    PolygonMesh() = default;
    void compute_geometry();

    std::vector<Vec3> positions_;
    std::vector<int> face_offsets_{0};
    std::vector<int> face_vertices_;
    std::vector<Halfedge> halfedges_;
    std::vector<int> halfedge_face_;
    std::vector<std::array<int, 2>> edges_;
    std::vector<std::array<int, 2>> edge_halfedges_;
    std::vector<int> vertex_face_offsets_;
    std::vector<int> vertex_face_list_;
    std::vector<bool> boundary_vertex_;
    std::vector<FaceGeometry> geometry_;
    double area_epsilon_ = 0.0;
    double bbox_diagonal_ = 0.0;
    std::uint64_t id_ = 0;
};

/// Mean and shortest edge length. Throws EmptyMesh without edges.
MeshSpacing mesh_spacing(const PolygonMesh& mesh);

} // namespace polydec
