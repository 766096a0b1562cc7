#pragma once

#include <polydec/mesh.hpp>
#include <polydec/surfaces.hpp>

#include <cstdint>

namespace polydec {

///
/// Regular quad meshes: plane -> n x n grid on [-1,1]^2; sphere -> equiangular cube-sphere
/// with 6 n^2 quads; torus -> n (around z) x m (around the tube) grid, m = n when minor == 0.
/// Faces are oriented along the surface normal.
///
PolygonMesh gen_regular(const AnalyticSurface& surface, int resolution, int minor_resolution = 0);

///
/// Moves every vertex by r * (shortest input edge) in a uniformly random tangent direction and
/// projects back to the surface. On the plane, boundary vertices slide along their boundary
/// side and corners stay fixed so the square is preserved. Throws JitterCollapse when a face
/// degenerates or flips against the surface normal.
///
PolygonMesh jitter(const PolygonMesh& mesh, const AnalyticSurface& surface, double r, std::uint64_t seed);

struct UnstructureResult {
    PolygonMesh mesh;
    int requested = 0;
    int removed = 0;
};

///
/// Merges face pairs across randomly ordered interior edges until floor(fraction * |E|) edges
/// are gone or no legal removal remains. A removal is legal when the faces differ and the
/// merged boundary is a simple cycle.
///
UnstructureResult unstructure(const PolygonMesh& mesh, double fraction, std::uint64_t seed);

} // namespace polydec
