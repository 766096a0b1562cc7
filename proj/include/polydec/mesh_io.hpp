#pragma once

#include <polydec/mesh.hpp>

#include <filesystem>
#include <optional>
#include <span>
#include <string>

namespace polydec {

/// Reads `v` and `f` records; `f` may have any arity and `a/b/c` tokens (texture and normal
/// references are ignored). Negative indices are resolved relative to the current vertex count.
PolygonMesh read_obj(const std::filesystem::path& path);
void write_obj(const PolygonMesh& mesh, const std::filesystem::path& path);

struct PlyVertexData {
    std::string scalar_name = "value";
    std::span<const double> scalars;      ///< optional, one per vertex; also emitted as a color ramp
    std::string vector_name = "field";
    std::span<const Vec3> vectors;        ///< optional, one per vertex
};

/// ASCII PLY with polygonal faces and optional per-vertex scalar/vector properties.
void write_ply(const PolygonMesh& mesh, const std::filesystem::path& path, const PlyVertexData& data = {});

} // namespace polydec
