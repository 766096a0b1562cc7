#include <polydec/error.hpp>
#include <polydec/mesh_io.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace polydec {

PolygonMesh read_obj(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());

    std::vector<Vec3> positions;
    std::vector<std::vector<int>> faces;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "v") {
            Vec3 p;
            if (!(ls >> p.x() >> p.y() >> p.z())) throw Error(ErrorKind::Io, "bad vertex record: " + line);
            positions.push_back(p);
        } else if (tag == "f") {
            std::vector<int> face;
            std::string token;
            while (ls >> token) {
                const int idx = std::stoi(token.substr(0, token.find('/')));
                face.push_back(idx < 0 ? static_cast<int>(positions.size()) + idx : idx - 1);
            }
            faces.push_back(std::move(face));
        }
    }
    return PolygonMesh::build(std::move(positions), faces);
}

void write_obj(const PolygonMesh& mesh, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out.precision(17);
    for (const auto& p : mesh.positions()) out << "v " << p.x() << ' ' << p.y() << ' ' << p.z() << '\n';
    for (int f = 0; f < mesh.num_faces(); ++f) {
        out << 'f';
        for (int v : mesh.face(f)) out << ' ' << v + 1;
        out << '\n';
    }
}

void write_ply(const PolygonMesh& mesh, const std::filesystem::path& path, const PlyVertexData& data)
{
    const auto nv = static_cast<std::size_t>(mesh.num_vertices());
    const bool has_scalar = !data.scalars.empty();
    const bool has_vector = !data.vectors.empty();
    if ((has_scalar && data.scalars.size() != nv) || (has_vector && data.vectors.size() != nv)) {
        throw Error(ErrorKind::DimensionMismatch, "PLY vertex property length does not match vertex count");
    }

    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << "ply\nformat ascii 1.0\n";
    out << "element vertex " << nv << "\n";
    out << "property double x\nproperty double y\nproperty double z\n";
    if (has_scalar) {
        out << "property double " << data.scalar_name << "\n";
        out << "property uchar red\nproperty uchar green\nproperty uchar blue\n";
    }
    if (has_vector) {
        out << "property double " << data.vector_name << "_x\n";
        out << "property double " << data.vector_name << "_y\n";
        out << "property double " << data.vector_name << "_z\n";
    }
    out << "element face " << mesh.num_faces() << "\n";
    out << "property list uchar int vertex_indices\nend_header\n";

    double lo = 0.0, hi = 1.0;
    if (has_scalar) {
        const auto [mn, mx] = std::minmax_element(data.scalars.begin(), data.scalars.end());
        lo = *mn;
        hi = *mx > *mn ? *mx : *mn + 1.0;
    }

    out.precision(17);
    for (std::size_t v = 0; v < nv; ++v) {
        const auto& p = mesh.position(static_cast<int>(v));
        out << p.x() << ' ' << p.y() << ' ' << p.z();
        if (has_scalar) {
            // blue -> white -> red ramp
            const double s = std::clamp((data.scalars[v] - lo) / (hi - lo), 0.0, 1.0);
            const auto to_byte = [](double c) { return static_cast<int>(std::lround(255.0 * c)); };
            const double r = s < 0.5 ? 2.0 * s : 1.0;
            const double b = s < 0.5 ? 1.0 : 2.0 * (1.0 - s);
            const double g = std::min(r, b);
            out << ' ' << data.scalars[v] << ' ' << to_byte(r) << ' ' << to_byte(g) << ' ' << to_byte(b);
        }
        if (has_vector) {
            const auto& x = data.vectors[v];
            out << ' ' << x.x() << ' ' << x.y() << ' ' << x.z();
        }
        out << '\n';
    }
    for (int f = 0; f < mesh.num_faces(); ++f) {
        out << mesh.face_degree(f);
        for (int v : mesh.face(f)) out << ' ' << v;
        out << '\n';
    }
}

} // namespace polydec
