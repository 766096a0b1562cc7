#include <polydec/cochain.hpp>
#include <polydec/error.hpp>
#include <polydec/operators.hpp>
#include <polydec/quadrature.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

namespace polydec {

int field_degree(const AnalyticField& field)
{
    return static_cast<int>(field.index());
}

Cochain Cochain::zero(const PolygonMesh& mesh, int degree)
{
    return {degree, Vector::Zero(mesh.num_cells(degree))};
}

Cochain Cochain::constant(const PolygonMesh& mesh, int degree, double value)
{
    return {degree, Vector::Constant(mesh.num_cells(degree), value)};
}

Cochain& Cochain::operator+=(const Cochain& other)
{
    if (degree != other.degree) throw Error(ErrorKind::DegreeMismatch, "adding cochains of different degree");
    if (size() != other.size()) throw Error(ErrorKind::DimensionMismatch, "adding cochains of different length");
    values += other.values;
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& other)
{
    if (degree != other.degree) throw Error(ErrorKind::DegreeMismatch, "subtracting cochains of different degree");
    if (size() != other.size()) throw Error(ErrorKind::DimensionMismatch, "subtracting cochains of different length");
    values -= other.values;
    return *this;
}

Cochain& Cochain::operator*=(double s)
{
    values *= s;
    return *this;
}

Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
Cochain operator*(double s, Cochain a) { return a *= s; }

void check_cochain(const PolygonMesh& mesh, const Cochain& c)
{
    if (c.degree < 0 || c.degree > 2) throw Error(ErrorKind::DegreeOverflow, "cochain degree " + std::to_string(c.degree));
    if (c.size() != mesh.num_cells(c.degree)) {
        throw Error(ErrorKind::DimensionMismatch, "cochain of degree " + std::to_string(c.degree) + " has length " +
                                                      std::to_string(c.size()) + ", mesh has " +
                                                      std::to_string(mesh.num_cells(c.degree)) + " cells");
    }
}

Cochain discretize(const ScalarField& field, const PolygonMesh& mesh, const QuadratureOptions&)
{
    Cochain c = Cochain::zero(mesh, 0);
    for (int v = 0; v < mesh.num_vertices(); ++v) c.values[v] = field.value(mesh.position(v));
    return c;
}

Cochain discretize(const CovectorField& field, const PolygonMesh& mesh, const QuadratureOptions& quad)
{
    const auto rule = gauss_legendre(quad.edge_points);
    Cochain c = Cochain::zero(mesh, 1);
    for (int e = 0; e < mesh.num_edges(); ++e) {
        const auto& [a, b] = mesh.edge(e);
        const Vec3& p0 = mesh.position(a);
        const Vec3 tangent = mesh.position(b) - p0;
        double sum = 0.0;
        for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
            sum += rule.weights[q] * field.components(p0 + rule.nodes[q] * tangent).dot(tangent);
        }
        c.values[e] = sum;
    }
    return c;
}

Cochain discretize(const TwoFormField& field, const PolygonMesh& mesh, const QuadratureOptions& quad)
{
    const auto rule = triangle_rule(quad.triangle_degree);
    Cochain c = Cochain::zero(mesh, 2);
    for (int f = 0; f < mesh.num_faces(); ++f) {
        const auto verts = mesh.face(f);
        const Vec3& center = mesh.face_geometry_unchecked(f).centroid;
        const auto p = verts.size();
        double sum = 0.0;
        for (std::size_t i = 0; i < p; ++i) {
            const Vec3& a = mesh.position(verts[i]);
            const Vec3& b = mesh.position(verts[(i + 1) % p]);
            const Vec3 vector_area = 0.5 * (a - center).cross(b - center);
            for (std::size_t q = 0; q < rule.points.size(); ++q) {
                const auto& bary = rule.points[q];
                const Vec3 x = bary[0] * center + bary[1] * a + bary[2] * b;
                sum += rule.weights[q] * field.flux(x).dot(vector_area);
            }
        }
        c.values[f] = sum;
    }
    return c;
}

Cochain discretize(const AnalyticField& field, const PolygonMesh& mesh, int degree, const QuadratureOptions& quad)
{
    if (field_degree(field) != degree) {
        throw Error(ErrorKind::DegreeMismatch, "field of degree " + std::to_string(field_degree(field)) +
                                                   " requested as degree " + std::to_string(degree));
    }
    return std::visit([&](const auto& f) { return discretize(f, mesh, quad); }, field);
}

Cochain flat(const VectorField& x, const PolygonMesh& mesh, int edge_points)
{
    return discretize(CovectorField{x.value}, mesh, QuadratureOptions{edge_points, 4});
}

std::vector<Vec3> sharp(const Cochain& beta, const PolygonMesh& mesh)
{
    if (beta.degree != 1) throw Error(ErrorKind::DegreeMismatch, "sharp expects a 1-cochain");
    check_cochain(mesh, beta);

    std::vector<Vec3> out(mesh.num_vertices(), Vec3::Zero());
    std::vector<int> count(mesh.num_vertices(), 0);
    for (int f = 0; f < mesh.num_faces(); ++f) {
        const Vec3& n = mesh.face_geometry(f).unit_normal;
        const auto verts = mesh.face(f);
        const auto hes = mesh.face_halfedges(f);
        const int p = static_cast<int>(verts.size());
        for (int j = 0; j < p; ++j) {
            const int prev = (j + p - 1) % p;
            const Vec3 e1 = mesh.position(verts[j]) - mesh.position(verts[prev]);
            const Vec3 e2 = mesh.position(verts[(j + 1) % p]) - mesh.position(verts[j]);
            const double b1 = hes[prev].sign * beta.values[hes[prev].edge];
            const double b2 = hes[j].sign * beta.values[hes[j].edge];
            const double l1 = e1.norm(), l2 = e2.norm();
            out[verts[j]] += (b2 / l2) * n.cross(e1) / l1 - (b1 / l1) * n.cross(e2) / l2;
            ++count[verts[j]];
        }
    }
    for (int v = 0; v < mesh.num_vertices(); ++v) {
        if (count[v] == 0) throw Error(ErrorKind::IsolatedVertex, "vertex " + std::to_string(v) + " has no faces");
        out[v] /= count[v];
    }
    return out;
}

ErrorNorms error_norms(const Cochain& xi, const Cochain& reference, const PolygonMesh& mesh)
{
    return error_norms(xi, reference, mesh, std::vector<bool>(xi.size(), true));
}

ErrorNorms error_norms(const Cochain& xi, const Cochain& reference, const PolygonMesh& mesh, const std::vector<bool>& keep)
{
    if (xi.degree != reference.degree) throw Error(ErrorKind::DegreeMismatch, "error_norms: cochain degrees differ");
    check_cochain(mesh, xi);
    check_cochain(mesh, reference);
    if (static_cast<Eigen::Index>(keep.size()) != xi.size()) throw Error(ErrorKind::DimensionMismatch, "error_norms: mask length");

    Vector diff = xi.values - reference.values;
    for (Eigen::Index i = 0; i < diff.size(); ++i) {
        if (!keep[i]) diff[i] = 0.0;
    }
    ErrorNorms norms;
    norms.linf = diff.size() > 0 ? diff.cwiseAbs().maxCoeff() : 0.0;
    double quad = 0.0;
    switch (xi.degree) {
    case 0: quad = diff.dot(assembly::vertex_mass_aw(mesh).cwiseProduct(diff)); break;
    case 1: quad = diff.dot(assembly::one_form_mass_aw(mesh) * diff); break;
    case 2: quad = diff.dot(assembly::face_areas(mesh).cwiseInverse().cwiseProduct(diff)); break;
    }
    norms.l2 = std::sqrt(std::max(quad, 0.0));
    return norms;
}

std::vector<bool> interior_cells(const PolygonMesh& mesh, int degree)
{
    std::vector<bool> keep(mesh.num_cells(degree), true);
    switch (degree) {
    case 0:
        for (int v = 0; v < mesh.num_vertices(); ++v) keep[v] = !mesh.is_boundary_vertex(v);
        break;
    case 1:
        for (int e = 0; e < mesh.num_edges(); ++e) {
            const auto& [a, b] = mesh.edge(e);
            keep[e] = !mesh.is_boundary_vertex(a) && !mesh.is_boundary_vertex(b);
        }
        break;
    case 2:
        for (int f = 0; f < mesh.num_faces(); ++f) {
            for (int v : mesh.face(f)) {
                if (mesh.is_boundary_vertex(v)) keep[f] = false;
            }
        }
        break;
    default: throw Error(ErrorKind::DegreeOverflow, "no cells of degree " + std::to_string(degree));
    }
    return keep;
}

void write_cochain_csv(const Cochain& c, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out.precision(17);
    out << "cell_index,value\n";
    for (Eigen::Index i = 0; i < c.size(); ++i) out << i << ',' << c.values[i] << '\n';
}

Cochain read_cochain_csv(const std::filesystem::path& path, int degree)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    std::vector<std::pair<long, double>> rows;
    std::string line;
    long max_index = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line.rfind("cell_index", 0) == 0) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw Error(ErrorKind::Io, "bad cochain row: " + line);
        const long idx = std::stol(line.substr(0, comma));
        const double value = std::stod(line.substr(comma + 1));
        if (idx < 0) throw Error(ErrorKind::Io, "negative cell index");
        rows.emplace_back(idx, value);
        max_index = std::max(max_index, idx);
    }
    Cochain c{degree, Vector::Zero(max_index + 1)};
    for (const auto& [i, v] : rows) c.values[i] = v;
    return c;
}

void write_vector_field_csv(const std::vector<Vec3>& field, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out.precision(17);
    out << "vertex_index,x,y,z\n";
    for (std::size_t i = 0; i < field.size(); ++i) {
        out << i << ',' << field[i].x() << ',' << field[i].y() << ',' << field[i].z() << '\n';
    }
}

} // namespace polydec
