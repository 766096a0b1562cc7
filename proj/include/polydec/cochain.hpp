#pragma once

#include <polydec/fields.hpp>
#include <polydec/mesh.hpp>
#include <polydec/sparse.hpp>

#include <filesystem>
#include <vector>

namespace polydec {

/// Real value per k-cell (vertices, edges, faces for k = 0, 1, 2).
struct Cochain {
    int degree = 0;
    Vector values;

    static Cochain zero(const PolygonMesh& mesh, int degree);
    static Cochain constant(const PolygonMesh& mesh, int degree, double value);

    Eigen::Index size() const { return values.size(); }
    double operator[](Eigen::Index i) const { return values[i]; }

    Cochain& operator+=(const Cochain& other);
    Cochain& operator-=(const Cochain& other);
    Cochain& operator*=(double s);
};

Cochain operator+(Cochain a, const Cochain& b);
Cochain operator-(Cochain a, const Cochain& b);
Cochain operator*(double s, Cochain a);

/// Throws DimensionMismatch when the length does not match the mesh's k-cell count.
void check_cochain(const PolygonMesh& mesh, const Cochain& c);

struct QuadratureOptions {
    int edge_points = 4;      ///< Gauss-Legendre points per edge
    int triangle_degree = 4;  ///< symmetric rule degree on centroid fan triangles
};

///
/// Integrates an analytic form over the k-cells: point values (k = 0), straight-edge line
/// integrals (k = 1), flux through the centroid fan triangles (C, v_i, v_{i+1}) (k = 2).
/// Throws DegreeMismatch when degree does not match the field kind.
///
Cochain discretize(const AnalyticField& field, const PolygonMesh& mesh, int degree, const QuadratureOptions& quad = {});
Cochain discretize(const ScalarField& field, const PolygonMesh& mesh, const QuadratureOptions& quad = {});
Cochain discretize(const CovectorField& field, const PolygonMesh& mesh, const QuadratureOptions& quad = {});
Cochain discretize(const TwoFormField& field, const PolygonMesh& mesh, const QuadratureOptions& quad = {});

/// X^flat(e) = int_0^1 <e'(t), X(e(t))> dt.
Cochain flat(const VectorField& x, const PolygonMesh& mesh, int edge_points = 4);

///
/// Per-vertex reconstruction from a 1-form, averaged over the vertex's faces. In each face,
/// e1 ends at v and e2 starts at v. Throws IsolatedVertex for vertices without faces.
///
std::vector<Vec3> sharp(const Cochain& beta, const PolygonMesh& mesh);

struct ErrorNorms {
    double l2 = 0.0;   ///< sqrt((xi - Xi)^T M_k (xi - Xi)) with the diagonal / per-face mass matrices
    double linf = 0.0;
};

/// Throws DegreeMismatch when the cochains differ in degree.
ErrorNorms error_norms(const Cochain& xi, const Cochain& reference, const PolygonMesh& mesh);
/// Same, with the difference zeroed on cells where keep[i] is false.
ErrorNorms error_norms(const Cochain& xi, const Cochain& reference, const PolygonMesh& mesh, const std::vector<bool>& keep);

/// k-cells whose closure avoids every boundary vertex. All true on closed meshes.
std::vector<bool> interior_cells(const PolygonMesh& mesh, int degree);

/// "cell_index,value" lines with a header.
void write_cochain_csv(const Cochain& c, const std::filesystem::path& path);
/// The degree cannot be recovered from the file; the caller supplies it.
Cochain read_cochain_csv(const std::filesystem::path& path, int degree);

void write_vector_field_csv(const std::vector<Vec3>& field, const std::filesystem::path& path);

} // namespace polydec
