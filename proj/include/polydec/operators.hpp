#pragma once

#include <polydec/cochain.hpp>
#include <polydec/mesh.hpp>
#include <polydec/sparse.hpp>

#include <Eigen/Dense>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace polydec {

enum class Scheme {
    Ours,
    AlexaWardetzky, ///< diagonal M0, per-face midpoint M1; the Laplacian is their lambda = 0 one
};

/// Sparse linear map between cochain spaces of one mesh.
struct Operator {
    int from_degree = 0;
    int to_degree = 0;
    SparseMatrix matrix;
    std::uint64_t mesh_id = 0;

    /// Throws DegreeMismatch / DimensionMismatch.
    Cochain apply(const Cochain& c) const;
};

/// Per-face p x p matrices acting on face-oriented halfedge values.
struct FaceLocalBlock {
    Eigen::MatrixXd wedge;  ///< R = sum_a (1/2 - a/p) R_a
    Eigen::MatrixXd metric; ///< W1[i,j] = <e_i, e_j> / |f|
};

FaceLocalBlock face_local_block(const PolygonMesh& mesh, int face);

/// Assembly pieces. H is the halfedge space (one slot per face corner).
namespace assembly {

SparseMatrix d0(const PolygonMesh& mesh);                      ///< E x V
SparseMatrix d1(const PolygonMesh& mesh);                      ///< F x E
SparseMatrix edge_to_halfedge(const PolygonMesh& mesh);        ///< H x E, signed restriction
SparseMatrix halfedge_to_edge(const PolygonMesh& mesh);        ///< E x H, signed average over the edge's halfedges
SparseMatrix halfedge_pairing(const PolygonMesh& mesh);        ///< H x H, the matrix A on oriented halfedges
SparseMatrix wedge_blocks(const PolygonMesh& mesh);            ///< H x H, block-diagonal R
SparseMatrix metric_blocks(const PolygonMesh& mesh);           ///< H x H, block-diagonal W1
SparseMatrix edge_average(const PolygonMesh& mesh);            ///< E x V, 1/2 at both endpoints
SparseMatrix face_average(const PolygonMesh& mesh);            ///< F x V, 1/p at the face's vertices
Vector face_areas(const PolygonMesh& mesh);                    ///< W_F diagonal
Vector vertex_weights(const PolygonMesh& mesh);                ///< W_V diagonal, 1 / sum |f|/p
Vector vertex_mass_aw(const PolygonMesh& mesh);                ///< M0 diagonal, sum |f|/p
SparseMatrix one_form_mass_aw(const PolygonMesh& mesh);        ///< E x E, sum_f S_f^T (B_f B_f^T / |f|) S_f

} // namespace assembly

/// Polygonal wedge product. Throws DegreeOverflow when k + l > 2.
Cochain wedge(const Cochain& alpha, const Cochain& beta, const PolygonMesh& mesh);

///
/// Operators of one immutable mesh, assembled lazily and cached. Safe to share across threads.
///
class DecOperators {
public:
    explicit DecOperators(std::shared_ptr<const PolygonMesh> mesh);
    explicit DecOperators(PolygonMesh mesh);

    const PolygonMesh& mesh() const { return *mesh_; }
    std::shared_ptr<const PolygonMesh> mesh_ptr() const { return mesh_; }

    const Operator& exterior_derivative(int k) const;
    const Operator& hodge_star(int k) const;
    /// Gram matrix of the discrete L2 inner product. AW supports k = 0, 1.
    const Operator& inner_product(int k, Scheme scheme = Scheme::Ours) const;
    /// delta_k : k -> k-1, k in {1, 2}; AW only k = 1.
    const Operator& codifferential(int k, Scheme scheme = Scheme::Ours) const;
    /// k in {0, 1, 2}; AW only k = 0.
    const Operator& laplacian(int k, Scheme scheme = Scheme::Ours) const;

    /// Matrix of alpha -> alpha0 ^ (.) for a fixed 0-form, acting on degree l.
    Operator wedge_with_zero_form(const Cochain& alpha0, int l) const;
    /// Matrix of gamma -> beta1 ^ gamma for a fixed 1-form, gamma of degree 0 or 1.
    Operator wedge_with_one_form(const Cochain& beta1, int l) const;

    /// i_X as a matrix on k-forms, k in {1, 2}.
    Operator contraction_operator(const Cochain& x_flat, int k) const;
    /// L_X as a matrix on k-forms, k in {0, 1, 2}.
    Operator lie_operator(const Cochain& x_flat, int k) const;

private:
    const Operator& cached(const std::string& key, int from, int to, const std::function<SparseMatrix()>& build) const;

    std::shared_ptr<const PolygonMesh> mesh_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, std::unique_ptr<Operator>> cache_;
};

/// i_X alpha = (-1)^{k(2-k)} * (*alpha ^ X^flat), composed from wedge and Hodge star.
/// On 0-forms i_X is the zero map; a zero 0-cochain is returned.
Cochain contraction(const DecOperators& ops, const Cochain& x_flat, const Cochain& alpha);

/// L_X alpha = i_X d alpha + d i_X alpha.
Cochain lie_derivative(const DecOperators& ops, const Cochain& x_flat, const Cochain& alpha);

} // namespace polydec
