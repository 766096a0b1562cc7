#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <filesystem>
#include <string>
#include <vector>

namespace polydec {

using SparseMatrix = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;
using Vector = Eigen::VectorXd;

/// Duplicate triplets are summed; explicit zeros are kept out.
SparseMatrix from_triplets(int rows, int cols, const std::vector<Triplet>& triplets);
SparseMatrix identity(int n);
SparseMatrix diagonal(const Vector& d);

Vector matvec(const SparseMatrix& m, const Vector& x);
SparseMatrix transpose(const SparseMatrix& m);
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix scale(const SparseMatrix& m, double s);

enum class SolveMethod {
    Direct,             ///< sparse LU
    IterativeSymmetric, ///< MINRES, for symmetric (semi)definite systems
    LeastSquares,       ///< CGLS from x0 = 0: minimal-norm least-squares solution
};

struct SolveOptions {
    SolveMethod method = SolveMethod::Direct;
    double tol = 1e-10;
    int max_iter = 0; ///< 0 -> 10 * n
};

struct SolveReport {
    std::string method;
    int iterations = 0;
    double residual = 0.0; ///< ||Ax - b|| for direct/MINRES, ||A^T(Ax - b)|| for least squares
    double relative_residual = 0.0;
    bool converged = false;
    std::vector<double> residual_history;
};

struct SolveResult {
    Vector x;
    SolveReport report;
};

///
/// Throws SingularMatrix when the direct factorization fails, NoConvergence (carrying no result)
/// only when the caller asks for it via solve_or_throw; solve itself returns the best iterate with
/// converged = false.
///
SolveResult solve(const SparseMatrix& a, const Vector& b, const SolveOptions& options = {});
SolveResult solve_or_throw(const SparseMatrix& a, const Vector& b, const SolveOptions& options = {});

void write_matrix_market(const SparseMatrix& m, const std::filesystem::path& path);
SparseMatrix read_matrix_market(const std::filesystem::path& path);

} // namespace polydec
