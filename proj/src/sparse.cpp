#include <polydec/error.hpp>
#include <polydec/sparse.hpp>

#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace polydec {

namespace {

void require_same_shape(const SparseMatrix& a, const SparseMatrix& b, const char* op)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": operand shapes differ");
    }
}

SolveResult solve_direct(const SparseMatrix& a, const Vector& b)
{
    SolveResult result;
    result.report.method = "direct-lu";
    if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "direct solve needs a square matrix");

    Eigen::SparseLU<SparseMatrix> lu;
    lu.analyzePattern(a);
    lu.factorize(a);
    if (lu.info() != Eigen::Success) throw Error(ErrorKind::SingularMatrix, "LU factorization failed: " + lu.lastErrorMessage());
    result.x = lu.solve(b);
    if (lu.info() != Eigen::Success || !result.x.allFinite()) {
        throw Error(ErrorKind::SingularMatrix, "LU solve produced no finite solution");
    }
    result.report.iterations = 1;
    result.report.residual = (a * result.x - b).norm();
    const double bnorm = b.norm();
    result.report.relative_residual = bnorm > 0.0 ? result.report.residual / bnorm : result.report.residual;
    result.report.converged = true;
    result.report.residual_history = {result.report.residual};
    return result;
}

// Paige-Saunders MINRES without preconditioning. The recurrence residual norm is
// nonincreasing by construction and is what the history records.
SolveResult solve_minres(const SparseMatrix& a, const Vector& b, double tol, int max_iter)
{
    SolveResult result;
    result.report.method = "minres";
    const auto n = a.rows();
    if (a.cols() != n) throw Error(ErrorKind::DimensionMismatch, "MINRES needs a square matrix");

    Vector x = Vector::Zero(n);
    const double beta1 = b.norm();
    result.report.residual_history.push_back(beta1);
    if (beta1 == 0.0) {
        result.x = x;
        result.report.converged = true;
        return result;
    }

    Vector r1 = b, r2 = b, y = b;
    Vector w = Vector::Zero(n), w1(n), w2 = Vector::Zero(n), v(n);
    double oldb = 0.0, beta = beta1, dbar = 0.0, epsln = 0.0, phibar = beta1;
    double cs = -1.0, sn = 0.0;

    int itn = 0;
    while (itn < max_iter) {
        ++itn;
        v = y / beta;
        y = a * v;
        if (itn >= 2) y -= (beta / oldb) * r1;
        const double alfa = v.dot(y);
        y -= (alfa / beta) * r2;
        r1 = r2;
        r2 = y;
        oldb = beta;
        beta = r2.norm();

        const double oldeps = epsln;
        const double delta = cs * dbar + sn * alfa;
        const double gbar = sn * dbar - cs * alfa;
        epsln = sn * beta;
        dbar = -cs * beta;
        const double gamma = std::max(std::hypot(gbar, beta), std::numeric_limits<double>::epsilon());
        cs = gbar / gamma;
        sn = beta / gamma;
        const double phi = cs * phibar;
        phibar = sn * phibar;

        w1 = w2;
        w2 = w;
        w = (v - oldeps * w1 - delta * w2) / gamma;
        x += phi * w;

        result.report.residual_history.push_back(phibar);
        if (phibar <= tol * beta1 || beta == 0.0) break;
    }

    result.x = std::move(x);
    result.report.iterations = itn;
    result.report.residual = (a * result.x - b).norm();
    result.report.relative_residual = result.report.residual / beta1;
    result.report.converged = phibar <= tol * beta1 || result.report.relative_residual <= tol;
    return result;
}

// CGLS on min ||Ax - b|| started from zero, so iterates stay in range(A^T) and the limit is
// the minimal-norm least-squares solution.
SolveResult solve_cgls(const SparseMatrix& a, const Vector& b, double tol, int max_iter)
{
    SolveResult result;
    result.report.method = "cgls";
    Vector x = Vector::Zero(a.cols());
    Vector r = b;
    Vector s = a.transpose() * r;
    Vector p = s;
    const double bnorm = b.norm();
    const double snorm0 = s.norm();
    double gamma = s.squaredNorm();
    result.report.residual_history.push_back(bnorm);

    int itn = 0;
    bool converged = bnorm == 0.0 || snorm0 == 0.0;
    Vector q(a.rows());
    while (!converged && itn < max_iter) {
        ++itn;
        q = a * p;
        const double qq = q.squaredNorm();
        if (qq == 0.0) break;
        const double alpha = gamma / qq;
        x += alpha * p;
        r -= alpha * q;
        s = a.transpose() * r;
        const double gamma_new = s.squaredNorm();
        result.report.residual_history.push_back(r.norm());
        if (r.norm() <= tol * bnorm || std::sqrt(gamma_new) <= tol * snorm0) {
            converged = true;
            break;
        }
        p = s + (gamma_new / gamma) * p;
        gamma = gamma_new;
    }

    result.x = std::move(x);
    result.report.iterations = itn;
    result.report.residual = (a * result.x - b).norm();
    result.report.relative_residual = bnorm > 0.0 ? result.report.residual / bnorm : 0.0;
    result.report.converged = converged;
    return result;
}

} // namespace

SparseMatrix from_triplets(int rows, int cols, const std::vector<Triplet>& triplets)
{
    SparseMatrix m(rows, cols);
    m.setFromTriplets(triplets.begin(), triplets.end());
    m.prune(0.0);
    m.makeCompressed();
    return m;
}

SparseMatrix identity(int n)
{
    SparseMatrix m(n, n);
    m.setIdentity();
    return m;
}

SparseMatrix diagonal(const Vector& d)
{
    std::vector<Triplet> t;
    t.reserve(d.size());
    for (Eigen::Index i = 0; i < d.size(); ++i) t.emplace_back(i, i, d[i]);
    return from_triplets(static_cast<int>(d.size()), static_cast<int>(d.size()), t);
}

Vector matvec(const SparseMatrix& m, const Vector& x)
{
    if (m.cols() != x.size()) throw Error(ErrorKind::DimensionMismatch, "matvec: column count differs from vector length");
    return m * x;
}

SparseMatrix transpose(const SparseMatrix& m)
{
    return m.transpose();
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "multiply: inner dimensions differ");
    SparseMatrix c = a * b;
    c.makeCompressed();
    return c;
}

SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b)
{
    require_same_shape(a, b, "add");
    return a + b;
}

SparseMatrix scale(const SparseMatrix& m, double s)
{
    return s * m;
}

SolveResult solve(const SparseMatrix& a, const Vector& b, const SolveOptions& options)
{
    if (a.rows() != b.size()) throw Error(ErrorKind::DimensionMismatch, "solve: right-hand side length differs from row count");
    if (!b.allFinite()) throw Error(ErrorKind::SolverFailure, "solve: right-hand side is not finite");
    const int max_iter = options.max_iter > 0 ? options.max_iter : 10 * static_cast<int>(std::max(a.rows(), a.cols()));
    switch (options.method) {
    case SolveMethod::Direct: return solve_direct(a, b);
    case SolveMethod::IterativeSymmetric: return solve_minres(a, b, options.tol, max_iter);
    case SolveMethod::LeastSquares: return solve_cgls(a, b, options.tol, max_iter);
    }
    throw Error(ErrorKind::SolverFailure, "unknown method");
}

SolveResult solve_or_throw(const SparseMatrix& a, const Vector& b, const SolveOptions& options)
{
    auto result = solve(a, b, options);
    if (!result.report.converged) {
        throw Error(ErrorKind::NoConvergence, result.report.method + " stopped after " + std::to_string(result.report.iterations) +
                                                  " iterations, relative residual " + std::to_string(result.report.relative_residual));
    }
    return result;
}

void write_matrix_market(const SparseMatrix& m, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << m.rows() << ' ' << m.cols() << ' ' << m.nonZeros() << '\n';
    out.precision(17);
    for (int k = 0; k < m.outerSize(); ++k) {
        for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
            out << it.row() + 1 << ' ' << it.col() + 1 << ' ' << it.value() << '\n';
        }
    }
}

SparseMatrix read_matrix_market(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    std::string line;
    std::getline(in, line);
    if (line.rfind("%%MatrixMarket matrix coordinate real", 0) != 0) {
        throw Error(ErrorKind::Io, "unsupported Matrix Market header: " + line);
    }
    const bool symmetric = line.find("symmetric") != std::string::npos;
    while (std::getline(in, line) && (line.empty() || line[0] == '%')) {}
    std::istringstream dims(line);
    long rows = 0, cols = 0, nnz = 0;
    if (!(dims >> rows >> cols >> nnz)) throw Error(ErrorKind::Io, "bad Matrix Market size line");
    std::vector<Triplet> t;
    t.reserve(nnz);
    for (long k = 0; k < nnz; ++k) {
        long i = 0, j = 0;
        double v = 0.0;
        if (!(in >> i >> j >> v)) throw Error(ErrorKind::Io, "truncated Matrix Market body");
        t.emplace_back(i - 1, j - 1, v);
        if (symmetric && i != j) t.emplace_back(j - 1, i - 1, v);
    }
    return from_triplets(static_cast<int>(rows), static_cast<int>(cols), t);
}

} // namespace polydec
