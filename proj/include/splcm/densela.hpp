#pragma once

#include <functional>
#include <vector>

#include "splcm/symvec.hpp"

// Dense linear-algebra kernels: symmetric eigendecomposition (cyclic
// Jacobi), Cholesky factorization/solve, matrix-free conjugate gradient,
// power iteration for the operator norm, and a small two-phase simplex
// solver. Everything here is self-contained and deterministic.

namespace splcm {

struct EigenDecomp {
    std::vector<double> values;  // descending
    Matrix vectors;              // orthonormal columns
};

// Cyclic Jacobi; off-diagonal Frobenius threshold 1e-12 relative, 30 sweeps.
EigenDecomp sym_eigen(const SymMatrix& a);

// Lower Cholesky factor held row-major; throws NotPositiveDefinite on a
// non-positive pivot.
class CholeskyFactor {
public:
    explicit CholeskyFactor(const SymMatrix& a);
    explicit CholeskyFactor(const Matrix& a);  // symmetric content assumed

    std::vector<double> solve(const std::vector<double>& b) const;
    // 2 * sum(log diag(L)) = log det A.
    double logdet() const;
    int dim() const { return n_; }
    // entry of the lower factor, j >= k
    double l(int j, int k) const { return l_(j, k); }
    const Matrix& lower() const { return l_; }

private:
    void factor(const Matrix& a);
    int n_ = 0;
    Matrix l_;
    Matrix lt_;  // transpose of l_, kept so back-substitution reads rows
};

std::vector<double> cholesky_solve(const SymMatrix& a, const std::vector<double>& b);

// A^{-1} via Cholesky; used for BIC scores and QDA discriminants.
SymMatrix sym_inverse(const SymMatrix& a);

using LinearOperator = std::function<void(const std::vector<double>&, std::vector<double>&)>;

// Plain CG on an SPD operator; throws MaxIterations if the relative
// residual target is not met.
std::vector<double> conjugate_gradient(const LinearOperator& op, const std::vector<double>& b,
                                       double tol, int max_iter);

// sqrt(lambda_max(X^T X)) by power iteration on X^T X.
double operator_norm(const Matrix& x, double tol = 1e-6);
double operator_norm(const SymMatrix& x, double tol = 1e-6);

// min c^T x  s.t.  A x <= b, x >= 0. Two-phase dense simplex with Bland's
// rule. Throws Infeasible / Unbounded.
struct LpResult {
    std::vector<double> x;
    double objective = 0.0;
};
LpResult simplex_lp(const std::vector<double>& c, const Matrix& a, const std::vector<double>& b);

// Dense helpers built on the dispatched dot kernel.
Matrix matmul(const Matrix& a, const Matrix& b);
// C = A * B for symmetric A, B (rows double as columns).
Matrix sym_matmul(const SymMatrix& a, const SymMatrix& b);
std::vector<double> matvec(const Matrix& a, const std::vector<double>& x);
std::vector<double> sym_matvec(const SymMatrix& a, const std::vector<double>& x);

double norm2(const std::vector<double>& x);
double norm_inf(const std::vector<double>& x);
double frobenius(const SymMatrix& a);

}  // namespace splcm
