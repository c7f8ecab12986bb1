#pragma once

#include <cstddef>
#include <vector>

#include "splcm/errors.hpp"

// Symmetric-matrix and half-vectorization algebra. The half-vector stacks
// the lower triangle row by row: (A11, A21, A22, A31, A32, A33, ...), so the
// diagonal of a p x p matrix sits at 1-indexed positions k(k+1)/2. All
// public indices in this codebase are 0-indexed; the 1-indexed convention
// appears only in documentation.

namespace splcm {

// Dense row-major matrix, not necessarily square or symmetric.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    const double* row(int i) const { return a.data() + static_cast<std::size_t>(i) * cols; }
    double* row(int i) { return a.data() + static_cast<std::size_t>(i) * cols; }
};

// Dense symmetric p x p matrix; constructors symmetrize from the lower
// triangle so the invariant a(j,k) == a(k,j) holds exactly.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int p) : p_(p), a_(static_cast<std::size_t>(p) * p, 0.0) {}

    // Builds from arbitrary dense entries, copying the lower triangle onto
    // the upper one.
    static SymMatrix from_lower(const Matrix& m);
    static SymMatrix identity(int p);

    int dim() const { return p_; }
    double operator()(int j, int k) const { return a_[static_cast<std::size_t>(j) * p_ + k]; }
    // Writes both (j,k) and (k,j).
    void set(int j, int k, double v) {
        a_[static_cast<std::size_t>(j) * p_ + k] = v;
        a_[static_cast<std::size_t>(k) * p_ + j] = v;
    }
    const double* row(int j) const { return a_.data() + static_cast<std::size_t>(j) * p_; }
    const std::vector<double>& data() const { return a_; }

private:
    int p_ = 0;
    std::vector<double> a_;
};

// vech of a symmetric matrix; length L = p(p+1)/2.
struct HalfVec {
    int p = 0;
    std::vector<double> v;

    HalfVec() = default;
    explicit HalfVec(int p_) : p(p_), v(len(p_), 0.0) {}

    static std::size_t len(int p_) { return static_cast<std::size_t>(p_) * (p_ + 1) / 2; }
    // 0-indexed position of entry (j,k), j >= k.
    static std::size_t pos(int j, int k) { return static_cast<std::size_t>(j) * (j + 1) / 2 + k; }
};

// Diagonal / off-diagonal split of half-vector positions. d has p entries,
// o the remaining p(p-1)/2.
struct IndexPartition {
    int p = 0;
    std::vector<std::size_t> d;
    std::vector<std::size_t> o;

    explicit IndexPartition(int p_);
};

HalfVec vech(const SymMatrix& m);

// Throws NonTriangularLength if x.v.size() is not a triangular number.
SymMatrix unvech(const std::vector<double>& x);
inline SymMatrix unvech(const HalfVec& x) { return unvech(x.v); }

// D_p vech -> vec, column-concatenation order, as an index map.
std::vector<double> dup_apply(const HalfVec& x);

// D_p^T acting on a length-p^2 vector: diagonal slots take y[(j,j)],
// off-diagonal slots take the sum of the two mirror entries.
HalfVec dup_transpose_apply(const std::vector<double>& y, int p);

// Moore-Penrose inverse D_p^+ = (D^T D)^{-1} D^T: mirror entries averaged.
HalfVec dup_pinv_apply(const std::vector<double>& y, int p);

// Explicit L x p^2 duplication matrix, cross-check only (p <= 8).
Matrix dup_matrix(int p);

}  // namespace splcm
