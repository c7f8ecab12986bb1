#include "splcm/symvec.hpp"

#include <cmath>
#include <string>

namespace splcm {

SymMatrix SymMatrix::from_lower(const Matrix& m) {
    if (m.rows != m.cols) throw DimensionMismatch("from_lower: matrix not square");
    SymMatrix s(m.rows);
    for (int j = 0; j < m.rows; ++j)
        for (int k = 0; k <= j; ++k) s.set(j, k, m(j, k));
    return s;
}

SymMatrix SymMatrix::identity(int p) {
    SymMatrix s(p);
    for (int j = 0; j < p; ++j) s.set(j, j, 1.0);
    return s;
}

IndexPartition::IndexPartition(int p_) : p(p_) {
    d.reserve(p_);
    o.reserve(HalfVec::len(p_) - p_);
    for (int j = 0; j < p_; ++j) {
        for (int k = 0; k <= j; ++k) {
            if (j == k)
                d.push_back(HalfVec::pos(j, k));
            else
                o.push_back(HalfVec::pos(j, k));
        }
    }
}

HalfVec vech(const SymMatrix& m) {
    HalfVec x(m.dim());
    std::size_t i = 0;
    for (int j = 0; j < m.dim(); ++j)
        for (int k = 0; k <= j; ++k) x.v[i++] = m(j, k);
    return x;
}

namespace {
// Returns p with p(p+1)/2 == len, or -1.
int triangular_dim(std::size_t len) {
    int p = static_cast<int>(std::floor((std::sqrt(8.0 * static_cast<double>(len) + 1.0) - 1.0) / 2.0));
    for (int q = p - 1; q <= p + 1; ++q)
        if (q >= 1 && HalfVec::len(q) == len) return q;
    return -1;
}
}  // namespace

SymMatrix unvech(const std::vector<double>& x) {
    int p = triangular_dim(x.size());
    if (p < 0)
        throw NonTriangularLength("unvech: length " + std::to_string(x.size()) +
                                  " is not a triangular number");
    SymMatrix m(p);
    std::size_t i = 0;
    for (int j = 0; j < p; ++j)
        for (int k = 0; k <= j; ++k) m.set(j, k, x[i++]);
    return m;
}

std::vector<double> dup_apply(const HalfVec& x) {
    const int p = x.p;
    std::vector<double> y(static_cast<std::size_t>(p) * p);
    for (int c = 0; c < p; ++c)
        for (int r = 0; r < p; ++r)
            y[static_cast<std::size_t>(c) * p + r] =
                x.v[r >= c ? HalfVec::pos(r, c) : HalfVec::pos(c, r)];
    return y;
}

HalfVec dup_transpose_apply(const std::vector<double>& y, int p) {
    if (y.size() != static_cast<std::size_t>(p) * p)
        throw DimensionMismatch("dup_transpose_apply: expected length p^2");
    HalfVec x(p);
    for (int j = 0; j < p; ++j) {
        for (int k = 0; k <= j; ++k) {
            double v = y[static_cast<std::size_t>(k) * p + j];
            if (j != k) v += y[static_cast<std::size_t>(j) * p + k];
            x.v[HalfVec::pos(j, k)] = v;
        }
    }
    return x;
}

HalfVec dup_pinv_apply(const std::vector<double>& y, int p) {
    HalfVec x = dup_transpose_apply(y, p);
    IndexPartition part(p);
    for (std::size_t l : part.o) x.v[l] *= 0.5;
    return x;
}

Matrix dup_matrix(int p) {
    const std::size_t L = HalfVec::len(p);
    Matrix d(static_cast<int>(static_cast<std::size_t>(p) * p), static_cast<int>(L));
    for (int c = 0; c < p; ++c)
        for (int r = 0; r < p; ++r) {
            std::size_t l = r >= c ? HalfVec::pos(r, c) : HalfVec::pos(c, r);
            d(static_cast<int>(static_cast<std::size_t>(c) * p + r), static_cast<int>(l)) = 1.0;
        }
    return d;
}

}  // namespace splcm
