#include "splcm/wishart.hpp"

#include <string>

namespace splcm {

namespace {

// Closed-form entry of the normalized precision (1/2) D^T (W x W) D for a
// symmetric W: rows/cols indexed by lower-triangle pairs (j,k) and (l,m),
// with weight 1/2 on each diagonal pair.
Matrix pair_formula_matrix(const SymMatrix& w) {
    const int p = w.dim();
    const auto L = static_cast<int>(HalfVec::len(p));
    Matrix m(L, L);
    int a = 0;
    for (int j = 0; j < p; ++j) {
        for (int k = 0; k <= j; ++k, ++a) {
            const double wa = (j == k) ? 0.5 : 1.0;
            int b = 0;
            for (int l = 0; l < p; ++l) {
                for (int mm = 0; mm <= l; ++mm, ++b) {
                    const double wb = (l == mm) ? 0.5 : 1.0;
                    double v = w(j, l) * w(k, mm) + w(j, mm) * w(k, l);
                    m(a, b) = wa * wb * v;
                }
            }
        }
    }
    return m;
}

}  // namespace

Matrix build_error_cov(const SymMatrix& sigma, int n, int explicit_cap) {
    const int p = sigma.dim();
    if (p > explicit_cap)
        throw DimensionTooLarge("build_error_cov: p = " + std::to_string(p) +
                                " above explicit-mode cap");
    const auto L = static_cast<int>(HalfVec::len(p));
    Matrix v(L, L);
    int a = 0;
    for (int j = 0; j < p; ++j) {
        for (int k = 0; k <= j; ++k, ++a) {
            int b = 0;
            for (int l = 0; l < p; ++l) {
                for (int m = 0; m <= l; ++m, ++b) {
                    v(a, b) = (sigma(j, l) * sigma(k, m) + sigma(j, m) * sigma(k, l)) / n;
                }
            }
        }
    }
    return v;
}

ErrorPrecision::ErrorPrecision(SymMatrix omega, int n, PrecisionMode mode, int explicit_cap)
    : omega_(std::move(omega)), n_(n) {
    bool want_explicit = mode == PrecisionMode::Explicit ||
                         (mode == PrecisionMode::Auto && omega_.dim() <= explicit_cap);
    if (want_explicit) explicit_mat_ = explicit_matrix();
}

HalfVec ErrorPrecision::apply(const HalfVec& x) const {
    if (x.p != omega_.dim()) throw DimensionMismatch("apply_precision: dimension mismatch");
    HalfVec out(x.p);
    out.v = apply(x.v);
    return out;
}

std::vector<double> ErrorPrecision::apply(const std::vector<double>& x) const {
    const int p = omega_.dim();
    if (x.size() != HalfVec::len(p))
        throw DimensionMismatch("apply_precision: half-vector length mismatch");
    if (explicit_mat_) return matvec(*explicit_mat_, x);
    // (1/n) V^{-1} x = vech-weighted entries of Omega X Omega, X = unvech(x)
    SymMatrix xm = unvech(x);
    Matrix t = sym_matmul(omega_, xm);           // Omega X
    const SymMatrix& w = omega_;
    std::vector<double> out(x.size());
    std::size_t i = 0;
    for (int j = 0; j < p; ++j) {
        for (int k = 0; k <= j; ++k, ++i) {
            double m = 0.0;
            for (int l = 0; l < p; ++l) m += t(j, l) * w(l, k);
            out[i] = (j == k) ? 0.5 * m : m;
        }
    }
    return out;
}

Matrix ErrorPrecision::explicit_matrix() const {
    if (explicit_mat_) return *explicit_mat_;
    // (1/n) * (n/2) D^T (Omega x Omega) D; the 1/2 shows up as the
    // diagonal-pair weights in the pair formula.
    return pair_formula_matrix(omega_);
}

ErrorPrecision build_error_precision(const SymMatrix& omega, int n, PrecisionMode mode) {
    return ErrorPrecision(omega, n, mode);
}

}  // namespace splcm
