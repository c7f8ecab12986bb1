#pragma once

#include <optional>

#include "splcm/densela.hpp"
#include "splcm/symvec.hpp"

// Gaussian/Wishart error-covariance model for vech(S). The covariance of
// vech(S) has entries Cov(s_jk, s_lm) = (sigma_jl sigma_km + sigma_jm
// sigma_kl) / n; its plug-in precision, normalized as (1/n) V^{-1} =
// (1/2) D^T (Omega x Omega) D, is applied through two p x p multiplies
// rather than any L x L or p^2 x p^2 intermediate.

namespace splcm {

enum class PrecisionMode { Explicit, Implicit, Auto };

class ErrorPrecision {
public:
    // omega: plug-in estimate of Sigma^{-1} (symmetric). In explicit mode
    // the L x L matrix of the normalized operator is materialized.
    ErrorPrecision(SymMatrix omega, int n, PrecisionMode mode = PrecisionMode::Auto,
                   int explicit_cap = 60);

    int dim() const { return omega_.dim(); }
    int sample_size() const { return n_; }
    bool is_explicit() const { return explicit_mat_.has_value(); }
    const SymMatrix& omega() const { return omega_; }

    // (1/n) V^{-1} x
    HalfVec apply(const HalfVec& x) const;
    std::vector<double> apply(const std::vector<double>& x) const;

    // Materialized normalized operator; builds on demand from the
    // closed-form pair formula.
    Matrix explicit_matrix() const;

private:
    SymMatrix omega_;
    int n_;
    std::optional<Matrix> explicit_mat_;
};

// Explicit Cov{vech(S)} of the Wishart model, L x L. Throws
// DimensionTooLarge above the cap.
Matrix build_error_cov(const SymMatrix& sigma, int n, int explicit_cap = 60);

ErrorPrecision build_error_precision(const SymMatrix& omega, int n,
                                     PrecisionMode mode = PrecisionMode::Auto);

}  // namespace splcm
