#pragma once

#include <optional>
#include <vector>

#include "splcm/densela.hpp"
#include "splcm/symvec.hpp"
#include "splcm/wishart.hpp"

// The Sparse LCM estimator: ADMM over (sigma, theta, eta) with the diagonal
// of theta pinned to the sample variances, soft thresholding on the
// off-diagonal block, and a spectral projection onto {Sigma >= delta I}
// inside every sigma update.

namespace splcm {

enum class SolverPath { DenseCholesky, MatrixFreeCg };

struct SplcmConfig {
    double lambda = 0.1;
    double gamma = 1.0;
    // <= 0 selects the scale-relative default 1e-4 * mean(s_[d])
    double delta = 0.0;
    double eps_abs = 1e-6;
    double eps_rel = 1e-5;
    int max_iter = 1000;
    SolverPath solver = SolverPath::DenseCholesky;
};

struct SplcmFit {
    SymMatrix sigma_hat;
    int iterations = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    // 0-indexed half-vector positions of nonzero off-diagonals, read from
    // the exactly-sparse theta block
    std::vector<std::size_t> active_set;
    bool converged = false;
    double min_eigenvalue = 0.0;
    double delta_used = 0.0;
};

struct AdmmState {
    std::vector<double> sigma;
    std::vector<double> theta;
    std::vector<double> eta;
};

// Eigenvalue clamp onto {Sigma >= delta I}.
SymMatrix pd_project(const SymMatrix& a, double delta);

// Closed-form reference: diagonal untouched, off-diagonals soft-thresholded
// entrywise. Not PD-projected.
SymMatrix soft_threshold_estimate(const SymMatrix& s, double threshold);
SymMatrix soft_threshold_estimate(const SymMatrix& s, const SymMatrix& thresholds);

// Solver for the sigma-update system ((1/n) V^{-1} + (1/gamma) I) x = rhs.
// The dense path factors once at construction, so a lambda sweep at fixed
// (precision, gamma) reuses one Cholesky factorization.
class SigmaSolver {
public:
    SigmaSolver(const ErrorPrecision& ep, double gamma, SolverPath path);
    std::vector<double> solve(const std::vector<double>& rhs) const;
    double gamma() const { return gamma_; }

private:
    const ErrorPrecision* ep_;
    double gamma_;
    SolverPath path_;
    std::optional<CholeskyFactor> chol_;
};

SplcmFit fit(const SymMatrix& s, const ErrorPrecision& ep, const SplcmConfig& cfg);

// Warm-started variant for grid sweeps; state carries (sigma, theta, eta)
// between calls and may start empty. A caller-held SigmaSolver avoids
// refactoring the system matrix at every lambda.
SplcmFit fit_warm(const SymMatrix& s, const ErrorPrecision& ep, const SplcmConfig& cfg,
                  std::optional<AdmmState>& state, const SigmaSolver* solver = nullptr);

// lambda at which the off-diagonal support is guaranteed empty:
// ||(1/n) V^{-1} vech(S)|_[o]||_inf.
double lambda_max_bound(const SymMatrix& s, const ErrorPrecision& ep);

}  // namespace splcm
