#pragma once

#include <vector>

#include "splcm/clime.hpp"
#include "splcm/estimator.hpp"
#include "splcm/wishart.hpp"

// BIC scoring and joint (lambda, rho) grid search. For each rho the CLIME
// plug-in precision is built once and the lambda sweep is warm-started in
// descending order; ties are broken toward the sparser model (larger
// lambda, then larger rho).

namespace splcm {

struct TuneCell {
    double lambda = 0.0;
    double rho = 0.0;
    double bic = 0.0;
    std::size_t support = 0;
    bool converged = false;
};

struct TuneResult {
    double best_lambda = 0.0;
    double best_rho = 0.0;
    double best_fit_bic = 0.0;
    SplcmFit best_fit;
    std::vector<TuneCell> table;
};

// n log det(Sigma) + n tr(S Sigma^{-1}) + log(n) * #offdiag-nonzeros (j<k).
double bic_score(const SymMatrix& s, const SplcmFit& fit, int n);

// lambdas must be descending and positive; rhos positive. tau for the CLIME
// threshold defaults to rho itself.
TuneResult grid_search(const SymMatrix& s, int n, const std::vector<double>& lambdas,
                       const std::vector<double>& rhos, const SplcmConfig& base_cfg);

// Oracle / fixed-precision variant: sweeps lambda only.
TuneResult grid_search_fixed_precision(const SymMatrix& s, int n, const ErrorPrecision& ep,
                                       const std::vector<double>& lambdas,
                                       const SplcmConfig& base_cfg);

// 20-point descending log grid from lambda_max down to lambda_max/100.
std::vector<double> default_lambda_grid(const SymMatrix& s, const ErrorPrecision& ep,
                                        int points = 20);
std::vector<double> default_rho_grid();

}  // namespace splcm
