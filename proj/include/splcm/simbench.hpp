#pragma once

#include <cstdint>
#include <vector>

#include "splcm/estimator.hpp"
#include "splcm/symvec.hpp"

// Synthetic covariance models (MA(1), random, hub), Gaussian sampling with
// the counter-based PRNG, and the evaluation metrics including ROC paths.
// All diagonals are set to the constant that makes the eigenvalue ratio
// lambda_max / lambda_min equal to p.

namespace splcm {

enum class CovModel { MA1, Random, Hub };

struct CovModelSpec {
    CovModel kind = CovModel::MA1;
    int p = 50;
    double value = 0.4;   // MA(1) band magnitude; random/hub use +-1
    double prob = 0.02;   // random-model nonzero probability
    std::uint64_t seed = 1;
};

struct MetricReport {
    double offdiag_l2 = 0.0;
    double frobenius = 0.0;
    double opnorm = 0.0;
    double tpr = 0.0;
    double fpr = 0.0;
    std::size_t true_support = 0;
    std::size_t est_support = 0;
};

struct GaussianSample {
    Matrix y;     // n x p
    SymMatrix s;  // Y^T Y / n, no centering
};

struct RocPoint {
    double lambda = 0.0;
    double fpr = 0.0;
    double tpr = 0.0;
};

SymMatrix gen_cov(const CovModelSpec& spec);

GaussianSample sample_gaussian(const SymMatrix& sigma, int n, std::uint64_t seed);

// Support is read from active_set when given; otherwise exact zeros are
// detected at |entry| < 1e-12.
MetricReport evaluate(const SymMatrix& sigma_hat, const SymMatrix& sigma_star,
                      const std::vector<std::size_t>* active_set = nullptr);

// One (fpr, tpr) point per lambda, emitted in descending-lambda order with
// warm starts along the path.
std::vector<RocPoint> roc_curve(const SymMatrix& s, const ErrorPrecision& ep,
                                const std::vector<double>& lambdas, const SplcmConfig& base_cfg,
                                const SymMatrix& sigma_star);

}  // namespace splcm
