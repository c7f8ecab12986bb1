#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "splcm/symvec.hpp"

// Downstream applications: QDA with a pluggable per-class covariance
// estimator, correlation-distance hierarchical clustering, and the bootstrap
// estimator of the error covariance of vech(S).

namespace splcm {

struct QdaModel {
    struct ClassParams {
        std::vector<double> mean;
        SymMatrix sigma;
        double prior = 0.0;
        double log_det_inv = 0.0;  // log|Sigma^{-1}|
    };
    std::vector<ClassParams> classes;
    int p = 0;
};

// Covariance estimator applied to class-centered data; receives the class
// sample covariance and sample count.
using CovEstimator = std::function<SymMatrix(const SymMatrix&, int)>;

QdaModel qda_fit(const std::vector<Matrix>& class_data, const CovEstimator& est);

// argmax_g of log|Sigma_g^{-1}| - (y-mu)^T Sigma_g^{-1} (y-mu) + 2 log pi_g;
// ties go to the lowest class index.
int qda_classify(const QdaModel& model, const std::vector<double>& y);

SymMatrix corr_from_cov(const SymMatrix& sigma);

enum class Linkage { Average, Complete };

struct Dendrogram {
    struct Merge {
        int a = 0;  // cluster ids; leaves are 0..p-1, merges p, p+1, ...
        int b = 0;
        double height = 0.0;
    };
    std::vector<Merge> merges;
    int leaves = 0;
};

// Agglomerative clustering on d_jk = 1 - r_jk; ties broken by the smallest
// (a, b) pair of cluster ids.
Dendrogram hier_cluster(const SymMatrix& r, Linkage linkage = Linkage::Average);

// Sample covariance (1/(N-1) normalization) of vech(S_b) over N row
// resamples of y.
Matrix bootstrap_error_cov(const Matrix& y, int resamples, std::uint64_t seed,
                           int explicit_cap = 60);

}  // namespace splcm
