#include "splcm/downstream.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "splcm/densela.hpp"
#include "splcm/rng.hpp"

namespace splcm {

QdaModel qda_fit(const std::vector<Matrix>& class_data, const CovEstimator& est) {
    if (class_data.empty()) throw ClassTooSmall("qda_fit: no classes");
    QdaModel model;
    model.p = class_data.front().cols;
    std::size_t total = 0;
    for (const auto& d : class_data) total += d.rows;

    for (const auto& d : class_data) {
        if (d.rows < 2) throw ClassTooSmall("qda_fit: class needs at least 2 samples");
        if (d.cols != model.p) throw DimensionMismatch("qda_fit: inconsistent dimensions");
        QdaModel::ClassParams cp;
        cp.mean.assign(model.p, 0.0);
        for (int i = 0; i < d.rows; ++i)
            for (int j = 0; j < model.p; ++j) cp.mean[j] += d(i, j);
        for (double& m : cp.mean) m /= d.rows;

        SymMatrix s(model.p);
        for (int j = 0; j < model.p; ++j) {
            for (int k = 0; k <= j; ++k) {
                double acc = 0.0;
                for (int i = 0; i < d.rows; ++i)
                    acc += (d(i, j) - cp.mean[j]) * (d(i, k) - cp.mean[k]);
                s.set(j, k, acc / d.rows);
            }
        }
        cp.sigma = est(s, d.rows);
        cp.prior = static_cast<double>(d.rows) / static_cast<double>(total);
        cp.log_det_inv = -CholeskyFactor(cp.sigma).logdet();
        model.classes.push_back(std::move(cp));
    }
    return model;
}

int qda_classify(const QdaModel& model, const std::vector<double>& y) {
    if (static_cast<int>(y.size()) != model.p)
        throw DimensionMismatch("qda_classify: input dimension mismatch");
    int best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t g = 0; g < model.classes.size(); ++g) {
        const auto& cp = model.classes[g];
        std::vector<double> r(model.p);
        for (int j = 0; j < model.p; ++j) r[j] = y[j] - cp.mean[j];
        auto x = cholesky_solve(cp.sigma, r);
        double maha = 0.0;
        for (int j = 0; j < model.p; ++j) maha += r[j] * x[j];
        double score = cp.log_det_inv - maha + 2.0 * std::log(cp.prior);
        if (score > best_score) {
            best_score = score;
            best = static_cast<int>(g);
        }
    }
    return best;
}

SymMatrix corr_from_cov(const SymMatrix& sigma) {
    const int p = sigma.dim();
    std::vector<double> sd(p);
    for (int j = 0; j < p; ++j) {
        if (sigma(j, j) <= 0.0)
            throw NonPositiveVariance("corr_from_cov: variance " + std::to_string(j) +
                                      " not positive");
        sd[j] = std::sqrt(sigma(j, j));
    }
    SymMatrix r(p);
    for (int j = 0; j < p; ++j) {
        r.set(j, j, 1.0);
        for (int k = 0; k < j; ++k) r.set(j, k, sigma(j, k) / (sd[j] * sd[k]));
    }
    return r;
}

Dendrogram hier_cluster(const SymMatrix& r, Linkage linkage) {
    const int p = r.dim();
    for (int j = 0; j < p; ++j) {
        if (std::fabs(r(j, j) - 1.0) > 1e-8)
            throw InvalidCorrelation("hier_cluster: diagonal not 1");
        for (int k = 0; k < j; ++k)
            if (std::fabs(r(j, k)) > 1.0 + 1e-8)
                throw InvalidCorrelation("hier_cluster: entry outside [-1, 1]");
    }

    struct Cluster {
        int id;
        std::vector<int> leaves;
    };
    std::vector<Cluster> active;
    for (int j = 0; j < p; ++j) active.push_back({j, {j}});
    int next_id = p;

    Dendrogram out;
    out.leaves = p;

    auto dist = [&](const Cluster& a, const Cluster& b) {
        double acc = linkage == Linkage::Complete ? 0.0 : 0.0;
        if (linkage == Linkage::Complete) {
            for (int i : a.leaves)
                for (int j : b.leaves) acc = std::max(acc, 1.0 - r(std::max(i, j), std::min(i, j)));
        } else {
            for (int i : a.leaves)
                for (int j : b.leaves) acc += 1.0 - r(std::max(i, j), std::min(i, j));
            acc /= static_cast<double>(a.leaves.size() * b.leaves.size());
        }
        return acc;
    };

    while (active.size() > 1) {
        std::size_t bi = 0, bj = 1;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < active.size(); ++i) {
            for (std::size_t j = i + 1; j < active.size(); ++j) {
                double d = dist(active[i], active[j]);
                // ties resolved by the smallest (id_i, id_j) pair
                if (d < best - 1e-15) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        Cluster merged;
        merged.id = next_id++;
        merged.leaves = active[bi].leaves;
        merged.leaves.insert(merged.leaves.end(), active[bj].leaves.begin(),
                             active[bj].leaves.end());
        std::sort(merged.leaves.begin(), merged.leaves.end());
        out.merges.push_back({active[bi].id, active[bj].id, best});
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(bj));
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(bi));
        active.push_back(std::move(merged));
    }
    return out;
}

Matrix bootstrap_error_cov(const Matrix& y, int resamples, std::uint64_t seed,
                           int explicit_cap) {
    const int n = y.rows;
    const int p = y.cols;
    if (resamples < 2) throw DimensionMismatch("bootstrap_error_cov: need N >= 2");
    if (p > explicit_cap)
        throw DimensionTooLarge("bootstrap_error_cov: p above explicit cap");
    const std::size_t L = HalfVec::len(p);

    CounterRng rng(seed);
    std::vector<std::vector<double>> vechs;
    vechs.reserve(resamples);
    std::vector<double> mean(L, 0.0);
    for (int b = 0; b < resamples; ++b) {
        std::vector<int> rows(n);
        for (int i = 0; i < n; ++i)
            rows[i] = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
        std::vector<double> v(L);
        std::size_t idx = 0;
        for (int j = 0; j < p; ++j) {
            for (int k = 0; k <= j; ++k, ++idx) {
                double acc = 0.0;
                for (int i : rows) acc += y(i, j) * y(i, k);
                v[idx] = acc / n;
            }
        }
        for (std::size_t l = 0; l < L; ++l) mean[l] += v[l];
        vechs.push_back(std::move(v));
    }
    for (double& m : mean) m /= resamples;

    Matrix v(static_cast<int>(L), static_cast<int>(L));
    for (const auto& s : vechs) {
        for (std::size_t a = 0; a < L; ++a) {
            double da = s[a] - mean[a];
            for (std::size_t b = 0; b <= a; ++b)
                v(static_cast<int>(a), static_cast<int>(b)) += da * (s[b] - mean[b]);
        }
    }
    for (std::size_t a = 0; a < L; ++a)
        for (std::size_t b = 0; b <= a; ++b) {
            double val = v(static_cast<int>(a), static_cast<int>(b)) / (resamples - 1);
            v(static_cast<int>(a), static_cast<int>(b)) = val;
            v(static_cast<int>(b), static_cast<int>(a)) = val;
        }
    return v;
}

}  // namespace splcm
