#include "splcm/simbench.hpp"

#include <cmath>
#include <string>

#include "splcm/densela.hpp"
#include "splcm/kernels.hpp"
#include "splcm/rng.hpp"

namespace splcm {

namespace {

// Off-diagonal pattern only; diagonal filled in by the conditioning step.
SymMatrix offdiag_pattern(const CovModelSpec& spec, std::uint64_t seed) {
    const int p = spec.p;
    SymMatrix m(p);
    switch (spec.kind) {
        case CovModel::MA1:
            for (int j = 1; j < p; ++j) m.set(j, j - 1, spec.value);
            break;
        case CovModel::Random: {
            CounterRng rng(seed);
            for (int j = 1; j < p; ++j)
                for (int k = 0; k < j; ++k) {
                    double u = rng.uniform01();
                    double sgn = rng.uniform01() < 0.5 ? 1.0 : -1.0;
                    if (u < spec.prob) m.set(j, k, sgn * std::fabs(spec.value));
                }
            break;
        }
        case CovModel::Hub: {
            if (p % 5 != 0)
                throw HubDivisibility("hub model requires p divisible by 5, got p = " +
                                      std::to_string(p));
            CounterRng rng(seed);
            const int block = p / 5;
            // hubs at 1-indexed j with mod(j, p/5) = 1, i.e. rows 1, 1+p/5, ...
            for (int h = 0; h < 5; ++h) {
                int j = h * block;  // 0-indexed hub row
                for (int k = j + 1; k <= j + block - 1 && k < p; ++k) {
                    double sgn = rng.uniform01() < 0.5 ? 1.0 : -1.0;
                    m.set(k, j, sgn * std::fabs(spec.value));
                }
            }
            break;
        }
    }
    return m;
}

bool has_offdiag(const SymMatrix& m) {
    for (int j = 1; j < m.dim(); ++j)
        for (int k = 0; k < j; ++k)
            if (m(j, k) != 0.0) return true;
    return false;
}

}  // namespace

SymMatrix gen_cov(const CovModelSpec& spec) {
    if (spec.p < 2) throw DimensionMismatch("gen_cov: p must be at least 2");
    SymMatrix off = offdiag_pattern(spec, spec.seed);
    if (spec.kind == CovModel::Random) {
        // degenerate all-zero draws are redrawn with the next seed
        std::uint64_t seed = spec.seed;
        while (!has_offdiag(off)) off = offdiag_pattern(spec, ++seed);
    }

    // Eigenvalues of off + cI are eig(off) + c, so the target ratio
    // (emax + c) / (emin + c) = p is solved for c by bisection.
    EigenDecomp ed = sym_eigen(off);
    const double emax = ed.values.front();
    const double emin = ed.values.back();
    const double ratio = static_cast<double>(spec.p);
    if (emax == emin) {
        // pattern is a multiple of identity only in degenerate tests
        throw ConditioningFailure("gen_cov: flat spectrum, ratio p unreachable");
    }
    // zero-trace pattern: emin < 0 < emax, f decreases from +inf at the
    // pole c = -emin to 1 - p < 0 at infinity, so the root is bracketed
    auto f = [&](double c) { return (emax + c) / (emin + c) - ratio; };
    double lo = -emin + 1e-12 * std::max(1.0, std::fabs(emin));
    double hi = std::max(1.0, -emin + (emax - emin));
    while (f(hi) > 0.0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
        if ((hi - lo) <= 1e-14 * std::max(1.0, std::fabs(hi))) break;
    }
    const double c = 0.5 * (lo + hi);
    if (!(emin + c > 0.0))
        throw ConditioningFailure("gen_cov: no diagonal constant achieves ratio p");

    SymMatrix sigma = off;
    for (int j = 0; j < spec.p; ++j) sigma.set(j, j, c);
    return sigma;
}

GaussianSample sample_gaussian(const SymMatrix& sigma, int n, std::uint64_t seed) {
    const int p = sigma.dim();
    CholeskyFactor chol(sigma);
    const Matrix& l = chol.lower();

    CounterRng rng(seed);
    GaussianSample out;
    out.y = Matrix(n, p);
    std::vector<double> z(p);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < p; ++j) z[j] = rng.normal();
        for (int j = 0; j < p; ++j)
            out.y(i, j) = kernels::dot(l.row(j), z.data(), static_cast<std::size_t>(j) + 1);
    }

    out.s = SymMatrix(p);
    for (int j = 0; j < p; ++j) {
        for (int k = 0; k <= j; ++k) {
            double acc = 0.0;
            for (int i = 0; i < n; ++i) acc += out.y(i, j) * out.y(i, k);
            out.s.set(j, k, acc / n);
        }
    }
    return out;
}

MetricReport evaluate(const SymMatrix& sigma_hat, const SymMatrix& sigma_star,
                      const std::vector<std::size_t>* active_set) {
    const int p = sigma_star.dim();
    if (sigma_hat.dim() != p) throw DimensionMismatch("evaluate: dimension mismatch");

    MetricReport r;
    Matrix diff(p, p);
    double off_sq = 0.0;
    for (int j = 0; j < p; ++j)
        for (int k = 0; k < p; ++k) {
            double d = sigma_hat(j, k) - sigma_star(j, k);
            diff(j, k) = d;
            if (j > k) off_sq += d * d;
        }
    r.offdiag_l2 = std::sqrt(off_sq);
    r.frobenius = std::sqrt(kernels::dot(diff.a.data(), diff.a.data(), diff.a.size()));
    r.opnorm = operator_norm(diff);

    // nonzero indicator for the estimate on half-vector [o] positions
    std::vector<bool> est_nz(HalfVec::len(p), false);
    if (active_set) {
        for (std::size_t l : *active_set) est_nz[l] = true;
    } else {
        for (int j = 1; j < p; ++j)
            for (int k = 0; k < j; ++k)
                if (std::fabs(sigma_hat(j, k)) >= 1e-12) est_nz[HalfVec::pos(j, k)] = true;
    }

    std::size_t tp = 0, fp = 0, pos = 0, neg = 0;
    for (int j = 1; j < p; ++j) {
        for (int k = 0; k < j; ++k) {
            bool truth = sigma_star(j, k) != 0.0;
            bool est = est_nz[HalfVec::pos(j, k)];
            if (truth) {
                ++pos;
                if (est) ++tp;
            } else {
                ++neg;
                if (est) ++fp;
            }
            if (est) ++r.est_support;
        }
    }
    r.true_support = pos;
    r.tpr = pos == 0 ? 0.0 : static_cast<double>(tp) / pos;
    r.fpr = neg == 0 ? 0.0 : static_cast<double>(fp) / neg;
    return r;
}

std::vector<RocPoint> roc_curve(const SymMatrix& s, const ErrorPrecision& ep,
                                const std::vector<double>& lambdas, const SplcmConfig& base_cfg,
                                const SymMatrix& sigma_star) {
    std::vector<RocPoint> points;
    SigmaSolver solver(ep, base_cfg.gamma, base_cfg.solver);
    std::optional<AdmmState> state;
    for (double lambda : lambdas) {
        SplcmConfig cfg = base_cfg;
        cfg.lambda = lambda;
        SplcmFit f = fit_warm(s, ep, cfg, state, &solver);
        MetricReport m = evaluate(f.sigma_hat, sigma_star, &f.active_set);
        points.push_back({lambda, m.fpr, m.tpr});
    }
    return points;
}

}  // namespace splcm
