#include "splcm/estimator.hpp"

#include <algorithm>
#include <cmath>

#include "splcm/kernels.hpp"

namespace splcm {

SymMatrix pd_project(const SymMatrix& a, double delta) {
    // fast path: a Cholesky probe of a - delta I certifies lambda_min >= delta
    // without the O(p^3)-per-sweep eigendecomposition
    if (a.dim() > 0) {
        SymMatrix shifted = a;
        for (int j = 0; j < a.dim(); ++j) shifted.set(j, j, a(j, j) - delta);
        try {
            CholeskyFactor probe(shifted);
            return a;
        } catch (const NotPositiveDefinite&) {
        }
    }
    EigenDecomp ed = sym_eigen(a);
    const int p = a.dim();
    if (!ed.values.empty() && ed.values.back() >= delta) return a;
    Matrix scaled(p, p);
    for (int i = 0; i < p; ++i)
        for (int k = 0; k < p; ++k)
            scaled(i, k) = ed.vectors(i, k) * std::max(ed.values[k], delta);
    SymMatrix out(p);
    for (int j = 0; j < p; ++j)
        for (int k = 0; k <= j; ++k)
            out.set(j, k, kernels::dot(scaled.row(j), ed.vectors.row(k), p));
    return out;
}

SymMatrix soft_threshold_estimate(const SymMatrix& s, double threshold) {
    const int p = s.dim();
    SymMatrix out(p);
    for (int j = 0; j < p; ++j) {
        out.set(j, j, s(j, j));
        for (int k = 0; k < j; ++k) {
            double v = s(j, k);
            double m = std::fabs(v) - threshold;
            out.set(j, k, m > 0.0 ? (v > 0.0 ? m : -m) : 0.0);
        }
    }
    return out;
}

SymMatrix soft_threshold_estimate(const SymMatrix& s, const SymMatrix& thresholds) {
    if (thresholds.dim() != s.dim())
        throw DimensionMismatch("soft_threshold_estimate: threshold matrix mismatch");
    const int p = s.dim();
    SymMatrix out(p);
    for (int j = 0; j < p; ++j) {
        out.set(j, j, s(j, j));
        for (int k = 0; k < j; ++k) {
            double v = s(j, k);
            double m = std::fabs(v) - thresholds(j, k);
            out.set(j, k, m > 0.0 ? (v > 0.0 ? m : -m) : 0.0);
        }
    }
    return out;
}

double lambda_max_bound(const SymMatrix& s, const ErrorPrecision& ep) {
    HalfVec sv = vech(s);
    std::vector<double> w = ep.apply(sv.v);
    IndexPartition part(s.dim());
    double m = 0.0;
    for (std::size_t l : part.o) m = std::max(m, std::fabs(w[l]));
    return m;
}

SigmaSolver::SigmaSolver(const ErrorPrecision& ep, double gamma, SolverPath path)
    : ep_(&ep), gamma_(gamma), path_(path) {
    if (path_ == SolverPath::DenseCholesky) {
        Matrix a = ep.explicit_matrix();
        for (int i = 0; i < a.rows; ++i) a(i, i) += 1.0 / gamma_;
        chol_.emplace(a);
    }
}

std::vector<double> SigmaSolver::solve(const std::vector<double>& rhs) const {
    if (chol_) return chol_->solve(rhs);
    auto op = [this](const std::vector<double>& x, std::vector<double>& out) {
        out = ep_->apply(x);
        kernels::axpy(1.0 / gamma_, x.data(), out.data(), x.size());
    };
    return conjugate_gradient(op, rhs, 1e-8, static_cast<int>(rhs.size()) * 10);
}

SplcmFit fit_warm(const SymMatrix& s, const ErrorPrecision& ep, const SplcmConfig& cfg,
                  std::optional<AdmmState>& state, const SigmaSolver* solver) {
    const int p = s.dim();
    if (ep.dim() != p) throw DimensionMismatch("fit: precision dimension mismatch");
    const std::size_t L = HalfVec::len(p);
    IndexPartition part(p);

    double delta = cfg.delta;
    if (delta <= 0.0) {
        double mean_diag = 0.0;
        for (int j = 0; j < p; ++j) mean_diag += s(j, j);
        delta = 1e-4 * mean_diag / p;
    }

    HalfVec sv = vech(s);
    std::vector<double> rhs_base = ep.apply(sv.v);

    if (!state) {
        AdmmState init;
        init.sigma = vech(pd_project(s, delta)).v;
        init.theta = init.sigma;
        init.eta.assign(L, 0.0);
        state = std::move(init);
    }
    auto& st = *state;

    std::optional<SigmaSolver> local;
    if (!solver) {
        local.emplace(ep, cfg.gamma, cfg.solver);
        solver = &*local;
    }

    const double lam_gam = cfg.lambda * cfg.gamma;
    std::vector<double> rhs(L), tmp(L), theta_new(L);
    double primal = 0.0, dual = 0.0;
    bool converged = false;
    int iter = 0;

    for (iter = 1; iter <= cfg.max_iter; ++iter) {
        // sigma update: linear solve then spectral floor
        for (std::size_t i = 0; i < L; ++i)
            rhs[i] = rhs_base[i] + (st.theta[i] - st.eta[i]) / cfg.gamma;
        std::vector<double> sigma_check = solver->solve(rhs);
        st.sigma = vech(pd_project(unvech(sigma_check), delta)).v;

        // theta update: pinned diagonal, soft-thresholded off-diagonals
        for (std::size_t i = 0; i < L; ++i) tmp[i] = st.sigma[i] + st.eta[i];
        kernels::soft_threshold(tmp.data(), lam_gam, theta_new.data(), L);
        for (std::size_t idx = 0; idx < part.d.size(); ++idx)
            theta_new[part.d[idx]] = sv.v[part.d[idx]];

        // dual update
        double dual_sq = 0.0, primal_sq = 0.0;
        for (std::size_t i = 0; i < L; ++i) {
            double dth = theta_new[i] - st.theta[i];
            dual_sq += dth * dth;
            double r = st.sigma[i] - theta_new[i];
            primal_sq += r * r;
            st.eta[i] += r;
        }
        st.theta = theta_new;
        primal = std::sqrt(primal_sq);
        dual = std::sqrt(dual_sq) / cfg.gamma;

        double eps = cfg.eps_abs * std::sqrt(static_cast<double>(L)) +
                     cfg.eps_rel * std::max(norm2(st.sigma), norm2(st.theta));
        if (primal <= eps && dual <= eps) {
            // accept only once the reported estimate itself meets the floor
            SymMatrix th = unvech(st.theta);
            for (int j = 0; j < p; ++j) th.set(j, j, th(j, j) - (delta - 1e-8));
            try {
                CholeskyFactor probe(th);
                converged = true;
                break;
            } catch (const NotPositiveDefinite&) {
            }
        }
    }

    SplcmFit out;
    out.sigma_hat = unvech(st.theta);
    out.iterations = std::min(iter, cfg.max_iter);
    out.primal_residual = primal;
    out.dual_residual = dual;
    out.converged = converged;
    out.delta_used = delta;
    for (std::size_t l : part.o)
        if (st.theta[l] != 0.0) out.active_set.push_back(l);
    out.min_eigenvalue = sym_eigen(out.sigma_hat).values.back();
    return out;
}

SplcmFit fit(const SymMatrix& s, const ErrorPrecision& ep, const SplcmConfig& cfg) {
    std::optional<AdmmState> state;
    return fit_warm(s, ep, cfg, state);
}

}  // namespace splcm
