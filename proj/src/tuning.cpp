#include "splcm/tuning.hpp"

#include <algorithm>
#include <cmath>

namespace splcm {

double bic_score(const SymMatrix& s, const SplcmFit& fit, int n) {
    CholeskyFactor chol(fit.sigma_hat);
    double logdet = chol.logdet();
    // tr(S Sigma^{-1}) = sum_j e_j^T Sigma^{-1} S e_j
    const int p = s.dim();
    double trace = 0.0;
    std::vector<double> col(p);
    for (int j = 0; j < p; ++j) {
        for (int i = 0; i < p; ++i) col[i] = s(i, j);
        auto x = chol.solve(col);
        trace += x[j];
    }
    return n * logdet + n * trace +
           std::log(static_cast<double>(n)) * static_cast<double>(fit.active_set.size());
}

std::vector<double> default_lambda_grid(const SymMatrix& s, const ErrorPrecision& ep,
                                        int points) {
    double lmax = lambda_max_bound(s, ep);
    if (lmax <= 0.0) lmax = 1.0;
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = lmax * std::pow(0.01, static_cast<double>(i) / (points - 1));
    return grid;
}

std::vector<double> default_rho_grid() { return {0.05, 0.1, 0.2, 0.4}; }

namespace {

void sweep_lambdas(const SymMatrix& s, int n, const ErrorPrecision& ep, double rho,
                   const std::vector<double>& lambdas, const SplcmConfig& base_cfg,
                   TuneResult& result) {
    SigmaSolver solver(ep, base_cfg.gamma, base_cfg.solver);
    std::optional<AdmmState> state;
    for (double lambda : lambdas) {
        SplcmConfig cfg = base_cfg;
        cfg.lambda = lambda;
        SplcmFit f = fit_warm(s, ep, cfg, state, &solver);
        TuneCell cell{lambda, rho, bic_score(s, f, n), f.active_set.size(), f.converged};
        result.table.push_back(cell);
        if (!f.converged) continue;
        bool better = result.best_fit.sigma_hat.dim() == 0 || cell.bic < result.best_fit_bic ||
                      (cell.bic == result.best_fit_bic &&
                       (lambda > result.best_lambda ||
                        (lambda == result.best_lambda && rho > result.best_rho)));
        if (better) {
            result.best_lambda = lambda;
            result.best_rho = rho;
            result.best_fit = f;
            result.best_fit_bic = cell.bic;
        }
    }
}

}  // namespace

TuneResult grid_search(const SymMatrix& s, int n, const std::vector<double>& lambdas,
                       const std::vector<double>& rhos, const SplcmConfig& base_cfg) {
    if (lambdas.empty() || rhos.empty())
        throw ParseError("grid_search: empty tuning grid");
    TuneResult result;
    for (double rho : rhos) {
        SymMatrix omega = clime_threshold(clime_solve(s, rho), rho);
        ErrorPrecision ep = build_error_precision(omega, n);
        sweep_lambdas(s, n, ep, rho, lambdas, base_cfg, result);
    }
    if (result.best_fit.sigma_hat.dim() == 0)
        throw NoConvergence("grid_search: no cell converged");
    return result;
}

TuneResult grid_search_fixed_precision(const SymMatrix& s, int n, const ErrorPrecision& ep,
                                       const std::vector<double>& lambdas,
                                       const SplcmConfig& base_cfg) {
    if (lambdas.empty()) throw ParseError("grid_search: empty lambda grid");
    TuneResult result;
    sweep_lambdas(s, n, ep, 0.0, lambdas, base_cfg, result);
    if (result.best_fit.sigma_hat.dim() == 0)
        throw NoConvergence("grid_search: no cell converged");
    return result;
}

}  // namespace splcm
