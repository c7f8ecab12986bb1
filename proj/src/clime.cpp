#include "splcm/clime.hpp"

#include <cmath>
#include <string>

#include "splcm/densela.hpp"

namespace splcm {

SymMatrix clime_solve(const SymMatrix& s, double rho, Matrix* raw_columns) {
    if (rho < 0.0) throw Infeasible("clime_solve: rho must be nonnegative");
    const int p = s.dim();

    // Column LP: beta = u - v, u,v >= 0, minimize 1^T(u+v) subject to
    //   S(u - v) <= e_k + rho,  -S(u - v) <= -e_k + rho.
    Matrix a(2 * p, 2 * p);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            a(i, j) = s(i, j);
            a(i, p + j) = -s(i, j);
            a(p + i, j) = -s(i, j);
            a(p + i, p + j) = s(i, j);
        }
    }
    std::vector<double> c(2 * p, 1.0);

    Matrix beta(p, p);  // column k in column k
    for (int k = 0; k < p; ++k) {
        std::vector<double> b(2 * p);
        for (int i = 0; i < p; ++i) {
            b[i] = rho + (i == k ? 1.0 : 0.0);
            b[p + i] = rho - (i == k ? 1.0 : 0.0);
        }
        LpResult r;
        try {
            r = simplex_lp(c, a, b);
        } catch (const Infeasible&) {
            throw Infeasible("clime_solve: column " + std::to_string(k) +
                             " infeasible at rho = " + std::to_string(rho));
        }
        for (int j = 0; j < p; ++j) beta(j, k) = r.x[j] - r.x[p + j];
    }

    // min-magnitude symmetrization
    SymMatrix omega(p);
    for (int j = 0; j < p; ++j) {
        for (int k = 0; k <= j; ++k) {
            double x = beta(j, k), y = beta(k, j);
            omega.set(j, k, std::fabs(x) <= std::fabs(y) ? x : y);
        }
    }

    // feasibility of the pre-symmetrization solution
    double worst = 0.0;
    for (int i = 0; i < p; ++i) {
        for (int k = 0; k < p; ++k) {
            double v = -(i == k ? 1.0 : 0.0);
            for (int j = 0; j < p; ++j) v += s(i, j) * beta(j, k);
            worst = std::max(worst, std::fabs(v));
        }
    }
    if (worst > rho + 1e-8)
        throw Infeasible("clime_solve: LP returned infeasible columns, residual " +
                         std::to_string(worst));
    if (raw_columns) *raw_columns = beta;
    return omega;
}

SymMatrix clime_threshold(const SymMatrix& omega_tilde, double tau) {
    const int p = omega_tilde.dim();
    SymMatrix out(p);
    for (int j = 0; j < p; ++j)
        for (int k = 0; k <= j; ++k) {
            double v = omega_tilde(j, k);
            out.set(j, k, std::fabs(v) < tau ? 0.0 : v);
        }
    return out;
}

}  // namespace splcm
