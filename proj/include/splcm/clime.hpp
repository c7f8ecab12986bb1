#pragma once

#include "splcm/symvec.hpp"

// CLIME estimation of the inverse covariance: column-wise l1 minimization
// subject to ||S beta - e_k||_inf <= rho, solved as a dense LP per column,
// followed by min-magnitude symmetrization and hard thresholding.

namespace splcm {

struct ClimeConfig {
    double rho = 0.1;
    double tau = 0.1;
    bool symmetrize = true;
};

// Solves each column LP (split positive/negative parts, 2p variables and 2p
// rows) and symmetrizes by keeping the smaller-magnitude member of each
// (j,k)/(k,j) pair. The column-stacked LP solution satisfies
// ||S B - I||_max <= rho + 1e-8, verified before returning; symmetrization
// does not preserve that constraint in general. raw_columns, when non-null,
// receives the unsymmetrized columns.
SymMatrix clime_solve(const SymMatrix& s, double rho, Matrix* raw_columns = nullptr);

// Hard thresholding on magnitudes: entries with |w_jk| < tau are zeroed.
SymMatrix clime_threshold(const SymMatrix& omega_tilde, double tau);

}  // namespace splcm
