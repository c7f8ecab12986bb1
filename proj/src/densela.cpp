#include "splcm/densela.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "splcm/kernels.hpp"

namespace splcm {

double norm2(const std::vector<double>& x) {
    return std::sqrt(kernels::dot(x.data(), x.data(), x.size()));
}

double norm_inf(const std::vector<double>& x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::fabs(v));
    return m;
}

double frobenius(const SymMatrix& a) {
    const auto& d = a.data();
    return std::sqrt(kernels::dot(d.data(), d.data(), d.size()));
}

EigenDecomp sym_eigen(const SymMatrix& a) {
    const int p = a.dim();
    Matrix m(p, p);
    for (int j = 0; j < p; ++j)
        for (int k = 0; k < p; ++k) m(j, k) = a(j, k);
    Matrix q(p, p);
    for (int j = 0; j < p; ++j) q(j, j) = 1.0;

    double fro = frobenius(a);
    const double thresh = 1e-12 * std::max(fro, 1.0);
    const int max_sweeps = 30;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int j = 0; j < p; ++j)
            for (int k = j + 1; k < p; ++k) off += m(j, k) * m(j, k);
        if (std::sqrt(2.0 * off) <= thresh) break;
        if (sweep == max_sweeps - 1)
            throw NoConvergence("sym_eigen: Jacobi sweep budget exhausted");

        for (int j = 0; j < p - 1; ++j) {
            for (int k = j + 1; k < p; ++k) {
                double ajk = m(j, k);
                if (std::fabs(ajk) <= thresh / (p * p)) continue;
                double tau = (m(k, k) - m(j, j)) / (2.0 * ajk);
                double t = (tau >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                for (int i = 0; i < p; ++i) {
                    double mij = m(i, j), mik = m(i, k);
                    m(i, j) = c * mij - s * mik;
                    m(i, k) = s * mij + c * mik;
                }
                for (int i = 0; i < p; ++i) {
                    double mji = m(j, i), mki = m(k, i);
                    m(j, i) = c * mji - s * mki;
                    m(k, i) = s * mji + c * mki;
                }
                for (int i = 0; i < p; ++i) {
                    double qij = q(i, j), qik = q(i, k);
                    q(i, j) = c * qij - s * qik;
                    q(i, k) = s * qij + c * qik;
                }
            }
        }
    }

    std::vector<int> order(p);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return m(x, x) > m(y, y); });

    EigenDecomp out;
    out.values.resize(p);
    out.vectors = Matrix(p, p);
    for (int j = 0; j < p; ++j) {
        out.values[j] = m(order[j], order[j]);
        for (int i = 0; i < p; ++i) out.vectors(i, j) = q(i, order[j]);
    }
    return out;
}

void CholeskyFactor::factor(const Matrix& a) {
    n_ = a.rows;
    l_ = Matrix(n_, n_);
    for (int j = 0; j < n_; ++j) {
        for (int k = 0; k <= j; ++k) {
            double sum = a(j, k) - kernels::dot(l_.row(j), l_.row(k), k);
            if (j == k) {
                if (sum <= 0.0)
                    throw NotPositiveDefinite("cholesky: pivot " + std::to_string(j) +
                                              " not positive");
                l_(j, j) = std::sqrt(sum);
            } else {
                l_(j, k) = sum / l_(k, k);
            }
        }
    }
    lt_ = Matrix(n_, n_);
    for (int j = 0; j < n_; ++j)
        for (int k = 0; k <= j; ++k) lt_(k, j) = l_(j, k);
}

CholeskyFactor::CholeskyFactor(const SymMatrix& a) {
    Matrix m(a.dim(), a.dim());
    for (int j = 0; j < a.dim(); ++j)
        for (int k = 0; k < a.dim(); ++k) m(j, k) = a(j, k);
    factor(m);
}

CholeskyFactor::CholeskyFactor(const Matrix& a) {
    if (a.rows != a.cols) throw DimensionMismatch("cholesky: matrix not square");
    factor(a);
}

std::vector<double> CholeskyFactor::solve(const std::vector<double>& b) const {
    if (static_cast<int>(b.size()) != n_)
        throw DimensionMismatch("cholesky solve: size mismatch");
    std::vector<double> y(n_);
    for (int i = 0; i < n_; ++i)
        y[i] = (b[i] - kernels::dot(l_.row(i), y.data(), i)) / l_(i, i);
    std::vector<double> x(n_);
    for (int i = n_ - 1; i >= 0; --i) {
        double sum = y[i] - kernels::dot(lt_.row(i) + i + 1, x.data() + i + 1, n_ - i - 1);
        x[i] = sum / l_(i, i);
    }
    return x;
}

double CholeskyFactor::logdet() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += std::log(l_(i, i));
    return 2.0 * s;
}

std::vector<double> cholesky_solve(const SymMatrix& a, const std::vector<double>& b) {
    return CholeskyFactor(a).solve(b);
}

SymMatrix sym_inverse(const SymMatrix& a) {
    CholeskyFactor f(a);
    const int p = a.dim();
    SymMatrix inv(p);
    std::vector<double> e(p, 0.0);
    for (int k = 0; k < p; ++k) {
        e[k] = 1.0;
        auto col = f.solve(e);
        e[k] = 0.0;
        for (int j = k; j < p; ++j) inv.set(j, k, col[j]);
    }
    return inv;
}

std::vector<double> conjugate_gradient(const LinearOperator& op, const std::vector<double>& b,
                                       double tol, int max_iter) {
    const std::size_t n = b.size();
    std::vector<double> x(n, 0.0), r = b, pvec = b, ap(n);
    double bnorm = norm2(b);
    if (bnorm == 0.0) return x;
    double rr = kernels::dot(r.data(), r.data(), n);
    for (int it = 0; it < max_iter; ++it) {
        if (std::sqrt(rr) <= tol * bnorm) return x;
        op(pvec, ap);
        double alpha = rr / kernels::dot(pvec.data(), ap.data(), n);
        kernels::axpy(alpha, pvec.data(), x.data(), n);
        kernels::axpy(-alpha, ap.data(), r.data(), n);
        double rr_new = kernels::dot(r.data(), r.data(), n);
        double beta = rr_new / rr;
        for (std::size_t i = 0; i < n; ++i) pvec[i] = r[i] + beta * pvec[i];
        rr = rr_new;
    }
    if (std::sqrt(rr) <= tol * bnorm) return x;
    throw MaxIterations("conjugate_gradient: residual target not reached");
}

namespace {
double power_iteration_sqrt(const std::function<void(const std::vector<double>&, std::vector<double>&)>& gram,
                            std::size_t n, double tol) {
    std::vector<double> v(n);
    // fixed deterministic probe
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(1.7 * (static_cast<double>(i) + 1.0));
    double nv = norm2(v);
    for (auto& e : v) e /= nv;
    std::vector<double> w(n);
    double lambda = 0.0;
    for (int it = 0; it < 10000; ++it) {
        gram(v, w);
        double next = kernels::dot(v.data(), w.data(), n);
        double wn = norm2(w);
        if (wn == 0.0) return 0.0;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wn;
        if (it > 0 && std::fabs(next - lambda) <= tol * std::max(std::fabs(next), 1e-300)) {
            return std::sqrt(std::max(next, 0.0));
        }
        lambda = next;
    }
    throw NoConvergence("operator_norm: power iteration did not settle");
}
}  // namespace

double operator_norm(const Matrix& x, double tol) {
    const std::size_t n = static_cast<std::size_t>(x.cols);
    if (n == 0) return 0.0;
    std::vector<double> tmp(x.rows);
    auto gram = [&](const std::vector<double>& v, std::vector<double>& out) {
        for (int i = 0; i < x.rows; ++i) tmp[i] = kernels::dot(x.row(i), v.data(), n);
        out.assign(n, 0.0);
        for (int i = 0; i < x.rows; ++i) kernels::axpy(tmp[i], x.row(i), out.data(), n);
    };
    return power_iteration_sqrt(gram, n, tol);
}

double operator_norm(const SymMatrix& x, double tol) {
    Matrix m(x.dim(), x.dim());
    for (int j = 0; j < x.dim(); ++j)
        for (int k = 0; k < x.dim(); ++k) m(j, k) = x(j, k);
    return operator_norm(m, tol);
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw DimensionMismatch("matmul: inner dimensions differ");
    // transpose b so rows are contiguous for the dot kernel
    Matrix bt(b.cols, b.rows);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) bt(j, i) = b(i, j);
    Matrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j)
            c(i, j) = kernels::dot(a.row(i), bt.row(j), static_cast<std::size_t>(a.cols));
    return c;
}

Matrix sym_matmul(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("sym_matmul: dimensions differ");
    const int p = a.dim();
    Matrix c(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            c(i, j) = kernels::dot(a.row(i), b.row(j), static_cast<std::size_t>(p));
    return c;
}

std::vector<double> matvec(const Matrix& a, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != a.cols) throw DimensionMismatch("matvec: size mismatch");
    std::vector<double> y(a.rows);
    for (int i = 0; i < a.rows; ++i) y[i] = kernels::dot(a.row(i), x.data(), x.size());
    return y;
}

std::vector<double> sym_matvec(const SymMatrix& a, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != a.dim()) throw DimensionMismatch("sym_matvec: size mismatch");
    std::vector<double> y(a.dim());
    for (int i = 0; i < a.dim(); ++i) y[i] = kernels::dot(a.row(i), x.data(), x.size());
    return y;
}

LpResult simplex_lp(const std::vector<double>& c, const Matrix& a, const std::vector<double>& b) {
    const int m = a.rows;
    const int n = a.cols;
    if (static_cast<int>(c.size()) != n || static_cast<int>(b.size()) != m)
        throw DimensionMismatch("simplex_lp: shape mismatch");

    // Tableau columns: n structural, m slack, up to m artificial, rhs.
    // Rows with negative rhs are negated (slack becomes surplus) and get an
    // artificial variable for phase one.
    std::vector<int> art_of_row(m, -1);
    int n_art = 0;
    for (int i = 0; i < m; ++i)
        if (b[i] < 0.0) art_of_row[i] = n_art++;

    const int cols = n + m + n_art + 1;
    Matrix t(m + 1, cols);
    std::vector<int> basis(m);

    for (int i = 0; i < m; ++i) {
        double sgn = b[i] < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < n; ++j) t(i, j) = sgn * a(i, j);
        t(i, n + i) = sgn;  // slack (surplus when negated)
        t(i, cols - 1) = sgn * b[i];
        if (art_of_row[i] >= 0) {
            t(i, n + m + art_of_row[i]) = 1.0;
            basis[i] = n + m + art_of_row[i];
        } else {
            basis[i] = n + i;
        }
    }

    auto pivot = [&](int pr, int pc) {
        double pv = t(pr, pc);
        for (int j = 0; j < cols; ++j) t(pr, j) /= pv;
        for (int i = 0; i <= m; ++i) {
            if (i == pr) continue;
            double f = t(i, pc);
            if (f == 0.0) continue;
            for (int j = 0; j < cols; ++j) t(i, j) -= f * t(pr, j);
        }
        basis[pr] = pc;
    };

    // Bland's rule: entering = lowest-index negative reduced cost, leaving =
    // min ratio with lowest basis index on ties.
    auto run = [&](int active_cols) {
        const int iter_cap = 50000;
        for (int it = 0; it < iter_cap; ++it) {
            int pc = -1;
            for (int j = 0; j < active_cols; ++j) {
                if (t(m, j) < -1e-10) {
                    pc = j;
                    break;
                }
            }
            if (pc < 0) return;
            int pr = -1;
            double best = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m; ++i) {
                if (t(i, pc) > 1e-12) {
                    double ratio = t(i, cols - 1) / t(i, pc);
                    if (ratio < best - 1e-12 ||
                        (ratio < best + 1e-12 && (pr < 0 || basis[i] < basis[pr]))) {
                        best = ratio;
                        pr = i;
                    }
                }
            }
            if (pr < 0) throw Unbounded("simplex_lp: unbounded direction");
            pivot(pr, pc);
        }
        throw MaxIterations("simplex_lp: pivot cap exceeded");
    };

    if (n_art > 0) {
        // phase one objective: minimize artificial sum
        for (int j = 0; j < cols; ++j) t(m, j) = 0.0;
        for (int i = 0; i < m; ++i)
            if (art_of_row[i] >= 0)
                for (int j = 0; j < cols; ++j) t(m, j) -= t(i, j);
        // artificials carry unit cost, so their reduced cost starts at zero
        for (int k = 0; k < n_art; ++k) t(m, n + m + k) += 1.0;
        run(n + m + n_art);
        if (t(m, cols - 1) < -1e-7) throw Infeasible("simplex_lp: phase one optimum nonzero");
        // drive any artificial still in the basis out if possible
        for (int i = 0; i < m; ++i) {
            if (basis[i] >= n + m) {
                for (int j = 0; j < n + m; ++j) {
                    if (std::fabs(t(i, j)) > 1e-9) {
                        pivot(i, j);
                        break;
                    }
                }
            }
        }
    }

    // phase two objective row
    for (int j = 0; j < cols; ++j) t(m, j) = 0.0;
    for (int j = 0; j < n; ++j) t(m, j) = c[j];
    for (int i = 0; i < m; ++i) {
        if (basis[i] < n && std::fabs(t(m, basis[i])) > 0.0) {
            double f = t(m, basis[i]);
            for (int j = 0; j < cols; ++j) t(m, j) -= f * t(i, j);
        }
    }
    run(n + m);

    LpResult out;
    out.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) out.x[basis[i]] = t(i, cols - 1);
    out.objective = kernels::dot(c.data(), out.x.data(), n);
    return out;
}

}  // namespace splcm
