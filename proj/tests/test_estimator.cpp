#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <optional>

#include "splcm/densela.hpp"
#include "splcm/estimator.hpp"
#include "splcm/rng.hpp"
#include "splcm/wishart.hpp"

using namespace splcm;

namespace {

SymMatrix random_pd(int p, std::uint64_t seed, double ridge = 1.0) {
    CounterRng rng(seed);
    Matrix a(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) a(i, j) = rng.normal();
    SymMatrix s(p);
    for (int j = 0; j < p; ++j)
        for (int k = 0; k <= j; ++k) {
            double v = 0.0;
            for (int i = 0; i < p; ++i) v += a(i, j) * a(i, k);
            s.set(j, k, v / p + (j == k ? ridge : 0.0));
        }
    return s;
}

double frob_diff(const SymMatrix& a, const SymMatrix& b) {
    double acc = 0.0;
    for (int j = 0; j < a.dim(); ++j)
        for (int k = 0; k < a.dim(); ++k) {
            double d = a(j, k) - b(j, k);
            acc += d * d;
        }
    return std::sqrt(acc);
}

}  // namespace

TEST_CASE("pd_project clamps eigenvalues from below") {
    SymMatrix pd = random_pd(5, 3);
    SymMatrix same = pd_project(pd, 1e-6);
    CHECK(frob_diff(pd, same) <= 1e-10);

    SymMatrix d(2);
    d.set(0, 0, 1.0);
    d.set(1, 1, -1.0);
    SymMatrix clamped = pd_project(d, 0.01);
    CHECK(clamped(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(clamped(1, 1) == doctest::Approx(0.01).epsilon(1e-9));
    CHECK(std::fabs(clamped(0, 1)) <= 1e-12);

    SymMatrix offd(2);
    offd.set(1, 0, 1.0);
    SymMatrix proj = pd_project(offd, 0.0);
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) CHECK(proj(j, k) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("soft threshold reference estimate") {
    Matrix m(2, 2);
    m(0, 0) = 2.0;
    m(1, 0) = 0.25;
    m(1, 1) = 3.0;
    SymMatrix s = SymMatrix::from_lower(m);

    SymMatrix zero = soft_threshold_estimate(s, 0.0);
    CHECK(frob_diff(zero, s) == 0.0);

    SymMatrix t = soft_threshold_estimate(s, 0.3);
    CHECK(t(0, 0) == 2.0);
    CHECK(t(1, 1) == 3.0);
    CHECK(t(1, 0) == 0.0);

    m(1, 0) = 0.4;
    SymMatrix s2 = SymMatrix::from_lower(m);
    SymMatrix t2 = soft_threshold_estimate(s2, 0.3);
    CHECK(t2(1, 0) == doctest::Approx(0.1).epsilon(1e-14));

    // per-entry threshold matrix variant
    SymMatrix th(2);
    th.set(1, 0, 0.5);
    SymMatrix t3 = soft_threshold_estimate(s2, th);
    CHECK(t3(1, 0) == 0.0);
    CHECK(t3(0, 0) == 2.0);
}

TEST_CASE("large lambda shrinks all off-diagonals to zero") {
    SymMatrix s = random_pd(6, 11);
    ErrorPrecision ep(SymMatrix::identity(6), 40);
    double bound = lambda_max_bound(s, ep);

    SplcmConfig cfg;
    cfg.lambda = bound + 0.01;
    SplcmFit f = fit(s, ep, cfg);
    CHECK(f.converged);
    CHECK(f.active_set.empty());
    for (int j = 0; j < 6; ++j) {
        CHECK(f.sigma_hat(j, j) == s(j, j));  // bitwise pin
        for (int k = 0; k < j; ++k) CHECK(f.sigma_hat(j, k) == 0.0);
    }

    // just below the bound the support is nonempty
    cfg.lambda = bound * 0.9;
    SplcmFit g = fit(s, ep, cfg);
    CHECK(!g.active_set.empty());
}

TEST_CASE("lambda zero returns the projected sample covariance") {
    SymMatrix s = random_pd(5, 21);
    ErrorPrecision ep(sym_inverse(s), 60);
    SplcmConfig cfg;
    cfg.lambda = 0.0;
    SplcmFit f = fit(s, ep, cfg);
    CHECK(f.converged);
    CHECK(frob_diff(f.sigma_hat, pd_project(s, f.delta_used)) <= 1e-6);
}

TEST_CASE("identity-precision fit matches the soft-threshold closed form") {
    SymMatrix s = random_pd(7, 33, 3.0);  // well conditioned so PD is non-binding
    ErrorPrecision ep(SymMatrix::identity(7), 50);
    for (double lambda : {0.02, 0.1, 0.3}) {
        SplcmConfig cfg;
        cfg.lambda = lambda;
        cfg.eps_abs = 1e-9;
        cfg.eps_rel = 1e-8;
        cfg.max_iter = 5000;
        SplcmFit f = fit(s, ep, cfg);
        REQUIRE(f.converged);
        SymMatrix ref = soft_threshold_estimate(s, lambda);
        for (int j = 0; j < 7; ++j)
            for (int k = 0; k < j; ++k) CHECK(std::fabs(f.sigma_hat(j, k) - ref(j, k)) <= 1e-6);
    }
}

TEST_CASE("diagonal is pinned bitwise across a lambda grid") {
    SymMatrix s = random_pd(8, 55);
    ErrorPrecision ep(sym_inverse(s), 30);
    double bound = lambda_max_bound(s, ep);
    std::optional<AdmmState> state;
    SigmaSolver solver(ep, 1.0, SolverPath::DenseCholesky);
    for (int i = 0; i < 20; ++i) {
        SplcmConfig cfg;
        cfg.lambda = bound * std::pow(0.01, i / 19.0);
        SplcmFit f = fit_warm(s, ep, cfg, state, &solver);
        for (int j = 0; j < 8; ++j) CHECK(f.sigma_hat(j, j) == s(j, j));
        CHECK(f.min_eigenvalue >= f.delta_used - 1e-8);
    }
}

TEST_CASE("dense and matrix-free solver paths agree") {
    SymMatrix s = random_pd(12, 71);
    ErrorPrecision ep(sym_inverse(s), 45, PrecisionMode::Explicit, 80);
    SplcmConfig dense;
    dense.lambda = 0.08;
    SplcmConfig cg = dense;
    cg.solver = SolverPath::MatrixFreeCg;
    SplcmFit fd = fit(s, ep, dense);
    SplcmFit fc = fit(s, ep, cg);
    CHECK(fd.converged);
    CHECK(fc.converged);
    CHECK(frob_diff(fd.sigma_hat, fc.sigma_hat) <= 1e-5);
}

TEST_CASE("gamma choices land on the same fixed point") {
    SymMatrix s = random_pd(5, 81);
    ErrorPrecision ep(sym_inverse(s), 35);
    SymMatrix fits[3];
    int i = 0;
    for (double gamma : {0.1, 1.0, 10.0}) {
        SplcmConfig cfg;
        cfg.lambda = 0.05;
        cfg.gamma = gamma;
        cfg.eps_abs = 1e-9;
        cfg.eps_rel = 1e-8;
        cfg.max_iter = 20000;
        SplcmFit f = fit(s, ep, cfg);
        REQUIRE(f.converged);
        fits[i++] = f.sigma_hat;
    }
    CHECK(frob_diff(fits[0], fits[1]) <= 1e-5);
    CHECK(frob_diff(fits[1], fits[2]) <= 1e-5);
}

TEST_CASE("sigma solver reduces to theta minus eta as gamma vanishes") {
    // ((1/n)V^-1 + (1/gamma) I) x = (1/n)V^-1 s + (theta - eta)/gamma,
    // so for tiny gamma x is dominated by theta - eta.
    const int p = 4;
    SymMatrix s = random_pd(p, 91);
    ErrorPrecision ep(sym_inverse(s), 25);
    SigmaSolver solver(ep, 1e-8, SolverPath::DenseCholesky);
    const std::size_t L = HalfVec::len(p);
    CounterRng rng(17);
    std::vector<double> theta(L), eta(L);
    for (std::size_t l = 0; l < L; ++l) {
        theta[l] = rng.normal();
        eta[l] = 0.1 * rng.normal();
    }
    std::vector<double> rhs = ep.apply(vech(s).v);
    for (std::size_t l = 0; l < L; ++l) rhs[l] += (theta[l] - eta[l]) / 1e-8;
    std::vector<double> x = solver.solve(rhs);
    for (std::size_t l = 0; l < L; ++l) CHECK(std::fabs(x[l] - (theta[l] - eta[l])) <= 1e-4);
}

TEST_CASE("fixed-point residuals at convergence") {
    SymMatrix s = random_pd(9, 123, 2.0);
    ErrorPrecision ep(sym_inverse(s), 70);
    SplcmConfig cfg;
    cfg.lambda = 0.05;
    cfg.eps_abs = 1e-9;
    cfg.eps_rel = 1e-8;
    cfg.max_iter = 10000;
    SplcmFit f = fit(s, ep, cfg);
    REQUIRE(f.converged);
    CHECK(f.min_eigenvalue > f.delta_used);  // PD constraint inactive here

    // subgradient residual of the [o] block: (1/n)V^-1(sigma - s)|_o + lambda u
    HalfVec diff(9);
    HalfVec sv = vech(s), fv = vech(f.sigma_hat);
    for (std::size_t l = 0; l < diff.v.size(); ++l) diff.v[l] = fv.v[l] - sv.v[l];
    HalfVec g = ep.apply(diff);
    IndexPartition part(9);
    for (auto l : part.o) {
        double grad = g.v[l];
        if (fv.v[l] > 1e-10)
            CHECK(std::fabs(grad + cfg.lambda) <= 1e-3);
        else if (fv.v[l] < -1e-10)
            CHECK(std::fabs(grad - cfg.lambda) <= 1e-3);
        else
            CHECK(std::fabs(grad) <= cfg.lambda + 1e-3);
    }
}

TEST_CASE("active set matches the exact zeros of the estimate") {
    SymMatrix s = random_pd(6, 140);
    ErrorPrecision ep(SymMatrix::identity(6), 40);
    SplcmConfig cfg;
    cfg.lambda = 0.15;
    SplcmFit f = fit(s, ep, cfg);
    IndexPartition part(6);
    HalfVec fv = vech(f.sigma_hat);
    std::vector<std::size_t> nz;
    for (auto l : part.o)
        if (fv.v[l] != 0.0) nz.push_back(l);
    CHECK(f.active_set == nz);
}
