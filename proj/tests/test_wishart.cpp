#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "splcm/densela.hpp"
#include "splcm/errors.hpp"
#include "splcm/rng.hpp"
#include "splcm/symvec.hpp"
#include "splcm/wishart.hpp"

using namespace splcm;

namespace {

SymMatrix random_pd(int p, std::uint64_t seed, double ridge = 0.5) {
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

std::vector<double> random_vec(std::size_t n, std::uint64_t seed) {
    CounterRng rng(seed);
    std::vector<double> v(n);
    for (auto& x : v) x = rng.normal();
    return v;
}

}  // namespace

TEST_CASE("error covariance of vech(S) for identity sigma") {
    Matrix v = build_error_cov(SymMatrix::identity(2), 10);
    REQUIRE(v.rows == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double want = i != j ? 0.0 : (i == 1 ? 0.1 : 0.2);
            CHECK(v(i, j) == doctest::Approx(want).epsilon(1e-14));
        }

    // any p: diagonal-pair variances 2/n, off-diagonal-pair variances 1/n
    for (int p : {3, 6}) {
        Matrix vp = build_error_cov(SymMatrix::identity(p), 25);
        IndexPartition part(p);
        for (auto l : part.d) CHECK(vp(l, l) == doctest::Approx(2.0 / 25).epsilon(1e-14));
        for (auto l : part.o) CHECK(vp(l, l) == doctest::Approx(1.0 / 25).epsilon(1e-14));
    }
}

TEST_CASE("error covariance cap") {
    CHECK_THROWS_AS(build_error_cov(SymMatrix::identity(61), 10), DimensionTooLarge);
    CHECK_NOTHROW(build_error_cov(SymMatrix::identity(61), 10, 80));
}

TEST_CASE("error covariance matches a Monte-Carlo oracle at p=3") {
    const int p = 3, n = 50;
    const int reps = 200000;
    SymMatrix sigma = random_pd(p, 99);
    Matrix v = build_error_cov(sigma, n);
    const std::size_t L = HalfVec::len(p);

    CholeskyFactor chol(sigma);
    Matrix lower = chol.lower();
    CounterRng rng(2024);
    std::vector<double> mean(L, 0.0);
    Matrix second(static_cast<int>(L), static_cast<int>(L));
    std::vector<double> y(p), z(p);
    for (int r = 0; r < reps; ++r) {
        SymMatrix s(p);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < p; ++j) z[j] = rng.normal();
            for (int j = 0; j < p; ++j) {
                double acc = 0.0;
                for (int k = 0; k <= j; ++k) acc += lower(j, k) * z[k];
                y[j] = acc;
            }
            for (int j = 0; j < p; ++j)
                for (int k = 0; k <= j; ++k) s.set(j, k, s(j, k) + y[j] * y[k]);
        }
        HalfVec sv = vech(s);
        for (std::size_t l = 0; l < L; ++l) {
            sv.v[l] /= n;
            mean[l] += sv.v[l];
        }
        for (std::size_t a = 0; a < L; ++a)
            for (std::size_t b = 0; b <= a; ++b) second(a, b) += sv.v[a] * sv.v[b];
    }
    for (auto& m : mean) m /= reps;
    for (std::size_t a = 0; a < L; ++a)
        for (std::size_t b = 0; b <= a; ++b) {
            double cov = second(a, b) / reps - mean[a] * mean[b];
            double truth = v(static_cast<int>(a), static_cast<int>(b));
            if (std::fabs(truth) > 1e-3)
                CHECK(std::fabs(cov - truth) <= 0.05 * std::fabs(truth));
        }
}

TEST_CASE("normalized precision for identity omega") {
    ErrorPrecision ep(SymMatrix::identity(2), 10, PrecisionMode::Explicit);
    Matrix m = ep.explicit_matrix();
    double want[3] = {0.5, 1.0, 0.5};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(m(i, j) == doctest::Approx(i == j ? want[i] : 0.0).epsilon(1e-14));

    // apply halves [d] entries, keeps [o] entries
    for (int p : {2, 5, 9}) {
        ErrorPrecision epi(SymMatrix::identity(p), 7, PrecisionMode::Implicit);
        HalfVec x(p);
        for (std::size_t l = 0; l < x.v.size(); ++l) x.v[l] = 1.0 + 0.1 * l;
        HalfVec y = epi.apply(x);
        IndexPartition part(p);
        for (auto l : part.d) CHECK(y.v[l] == doctest::Approx(0.5 * x.v[l]).epsilon(1e-14));
        for (auto l : part.o) CHECK(y.v[l] == doctest::Approx(x.v[l]).epsilon(1e-14));

        HalfVec e = vech(SymMatrix::identity(p));
        HalfVec he = epi.apply(e);
        for (std::size_t l = 0; l < e.v.size(); ++l)
            CHECK(he.v[l] == doctest::Approx(0.5 * e.v[l]).epsilon(1e-14));
    }
}

TEST_CASE("precision composed with covariance is the identity") {
    for (int p : {2, 4, 7, 10}) {
        SymMatrix sigma = random_pd(p, 10 + p);
        SymMatrix omega = sym_inverse(sigma);
        ErrorPrecision ep(omega, 31, PrecisionMode::Explicit, 80);
        Matrix v = build_error_cov(sigma, 31, 80);  // V itself, includes 1/n
        Matrix prec = ep.explicit_matrix();         // (1/n) V^{-1}
        // (1/n) V^{-1} * (n V) should be I_L
        const int L = v.rows;
        for (int i = 0; i < L; ++i)
            for (int j = 0; j < L; ++j) {
                double acc = 0.0;
                for (int k = 0; k < L; ++k) acc += prec(i, k) * (31.0 * v(k, j));
                CHECK(std::fabs(acc - (i == j ? 1.0 : 0.0)) <= 1e-7);
            }
    }
}

TEST_CASE("implicit and explicit modes agree") {
    for (int p : {3, 8, 15}) {
        SymMatrix omega = random_pd(p, 77 + p);
        ErrorPrecision ex(omega, 12, PrecisionMode::Explicit, 80);
        ErrorPrecision im(omega, 12, PrecisionMode::Implicit);
        Matrix m = ex.explicit_matrix();
        const std::size_t L = HalfVec::len(p);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<double> x = random_vec(L, 1000 * p + trial);
            std::vector<double> yi = im.apply(x);
            double nx = 0.0;
            for (double v : x) nx = std::max(nx, std::fabs(v));
            for (std::size_t i = 0; i < L; ++i) {
                double acc = 0.0;
                for (std::size_t j = 0; j < L; ++j) acc += m(static_cast<int>(i), static_cast<int>(j)) * x[j];
                CHECK(std::fabs(acc - yi[i]) <= 1e-10 * nx);
            }
        }
    }
}

TEST_CASE("precision operator is linear and positive") {
    const int p = 6;
    SymMatrix omega = random_pd(p, 5);
    ErrorPrecision ep(omega, 20, PrecisionMode::Implicit);
    const std::size_t L = HalfVec::len(p);

    std::vector<double> x = random_vec(L, 1), y = random_vec(L, 2);
    double alpha = 0.7, beta = -1.3;
    std::vector<double> mix(L);
    for (std::size_t i = 0; i < L; ++i) mix[i] = alpha * x[i] + beta * y[i];
    std::vector<double> lhs = ep.apply(mix), ax = ep.apply(x), ay = ep.apply(y);
    for (std::size_t i = 0; i < L; ++i)
        CHECK(std::fabs(lhs[i] - (alpha * ax[i] + beta * ay[i])) <= 1e-12);

    EigenDecomp ed = sym_eigen(omega);
    double lmin = ed.values.back();
    double bound = lmin * lmin * 0.5 - 1e-9;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> v = random_vec(L, 500 + trial);
        std::vector<double> av = ep.apply(v);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < L; ++i) {
            num += v[i] * av[i];
            den += v[i] * v[i];
        }
        CHECK(num / den >= bound);
    }
}
