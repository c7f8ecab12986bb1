#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "splcm/densela.hpp"
#include "splcm/rng.hpp"

using namespace splcm;

namespace {

SymMatrix random_sym(int p, std::uint64_t seed) {
    CounterRng rng(seed);
    SymMatrix m(p);
    for (int j = 0; j < p; ++j)
        for (int k = 0; k <= j; ++k) m.set(j, k, rng.normal());
    return m;
}

SymMatrix random_spd(int p, std::uint64_t seed) {
    CounterRng rng(seed);
    Matrix g(p, p);
    for (auto& x : g.a) x = rng.normal();
    SymMatrix m(p);
    for (int j = 0; j < p; ++j)
        for (int k = 0; k <= j; ++k) {
            double acc = (j == k) ? 0.5 * p : 0.0;
            for (int l = 0; l < p; ++l) acc += g(j, l) * g(k, l);
            m.set(j, k, acc / p);
        }
    return m;
}

double recon_error(const SymMatrix& a, const EigenDecomp& ed) {
    const int p = a.dim();
    double worst = 0.0;
    for (int j = 0; j < p; ++j)
        for (int k = 0; k < p; ++k) {
            double acc = 0.0;
            for (int l = 0; l < p; ++l)
                acc += ed.vectors(j, l) * ed.values[l] * ed.vectors(k, l);
            worst = std::max(worst, std::fabs(acc - a(j, k)));
        }
    return worst;
}

}  // namespace

TEST_CASE("sym_eigen on simple matrices") {
    SymMatrix d(2);
    d.set(0, 0, 3.0);
    d.set(1, 1, 1.0);
    auto ed = sym_eigen(d);
    CHECK(ed.values[0] == doctest::Approx(3.0));
    CHECK(ed.values[1] == doctest::Approx(1.0));

    SymMatrix f(2);
    f.set(1, 0, 1.0);
    ed = sym_eigen(f);
    CHECK(ed.values[0] == doctest::Approx(1.0));
    CHECK(ed.values[1] == doctest::Approx(-1.0));
    CHECK(std::fabs(ed.vectors(0, 0)) == doctest::Approx(1.0 / std::sqrt(2.0)));

    ed = sym_eigen(SymMatrix::identity(5));
    for (double v : ed.values) CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("sym_eigen reconstruction and orthonormality on random matrices") {
    for (int p : {2, 5, 13, 27, 50}) {
        for (int rep = 0; rep < 20; ++rep) {
            SymMatrix a = random_sym(p, 1000 * p + rep);
            auto ed = sym_eigen(a);
            double amax = 0.0;
            for (double v : a.data()) amax = std::max(amax, std::fabs(v));
            CHECK(recon_error(a, ed) <= 1e-8 * std::max(1.0, amax));
            // Q^T Q = I
            for (int i = 0; i < p; ++i)
                for (int j = i; j < p; ++j) {
                    double acc = 0.0;
                    for (int l = 0; l < p; ++l) acc += ed.vectors(l, i) * ed.vectors(l, j);
                    CHECK(std::fabs(acc - (i == j ? 1.0 : 0.0)) <= 1e-10);
                }
            for (std::size_t i = 1; i < ed.values.size(); ++i)
                CHECK(ed.values[i - 1] >= ed.values[i]);
        }
    }
}

TEST_CASE("cholesky_solve on hand cases") {
    std::vector<double> b{3, -1, 4};
    CHECK(cholesky_solve(SymMatrix::identity(3), b) == b);

    SymMatrix d(2);
    d.set(0, 0, 2.0);
    d.set(1, 1, 4.0);
    auto x = cholesky_solve(d, {2, 8});
    CHECK(x[0] == doctest::Approx(1.0));
    CHECK(x[1] == doctest::Approx(2.0));

    SymMatrix a(2);
    a.set(0, 0, 4.0);
    a.set(1, 0, 2.0);
    a.set(1, 1, 3.0);
    x = cholesky_solve(a, {8, 7});
    CHECK(x[0] == doctest::Approx(1.25));
    CHECK(x[1] == doctest::Approx(1.5));

    SymMatrix indef(2);
    indef.set(0, 0, 1.0);
    indef.set(1, 1, -1.0);
    CHECK_THROWS_AS(cholesky_solve(indef, {1, 1}), NotPositiveDefinite);
}

TEST_CASE("conjugate gradient") {
    std::vector<double> b{1, 2, 3};
    auto identity = [](const std::vector<double>& x, std::vector<double>& out) { out = x; };
    auto x = conjugate_gradient(identity, b, 1e-10, 5);
    for (int i = 0; i < 3; ++i) CHECK(x[i] == doctest::Approx(b[i]));

    auto diag = [](const std::vector<double>& v, std::vector<double>& out) {
        out.resize(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = (i + 1.0) * v[i];
    };
    x = conjugate_gradient(diag, std::vector<double>(5, 1.0), 1e-12, 50);
    for (int i = 0; i < 5; ++i) CHECK(x[i] == doctest::Approx(1.0 / (i + 1)));
}

TEST_CASE("conjugate gradient agrees with cholesky on a seeded SPD system") {
    SymMatrix a = random_spd(6, 99);
    std::vector<double> b{1, -2, 0.5, 3, -1, 2};
    auto op = [&](const std::vector<double>& v, std::vector<double>& out) {
        out = sym_matvec(a, v);
    };
    auto x_cg = conjugate_gradient(op, b, 1e-12, 200);
    auto x_ch = cholesky_solve(a, b);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 6; ++i) {
        num += (x_cg[i] - x_ch[i]) * (x_cg[i] - x_ch[i]);
        den += x_ch[i] * x_ch[i];
    }
    CHECK(std::sqrt(num) <= 1e-7 * std::sqrt(den));
}

TEST_CASE("conjugate gradient reports failure at a tiny iteration cap") {
    SymMatrix a = random_spd(12, 5);
    std::vector<double> b(12, 1.0);
    auto op = [&](const std::vector<double>& v, std::vector<double>& out) {
        out = sym_matvec(a, v);
    };
    CHECK_THROWS_AS(conjugate_gradient(op, b, 1e-14, 1), MaxIterations);
}

TEST_CASE("operator norm") {
    SymMatrix d(2);
    d.set(0, 0, 3.0);
    d.set(1, 1, -4.0);
    CHECK(operator_norm(d) == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(operator_norm(SymMatrix::identity(7)) == doctest::Approx(1.0).epsilon(1e-6));

    Matrix nilpotent(2, 2);
    nilpotent(0, 1) = 1.0;
    CHECK(operator_norm(nilpotent) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("operator norm upper-bounds random Rayleigh quotients") {
    SymMatrix a = random_sym(15, 31);
    double nrm = operator_norm(a);
    CounterRng rng(8);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> v(15);
        for (auto& e : v) e = rng.normal();
        auto av = sym_matvec(a, v);
        CHECK(nrm * norm2(v) + 1e-9 >= norm2(av));
    }
}

TEST_CASE("simplex: lower-bound constraint") {
    // min x1 s.t. x1 >= 2  ==  -x1 <= -2
    Matrix a(1, 1);
    a(0, 0) = -1.0;
    auto r = simplex_lp({1.0}, a, {-2.0});
    CHECK(r.x[0] == doctest::Approx(2.0));
    CHECK(r.objective == doctest::Approx(2.0));
}

TEST_CASE("simplex: simple sum constraint") {
    // min x1 + x2 s.t. x1 + x2 >= 1
    Matrix a(1, 2);
    a(0, 0) = -1.0;
    a(0, 1) = -1.0;
    auto r = simplex_lp({1.0, 1.0}, a, {-1.0});
    CHECK(r.objective == doctest::Approx(1.0));
}

TEST_CASE("simplex detects infeasible and unbounded problems") {
    Matrix a(2, 1);
    a(0, 0) = 1.0;   // x <= 1
    a(1, 0) = -1.0;  // x >= 2
    CHECK_THROWS_AS(simplex_lp({1.0}, a, {1.0, -2.0}), Infeasible);

    Matrix free_dir(1, 1);
    free_dir(0, 0) = -1.0;  // x >= 0 only binding from below
    CHECK_THROWS_AS(simplex_lp({-1.0}, free_dir, {0.0}), Unbounded);
}

TEST_CASE("simplex optimum is invariant under constraint row permutation") {
    // min -x1 - 2 x2 s.t. x1 + x2 <= 4, x1 <= 3, x2 <= 2
    Matrix a(3, 2);
    a(0, 0) = 1;
    a(0, 1) = 1;
    a(1, 0) = 1;
    a(2, 1) = 1;
    auto r1 = simplex_lp({-1, -2}, a, {4, 3, 2});

    Matrix b(3, 2);
    b(0, 1) = 1;
    b(1, 0) = 1;
    b(1, 1) = 1;
    b(2, 0) = 1;
    auto r2 = simplex_lp({-1, -2}, b, {2, 4, 3});
    CHECK(r1.objective == doctest::Approx(r2.objective));
    CHECK(r1.objective == doctest::Approx(-6.0));
}
