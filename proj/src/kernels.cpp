#include "splcm/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace splcm::kernels {

namespace scalar {

double dot(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void soft_threshold(const double* x, double t, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double m = std::fabs(x[i]) - t;
        out[i] = m > 0.0 ? (x[i] > 0.0 ? m : -m) : 0.0;
    }
}

}  // namespace scalar

#ifdef SPLCM_HAVE_AVX2_TU
namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void soft_threshold(const double* x, double t, double* out, std::size_t n);
}
#endif
#ifdef SPLCM_HAVE_NEON_TU
namespace neon {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void soft_threshold(const double* x, double t, double* out, std::size_t n);
}
#endif

namespace {

struct Backend {
    const char* name;
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*soft_threshold)(const double*, double, double*, std::size_t);
};

constexpr Backend kScalar{"scalar", scalar::dot, scalar::axpy, scalar::soft_threshold};

bool backend_available(const char* name, Backend& out) {
    if (std::strcmp(name, "scalar") == 0) {
        out = kScalar;
        return true;
    }
#ifdef SPLCM_HAVE_AVX2_TU
    if (std::strcmp(name, "avx2") == 0 && __builtin_cpu_supports("avx2")) {
        out = Backend{"avx2", avx2::dot, avx2::axpy, avx2::soft_threshold};
        return true;
    }
#endif
#ifdef SPLCM_HAVE_NEON_TU
    if (std::strcmp(name, "neon") == 0) {
        out = Backend{"neon", neon::dot, neon::axpy, neon::soft_threshold};
        return true;
    }
#endif
    return false;
}

Backend pick_backend() {
    Backend b = kScalar;
    if (const char* env = std::getenv("SPLCM_KERNELS")) {
        if (backend_available(env, b)) return b;
        return kScalar;
    }
    if (backend_available("avx2", b)) return b;
    if (backend_available("neon", b)) return b;
    return kScalar;
}

Backend& current() {
    static Backend b = pick_backend();
    return b;
}

}  // namespace

double dot(const double* x, const double* y, std::size_t n) {
    return current().dot(x, y, n);
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    current().axpy(a, x, y, n);
}

void soft_threshold(const double* x, double t, double* out, std::size_t n) {
    current().soft_threshold(x, t, out, n);
}

const char* active_backend() { return current().name; }

bool force_backend(const char* name) {
    Backend b;
    if (!backend_available(name, b)) return false;
    current() = b;
    return true;
}

}  // namespace splcm::kernels
