#pragma once

#include <cstddef>

// Vector arithmetic inner loops used by the dense solvers and the ADMM
// updates. Scalar reference implementations are always available; AVX2 (x86)
// and NEON (arm64) variants are selected at runtime when the CPU supports
// them. The environment variable SPLCM_KERNELS=scalar|avx2|neon overrides
// the automatic choice.

namespace splcm::kernels {

// Reference implementations, used directly by equivalence tests.
namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void soft_threshold(const double* x, double t, double* out, std::size_t n);
}  // namespace scalar

// Dispatched entry points.
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void soft_threshold(const double* x, double t, double* out, std::size_t n);

// Name of the backend in use ("scalar", "avx2", "neon").
const char* active_backend();

// Force a backend by name; returns false if unavailable on this CPU.
bool force_backend(const char* name);

}  // namespace splcm::kernels
