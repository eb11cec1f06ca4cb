#pragma once

// Inner-loop kernels for dense complex linear algebra and polynomial
// accumulation. Each kernel has a scalar reference implementation; wider
// variants are selected once at runtime from CPU features and must agree
// with the reference to within a few ulps per accumulated term.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace cyclift::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;

  // sum_j a[j] * b[j]  (no conjugation)
  cplx (*dotu)(const cplx* a, const cplx* b, std::size_t n);

  // sum_j conj(a[j]) * b[j]
  cplx (*dotc)(const cplx* a, const cplx* b, std::size_t n);

  // y[j] += alpha * x[j]
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);

  // row[j] -= alpha * conj(x[j]) + beta * conj(y[j]); one row of a
  // Hermitian rank-2 update A -= v w^* + w v^*.
  void (*rank2_row)(cplx* row, cplx alpha, const cplx* x, cplx beta,
                    const cplx* y, std::size_t n);

  // y[j] += alpha * x[j] on reals.
  void (*daxpy)(double alpha, const double* x, double* y, std::size_t n);

  // Multiply the monic-product polynomial in place by (x - root):
  // c[j] <- c[j-1] - root * c[j] for j = n..1, c[0] <- -root * c[0].
  // `c` holds the n+1 coefficients of a degree-n polynomial; c[n+1] is written.
  void (*mul_linear)(double* c, double root, std::size_t n);
};

const KernelTable& scalar_table();

// nullptr when the variant was not compiled in.
const KernelTable* avx2_table();

// Active table. Chosen on first use: AVX2+FMA when the CPU reports both,
// unless CYCLIFT_SIMD=scalar is set in the environment.
const KernelTable& active();

// Force a table for the remainder of the process (tests, benchmarks).
void select(const KernelTable& table);

// All tables usable on this machine, reference first.
std::vector<const KernelTable*> available();

}  // namespace cyclift::kernels
