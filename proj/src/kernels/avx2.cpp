// AVX2 + FMA variants. This translation unit is compiled with -mavx2 -mfma
// and must only be entered after a runtime CPU check.

#include <immintrin.h>

#include "cyclift/kernels.hpp"

namespace cyclift::kernels {
namespace {

// Two interleaved complex doubles per register: [re0 im0 re1 im1].
inline __m256d load2(const cplx* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

inline void store2(cplx* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

// a * b for packed complex pairs.
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d a_re = _mm256_movedup_pd(a);
  const __m256d a_im = _mm256_permute_pd(a, 0xF);
  const __m256d b_sw = _mm256_permute_pd(b, 0x5);
  return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_sw));
}

// Broadcast of a complex scalar into both lanes.
inline __m256d splat(cplx z) {
  return _mm256_setr_pd(z.real(), z.imag(), z.real(), z.imag());
}

inline cplx hsum2(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  double out[2];
  _mm_storeu_pd(out, s);
  return {out[0], out[1]};
}

// Accumulates re-parts and the two cross products separately so that the
// conjugated and unconjugated dot products share the same loop.
template <bool Conj>
cplx dot_avx2(const cplx* a, const cplx* b, std::size_t n) {
  __m256d acc_rr = _mm256_setzero_pd();  // [ar*br, ai*bi, ...]
  __m256d acc_ri = _mm256_setzero_pd();  // [ar*bi, ai*br, ...]
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const __m256d va = load2(a + j);
    const __m256d vb = load2(b + j);
    acc_rr = _mm256_fmadd_pd(va, vb, acc_rr);
    acc_ri = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0x5), acc_ri);
  }
  double rr[4], ri[4];
  _mm256_storeu_pd(rr, acc_rr);
  _mm256_storeu_pd(ri, acc_ri);
  double re, im;
  if constexpr (Conj) {
    re = (rr[0] + rr[2]) + (rr[1] + rr[3]);
    im = (ri[0] + ri[2]) - (ri[1] + ri[3]);
  } else {
    re = (rr[0] + rr[2]) - (rr[1] + rr[3]);
    im = (ri[0] + ri[2]) + (ri[1] + ri[3]);
  }
  for (; j < n; ++j) {
    if constexpr (Conj) {
      re += a[j].real() * b[j].real() + a[j].imag() * b[j].imag();
      im += a[j].real() * b[j].imag() - a[j].imag() * b[j].real();
    } else {
      re += a[j].real() * b[j].real() - a[j].imag() * b[j].imag();
      im += a[j].real() * b[j].imag() + a[j].imag() * b[j].real();
    }
  }
  return {re, im};
}

cplx dotu_avx2(const cplx* a, const cplx* b, std::size_t n) {
  return dot_avx2<false>(a, b, n);
}

cplx dotc_avx2(const cplx* a, const cplx* b, std::size_t n) {
  return dot_avx2<true>(a, b, n);
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d va = splat(alpha);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    store2(y + j, _mm256_add_pd(load2(y + j), cmul(va, load2(x + j))));
  }
  for (; j < n; ++j) {
    y[j] += alpha * x[j];
  }
}

void rank2_row_avx2(cplx* row, cplx alpha, const cplx* x, cplx beta,
                    const cplx* y, std::size_t n) {
  const __m256d va = splat(alpha);
  const __m256d vb = splat(beta);
  const __m256d conj_mask = _mm256_setr_pd(0.0, -0.0, 0.0, -0.0);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const __m256d cx = _mm256_xor_pd(load2(x + j), conj_mask);
    const __m256d cy = _mm256_xor_pd(load2(y + j), conj_mask);
    const __m256d upd = _mm256_add_pd(cmul(va, cx), cmul(vb, cy));
    store2(row + j, _mm256_sub_pd(load2(row + j), upd));
  }
  for (; j < n; ++j) {
    row[j] -= alpha * std::conj(x[j]) + beta * std::conj(y[j]);
  }
}

void daxpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    _mm256_storeu_pd(y + j, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + j),
                                            _mm256_loadu_pd(y + j)));
  }
  for (; j < n; ++j) {
    y[j] += alpha * x[j];
  }
}

void mul_linear_avx2(double* c, double root, std::size_t n) {
  // Walk downwards in blocks of four; block [j-3, j] reads c[j-4, j], none
  // of which has been overwritten yet.
  c[n + 1] = c[n];
  const __m256d vr = _mm256_set1_pd(root);
  std::size_t j = n;
  for (; j >= 4; j -= 4) {
    const __m256d hi = _mm256_loadu_pd(c + j - 3);
    const __m256d lo = _mm256_loadu_pd(c + j - 4);
    _mm256_storeu_pd(c + j - 3, _mm256_fnmadd_pd(vr, hi, lo));
  }
  for (; j > 0; --j) {
    c[j] = c[j - 1] - root * c[j];
  }
  c[0] = -root * c[0];
}

}  // namespace

const KernelTable& avx2_table_impl() {
  static const KernelTable table{
      "avx2",          dotu_avx2,  dotc_avx2,      axpy_avx2,
      rank2_row_avx2, daxpy_avx2, mul_linear_avx2,
  };
  return table;
}

}  // namespace cyclift::kernels
