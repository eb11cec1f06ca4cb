#include "cyclift/kernels.hpp"

namespace cyclift::kernels {
namespace {

cplx dotu_scalar(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    re += a[j].real() * b[j].real() - a[j].imag() * b[j].imag();
    im += a[j].real() * b[j].imag() + a[j].imag() * b[j].real();
  }
  return {re, im};
}

cplx dotc_scalar(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    re += a[j].real() * b[j].real() + a[j].imag() * b[j].imag();
    im += a[j].real() * b[j].imag() - a[j].imag() * b[j].real();
  }
  return {re, im};
}

void axpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    y[j] += alpha * x[j];
  }
}

void rank2_row_scalar(cplx* row, cplx alpha, const cplx* x, cplx beta,
                      const cplx* y, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    row[j] -= alpha * std::conj(x[j]) + beta * std::conj(y[j]);
  }
}

void daxpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    y[j] += alpha * x[j];
  }
}

void mul_linear_scalar(double* c, double root, std::size_t n) {
  c[n + 1] = c[n];
  for (std::size_t j = n; j > 0; --j) {
    c[j] = c[j - 1] - root * c[j];
  }
  c[0] = -root * c[0];
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{
      "scalar",          dotu_scalar,  dotc_scalar,      axpy_scalar,
      rank2_row_scalar, daxpy_scalar, mul_linear_scalar,
  };
  return table;
}

}  // namespace cyclift::kernels
