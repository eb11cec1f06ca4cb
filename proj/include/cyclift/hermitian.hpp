#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cyclift {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major. Hermitian structure is a
// precondition checked by the eigensolver rather than enforced on every
// write, so callers can assemble blocks freely.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const { return n_; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  std::span<cplx> row(std::size_t r) { return {data_.data() + r * n_, n_}; }
  std::span<const cplx> row(std::size_t r) const { return {data_.data() + r * n_, n_}; }
  std::span<const cplx> data() const { return data_; }

  // Sets (r,c) = z and (c,r) = conj(z).
  void set_pair(std::size_t r, std::size_t c, cplx z) {
    (*this)(r, c) = z;
    (*this)(c, r) = std::conj(z);
  }

  // max_r sum_c |a_rc|
  double inf_norm() const;

  // max over entries of |a_rc - conj(a_cr)|
  double hermitian_defect() const;

  HermitianMatrix conjugate() const;

 private:
  std::size_t n_ = 0;
  std::vector<cplx> data_;
};

// Entrywise max |a - b|; sizes must match.
double max_entry_difference(const HermitianMatrix& a, const HermitianMatrix& b);

// Sorted (ascending) eigenvalues with multiplicity.
struct Spectrum {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double min() const { return values.front(); }
  double max() const { return values.back(); }
  // max |lambda|, 0 for an empty spectrum
  double radius() const;
};

// Multiset union, sorted.
Spectrum merge(std::span<const Spectrum> parts);

// Largest elementwise difference of two sorted spectra of equal length.
double max_discrepancy(const Spectrum& a, const Spectrum& b);

inline constexpr double kHermitianTolerance = 1e-12;

// All eigenvalues of a Hermitian matrix: Householder reduction to a real
// symmetric tridiagonal followed by implicit QL. Throws PreconditionError
// when the defect from Hermitian symmetry exceeds kHermitianTolerance.
Spectrum hermitian_eigenvalues(const HermitianMatrix& h);

// Reduction to tridiagonal form only; exposed for tests. `diag` and `off`
// receive the real symmetric tridiagonal (off has n-1 entries, magnitudes
// of the complex subdiagonal).
void hermitian_tridiagonalize(HermitianMatrix a, std::vector<double>& diag,
                              std::vector<double>& off);

// Eigenvalues of a real symmetric tridiagonal matrix, ascending.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag,
                                            std::vector<double> off);

}  // namespace cyclift
