#pragma once

#include <complex>
#include <span>
#include <vector>

#include "cyclift/hermitian.hpp"

namespace cyclift {

// Real polynomial, dense ascending-degree coefficients. Trailing zero
// coefficients are trimmed on construction; the zero polynomial has no
// coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial monomial(int degree, double c = 1.0);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<double>& coeffs() const { return c_; }
  double coeff(int j) const { return j >= 0 && j < static_cast<int>(c_.size()) ? c_[j] : 0.0; }
  double leading() const { return c_.empty() ? 0.0 : c_.back(); }

  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> z) const;

  Polynomial operator*(double s) const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial derivative() const;

  // max_j |a_j - b_j| over the longer coefficient list
  friend double max_coeff_difference(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<double> c_;
};

// Monic prod (x - lambda_j).
Polynomial from_roots(std::span<const double> roots);

// det(xI - H), assembled from the eigenvalues of H.
Polynomial char_poly(const HermitianMatrix& h);

// All complex roots: eigenvalues of the balanced companion matrix.
std::vector<std::complex<double>> companion_roots(const Polynomial& p);

// Roots grouped into clusters of nearly coincident values. Computed roots
// of a c-fold root scatter by roughly (noise)^(1/c); a group of c roots is
// merged when, over its spread, every Taylor term of p up to order c stays
// below 2^c * 64 deg(p) eps times the coefficient-wise evaluation bound,
// and no other root lies inside the group's disc.
struct RootCluster {
  std::complex<double> center;
  int multiplicity = 1;
};
std::vector<RootCluster> clustered_roots(const Polynomial& p);

inline constexpr double kRealRootTolerance = 1e-6;

// True iff every root cluster has |Im| <= tol (1 + |root|). Throws
// PreconditionError for the zero polynomial.
bool is_real_rooted(const Polynomial& p, double tol = kRealRootTolerance);

// Real roots with multiplicity, ascending. Throws PreconditionError if p is
// not real-rooted within tol.
std::vector<double> real_roots(const Polynomial& p, double tol = kRealRootTolerance);

// Max over real parts of the roots. Throws if p is not real-rooted.
double largest_root(const Polynomial& p, double tol = kRealRootTolerance);

// Whether a single sequence alpha_1 <= ... <= alpha_{N-1} interlaces the
// roots of every member: max_p lambda_j(p) <= min_p lambda_{j+1}(p) + tol.
// Members must share degree, be real-rooted and have positive leading
// coefficients; violations throw PreconditionError.
bool has_common_interlacing(std::span<const Polynomial> ps, double tol = kRealRootTolerance);

}  // namespace cyclift
