#include "cyclift/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "cyclift/errors.hpp"
#include "cyclift/kernels.hpp"

namespace cyclift {

using cd = std::complex<double>;

Polynomial::Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

Polynomial Polynomial::monomial(int degree, double c) {
  std::vector<double> v(static_cast<std::size_t>(degree) + 1, 0.0);
  v.back() = c;
  return Polynomial(std::move(v));
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

cd Polynomial::operator()(cd z) const {
  cd acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::operator*(double s) const {
  std::vector<double> v = c_;
  for (double& x : v) x *= s;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<double> v(std::max(c_.size(), o.c_.size()), 0.0);
  for (std::size_t j = 0; j < c_.size(); ++j) v[j] += c_[j];
  for (std::size_t j = 0; j < o.c_.size(); ++j) v[j] += o.c_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * -1.0; }

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<double> v(c_.size() - 1);
  for (std::size_t j = 1; j < c_.size(); ++j) v[j - 1] = c_[j] * static_cast<double>(j);
  return Polynomial(std::move(v));
}

double max_coeff_difference(const Polynomial& a, const Polynomial& b) {
  const int n = std::max(a.degree(), b.degree());
  double worst = 0.0;
  for (int j = 0; j <= n; ++j) worst = std::max(worst, std::abs(a.coeff(j) - b.coeff(j)));
  return worst;
}

Polynomial from_roots(std::span<const double> roots) {
  const auto& kt = kernels::active();
  std::vector<double> c(roots.size() + 2, 0.0);
  c[0] = 1.0;
  std::size_t deg = 0;
  for (double r : roots) {
    kt.mul_linear(c.data(), r, deg);
    ++deg;
  }
  c.resize(deg + 1);
  return Polynomial(std::move(c));
}

Polynomial char_poly(const HermitianMatrix& h) {
  const Spectrum sp = hermitian_eigenvalues(h);
  return from_roots(sp.values);
}

namespace {

// Parlett-Reinsch diagonal similarity, radix 2.
void balance(Eigen::MatrixXd& a) {
  constexpr double radix = 2.0;
  constexpr double sqrdx = radix * radix;
  const Eigen::Index n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix, f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

// Taylor coefficients p^{(t)}(z) / t! for t = 0..c, by repeated synthetic
// division by (x - z).
std::vector<cd> taylor_coeffs(const std::vector<double>& coeffs, cd z, int c) {
  std::vector<cd> q(coeffs.begin(), coeffs.end());
  std::vector<cd> out;
  for (int t = 0; t <= c && !q.empty(); ++t) {
    const int n = static_cast<int>(q.size()) - 1;
    cd acc = q[n];
    std::vector<cd> quot(static_cast<std::size_t>(n));
    for (int j = n - 1; j >= 0; --j) {
      quot[j] = acc;
      acc = acc * z + q[j];
    }
    out.push_back(acc);
    q = std::move(quot);
  }
  return out;
}

double abs_eval_bound(const std::vector<double>& coeffs, double r) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

}  // namespace

std::vector<cd> companion_roots(const Polynomial& p) {
  if (p.is_zero()) throw PreconditionError("zero polynomial has no well-defined roots");
  const auto& c = p.coeffs();
  std::vector<cd> roots;
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0.0) {
    roots.emplace_back(0.0, 0.0);
    ++low;
  }
  const Eigen::Index n = static_cast<Eigen::Index>(c.size() - 1 - low);
  if (n <= 0) return roots;
  const double lead = c.back();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m(0, j) = -c[c.size() - 2 - static_cast<std::size_t>(j)] / lead;
  for (Eigen::Index j = 1; j < n; ++j) m(j, j - 1) = 1.0;
  balance(m);
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  if (es.info() != Eigen::Success) throw std::runtime_error("companion eigenvalue iteration failed");
  for (Eigen::Index j = 0; j < n; ++j) roots.push_back(es.eigenvalues()(j));
  return roots;
}

std::vector<RootCluster> clustered_roots(const Polynomial& p) {
  const std::vector<cd> raw = companion_roots(p);
  const double gamma = 64.0 * std::max(p.degree(), 1) * std::numeric_limits<double>::epsilon();
  const auto& coeffs = p.coeffs();

  struct Group {
    std::vector<cd> members;
    cd center;
  };
  std::vector<Group> groups;
  for (const cd& z : raw) groups.push_back({{z}, z});

  // Merge when every Taylor term of order <= c, scaled by the spread, sits
  // at noise level: then p cannot separate the members from a c-fold root.
  // Roots of other groups strictly inside the disc would make the low-order
  // terms vanish for the wrong reason, so such merges are refused.
  auto fits = [&](std::size_t ia, std::size_t ib, cd& center) {
    const Group& a = groups[ia];
    const Group& b = groups[ib];
    const int c = static_cast<int>(a.members.size() + b.members.size());
    center = (static_cast<double>(a.members.size()) * a.center + static_cast<double>(b.members.size()) * b.center) /
             static_cast<double>(c);
    double spread = 0.0;
    for (const cd& z : a.members) spread = std::max(spread, std::abs(z - center));
    for (const cd& z : b.members) spread = std::max(spread, std::abs(z - center));
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (g == ia || g == ib) continue;
      for (const cd& z : groups[g].members)
        if (std::abs(z - center) < spread) return false;
    }
    const double noise = std::ldexp(gamma, c) * abs_eval_bound(coeffs, std::abs(center) + spread);
    double terms = 0.0, power = 1.0;
    for (const cd& t : taylor_coeffs(coeffs, center, c)) {
      terms += std::abs(t) * power;
      power *= spread;
    }
    return terms <= noise;
  };

  bool merged = true;
  while (merged && groups.size() > 1) {
    merged = false;
    std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < groups.size(); ++a) {
      for (std::size_t b = a + 1; b < groups.size(); ++b) {
        pairs.emplace_back(std::abs(groups[a].center - groups[b].center), a, b);
      }
    }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [dist, a, b] : pairs) {
      cd center;
      if (!fits(a, b, center)) continue;
      groups[a].members.insert(groups[a].members.end(), groups[b].members.begin(), groups[b].members.end());
      groups[a].center = center;
      groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(b));
      merged = true;
      break;
    }
  }

  std::vector<RootCluster> out;
  for (const Group& g : groups) out.push_back({g.center, static_cast<int>(g.members.size())});
  std::sort(out.begin(), out.end(), [](const RootCluster& x, const RootCluster& y) {
    return x.center.real() < y.center.real() ||
           (x.center.real() == y.center.real() && x.center.imag() < y.center.imag());
  });
  return out;
}

bool is_real_rooted(const Polynomial& p, double tol) {
  if (p.is_zero()) throw PreconditionError("real-rootedness of the zero polynomial is undefined");
  for (const RootCluster& c : clustered_roots(p)) {
    if (std::abs(c.center.imag()) > tol * (1.0 + std::abs(c.center))) return false;
  }
  return true;
}

std::vector<double> real_roots(const Polynomial& p, double tol) {
  if (p.is_zero()) throw PreconditionError("real roots of the zero polynomial are undefined");
  std::vector<double> out;
  for (const RootCluster& c : clustered_roots(p)) {
    if (std::abs(c.center.imag()) > tol * (1.0 + std::abs(c.center))) {
      throw PreconditionError("polynomial is not real-rooted within tolerance");
    }
    out.insert(out.end(), static_cast<std::size_t>(c.multiplicity), c.center.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

double largest_root(const Polynomial& p, double tol) {
  const std::vector<double> r = real_roots(p, tol);
  if (r.empty()) throw PreconditionError("constant polynomial has no roots");
  return r.back();
}

bool has_common_interlacing(std::span<const Polynomial> ps, double tol) {
  if (ps.empty()) return true;
  const int n = ps.front().degree();
  std::vector<std::vector<double>> roots;
  for (const Polynomial& p : ps) {
    if (p.degree() != n) throw PreconditionError("common interlacing requires equal degrees");
    if (!(p.leading() > 0.0)) throw PreconditionError("common interlacing requires positive leading coefficients");
    roots.push_back(real_roots(p, tol));
  }
  for (int j = 0; j + 1 < n; ++j) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (const auto& r : roots) {
      lo = std::max(lo, r[static_cast<std::size_t>(j)]);
      hi = std::min(hi, r[static_cast<std::size_t>(j) + 1]);
    }
    if (lo > hi + tol) return false;
  }
  return true;
}

}  // namespace cyclift
