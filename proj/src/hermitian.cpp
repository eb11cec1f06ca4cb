#include "cyclift/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>
#include <limits>
#include <string>

#include "cyclift/errors.hpp"
#include "cyclift/kernels.hpp"

namespace cyclift {

double HermitianMatrix::inf_norm() const {
  double best = 0.0;
  for (std::size_t r = 0; r < n_; ++r) {
    double s = 0.0;
    for (const cplx& z : row(r)) s += std::abs(z);
    best = std::max(best, s);
  }
  return best;
}

double HermitianMatrix::hermitian_defect() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = r; c < n_; ++c) {
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return worst;
}

HermitianMatrix HermitianMatrix::conjugate() const {
  HermitianMatrix out(n_);
  for (std::size_t j = 0; j < data_.size(); ++j) out.data_[j] = std::conj(data_[j]);
  return out;
}

double max_entry_difference(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.size() != b.size()) {
    throw PreconditionError("matrix size mismatch");
  }
  double worst = 0.0;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t j = 0; j < da.size(); ++j) worst = std::max(worst, std::abs(da[j] - db[j]));
  return worst;
}

double Spectrum::radius() const {
  if (values.empty()) return 0.0;
  return std::max(std::abs(values.front()), std::abs(values.back()));
}

Spectrum merge(std::span<const Spectrum> parts) {
  Spectrum out;
  for (const Spectrum& p : parts) out.values.insert(out.values.end(), p.values.begin(), p.values.end());
  std::sort(out.values.begin(), out.values.end());
  return out;
}

double max_discrepancy(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(a.values[j] - b.values[j]));
  return worst;
}

void hermitian_tridiagonalize(HermitianMatrix a, std::vector<double>& diag,
                              std::vector<double>& off) {
  const auto& kt = kernels::active();
  const std::size_t n = a.size();
  diag.assign(n, 0.0);
  off.assign(n > 0 ? n - 1 : 0, 0.0);

  std::vector<cplx> u(n), p(n), w(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;  // trailing block size
    // Column k below the diagonal, read through the upper triangle.
    for (std::size_t r = 0; r < m; ++r) u[r] = std::conj(a(k, k + 1 + r));
    double tail = 0.0;
    for (std::size_t r = 1; r < m; ++r) tail += std::norm(u[r]);
    if (tail == 0.0) continue;

    const cplx alpha = u[0];
    const double xnorm = std::sqrt(std::norm(alpha) + tail);
    const double amag = std::abs(alpha);
    const cplx phase = amag == 0.0 ? cplx(1.0, 0.0) : alpha / amag;
    // Reflector P = I - c u u^*, u = x + phase |x| e_1, maps x to -phase |x| e_1.
    u[0] = alpha + phase * xnorm;
    const double unorm2 = std::norm(u[0]) + tail;
    const double c = 2.0 / unorm2;

    for (std::size_t r = 0; r < m; ++r) {
      p[r] = c * kt.dotu(&a(k + 1 + r, k + 1), u.data(), m);
    }
    const double half_k = 0.5 * c * kt.dotc(u.data(), p.data(), m).real();
    for (std::size_t r = 0; r < m; ++r) w[r] = p[r] - half_k * u[r];
    for (std::size_t r = 0; r < m; ++r) {
      kt.rank2_row(&a(k + 1 + r, k + 1), u[r], w.data(), w[r], u.data(), m);
    }

    const cplx sub = -phase * xnorm;
    a.set_pair(k + 1, k, sub);
    for (std::size_t r = 1; r < m; ++r) a.set_pair(k + 1 + r, k, cplx(0.0, 0.0));
  }

  for (std::size_t j = 0; j < n; ++j) diag[j] = a(j, j).real();
  for (std::size_t j = 0; j + 1 < n; ++j) off[j] = std::abs(a(j + 1, j));
}

namespace {

// Eigenvalues of [[a, b], [b, c]], larger magnitude first.
std::pair<double, double> eig2x2(double a, double b, double c) {
  const double sm = a + c;
  const double adf = std::abs(a - c);
  const double ab = std::abs(2.0 * b);
  const double acmx = std::abs(a) > std::abs(c) ? a : c;
  const double acmn = std::abs(a) > std::abs(c) ? c : a;
  double rt;
  if (adf > ab) {
    rt = adf * std::sqrt(1.0 + (ab / adf) * (ab / adf));
  } else if (adf < ab) {
    rt = ab * std::sqrt(1.0 + (adf / ab) * (adf / ab));
  } else {
    rt = ab * std::numbers::sqrt2;
  }
  if (sm == 0.0) return {0.5 * rt, -0.5 * rt};
  const double rt1 = 0.5 * (sm < 0.0 ? sm - rt : sm + rt);
  return {rt1, (acmx / rt1) * acmn - (b / rt1) * b};
}

}  // namespace

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> off) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return d;
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  std::copy(off.begin(), off.end(), e.begin());
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l + 1) {
        // isolated 2x2 block: closed form
        std::tie(d[l], d[l + 1]) = eig2x2(d[l], e[l], d[l + 1]);
        e[l] = 0.0;
        m = l;
      } else if (m != l) {
        if (++iter > 200) {
          throw std::runtime_error("tridiagonal QL did not converge");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        bool underflow = false;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

Spectrum hermitian_eigenvalues(const HermitianMatrix& h) {
  const double defect = h.hermitian_defect();
  if (!(defect <= kHermitianTolerance)) {
    throw PreconditionError("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  std::vector<double> diag, off;
  hermitian_tridiagonalize(h, diag, off);
  return Spectrum{tridiagonal_eigenvalues(std::move(diag), std::move(off))};
}

}  // namespace cyclift
