#include "cyclift/expectation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "cyclift/errors.hpp"
#include "cyclift/kernels.hpp"
#include "cyclift/parallel.hpp"
#include "cyclift/spectra.hpp"

namespace cyclift {

std::uint64_t int_pow_saturating(std::uint64_t k, std::size_t e) {
  std::uint64_t out = 1;
  for (std::size_t t = 0; t < e; ++t) {
    if (k != 0 && out > std::numeric_limits<std::uint64_t>::max() / k) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= k;
  }
  return out;
}

namespace {

constexpr std::uint64_t kChunk = 256;

void validate(const Graph& g, int i, const PartialAssignment& a) {
  const int k = a.k;
  if (k < 2) throw PreconditionError("k must be >= 2");
  if (i < 0 || i >= k) throw PreconditionError("power i outside [0,k)");
  if (a.fixed.size() != g.num_edges()) throw PreconditionError("partial assignment does not cover every edge");
  for (const auto& f : a.fixed) {
    if (f && (*f < 0 || *f >= k)) throw PreconditionError("fixed exponent outside [0,k)");
  }
  if (a.weights.empty()) return;
  if (a.weights.size() != g.num_edges()) throw PreconditionError("weights must have one row per edge");
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    if (a.fixed[j]) continue;
    const auto& row = a.weights[j];
    if (row.size() != static_cast<std::size_t>(k)) {
      throw PreconditionError("weights for edge " + std::to_string(j) + " must have k entries");
    }
    double sum = 0.0;
    for (double p : row) {
      if (!(p >= 0.0)) throw PreconditionError("negative weight on edge " + std::to_string(j));
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw PreconditionError("weights for edge " + std::to_string(j) + " do not sum to 1");
    }
  }
}

}  // namespace

Polynomial expected_char_poly(const Graph& g, int i, const PartialAssignment& a, std::uint64_t budget) {
  validate(g, i, a);
  const int k = a.k;
  std::vector<std::size_t> free;
  std::vector<int> base(g.num_edges(), 0);
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    if (a.fixed[j]) {
      base[j] = *a.fixed[j];
    } else {
      free.push_back(j);
    }
  }
  const std::uint64_t total = int_pow_saturating(static_cast<std::uint64_t>(k), free.size());
  if (total > budget) {
    throw BudgetExceeded("expectation needs " + std::to_string(k) + "^" + std::to_string(free.size()) +
                         " completions, budget is " + std::to_string(budget));
  }
  const double uniform = 1.0 / k;
  auto weight = [&](std::size_t j, int l) { return a.weights.empty() ? uniform : a.weights[j][l]; };

  const std::size_t n = static_cast<std::size_t>(g.num_vertices());
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<std::vector<double>> partial(chunks, std::vector<double>(n + 1, 0.0));

  parallel_tasks(chunks, [&](std::size_t c) {
    const auto& kt = kernels::active();
    std::vector<int> exps = base;
    std::vector<double>& acc = partial[c];
    const std::uint64_t end = std::min(total, (c + 1) * kChunk);
    for (std::uint64_t idx = c * kChunk; idx < end; ++idx) {
      std::uint64_t rest = idx;
      double w = 1.0;
      for (std::size_t t = free.size(); t-- > 0;) {
        const int l = static_cast<int>(rest % static_cast<std::uint64_t>(k));
        rest /= static_cast<std::uint64_t>(k);
        exps[free[t]] = l;
        w *= weight(free[t], l);
      }
      if (w == 0.0) continue;
      const Polynomial f = char_poly(signed_adjacency(g, CyclicSignature(k, exps), i));
      kt.daxpy(w, f.coeffs().data(), acc.data(), f.coeffs().size());
    }
  });

  std::vector<double> sum(n + 1, 0.0);
  for (const auto& p : partial) {
    for (std::size_t j = 0; j <= n; ++j) sum[j] += p[j];
  }
  return Polynomial(std::move(sum));
}

std::vector<Polynomial> interlacing_siblings(const Graph& g, int k, int i, const std::vector<int>& prefix,
                                             std::uint64_t budget) {
  if (prefix.size() >= g.num_edges()) throw PreconditionError("prefix must leave at least one edge free");
  std::vector<Polynomial> out;
  for (int t = 0; t < k; ++t) {
    PartialAssignment a = PartialAssignment::all_free(k, g.num_edges());
    for (std::size_t j = 0; j < prefix.size(); ++j) a.fixed[j] = prefix[j];
    a.fixed[prefix.size()] = t;
    out.push_back(expected_char_poly(g, i, a, budget));
  }
  return out;
}

namespace {

// Per-edge distribution: dense Dirichlet(1), sparse (support of size 2) or
// a point mass, so that both interior and boundary combinations occur.
std::vector<double> random_distribution(int k, std::mt19937_64& rng) {
  std::vector<double> p(static_cast<std::size_t>(k), 0.0);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> pick(0, k - 1);
  switch (kind(rng)) {
    case 0:
      p[static_cast<std::size_t>(pick(rng))] = 1.0;
      break;
    case 1: {
      const int a = pick(rng);
      const int b = (a + 1 + std::uniform_int_distribution<int>(0, k - 2)(rng)) % k;
      const double t = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      p[static_cast<std::size_t>(a)] = t;
      p[static_cast<std::size_t>(b)] = 1.0 - t;
      break;
    }
    default: {
      std::exponential_distribution<double> ex(1.0);
      double sum = 0.0;
      for (double& x : p) sum += (x = ex(rng));
      for (double& x : p) x /= sum;
    }
  }
  // Exact unit sum keeps the 1e-12 row check meaningful.
  double sum = 0.0;
  for (std::size_t l = 0; l + 1 < p.size(); ++l) sum += p[l];
  p.back() = std::max(0.0, 1.0 - sum);
  return p;
}

double worst_imag_ratio(const Polynomial& p) {
  double worst = 0.0;
  for (const RootCluster& c : clustered_roots(p)) {
    worst = std::max(worst, std::abs(c.center.imag()) / (1.0 + std::abs(c.center)));
  }
  return worst;
}

}  // namespace

ConvexCombinationReport convex_combination_real_rooted_check(const Graph& g, int k, int i, int trials,
                                                             std::uint64_t seed, std::uint64_t budget) {
  ConvexCombinationReport rep;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    PartialAssignment a = PartialAssignment::all_free(k, g.num_edges());
    for (std::size_t j = 0; j < g.num_edges(); ++j) a.weights.push_back(random_distribution(k, rng));
    const Polynomial p = expected_char_poly(g, i, a, budget);
    ++rep.trials;
    rep.worst_imag = std::max(rep.worst_imag, worst_imag_ratio(p));
    if (!is_real_rooted(p, kRealRootTolerance)) {
      ++rep.failures;
      rep.failing_weights.push_back(a.weights);
    }
  }
  return rep;
}

InterlacingFamilyReport interlacing_family_check(const Graph& g, int k, int i, int trials, std::uint64_t seed,
                                                 std::uint64_t budget) {
  InterlacingFamilyReport rep;
  if (g.num_edges() == 0) return rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> depth(0, g.num_edges() - 1);
  std::uniform_int_distribution<int> exp(0, k - 1);
  for (int t = 0; t < trials; ++t) {
    std::vector<int> prefix(depth(rng));
    for (int& l : prefix) l = exp(rng);
    const auto family = interlacing_siblings(g, k, i, prefix, budget);
    ++rep.trials;
    if (!has_common_interlacing(family, kRealRootTolerance)) {
      ++rep.failures;
      rep.failing_prefixes.push_back(prefix);
    }
  }
  return rep;
}

RankOneReport rank_one_decomposition(const Graph& g, const CyclicSignature& s, int i) {
  const int k = s.k();
  if (i < 1 || i >= k) throw PreconditionError("rank-one decomposition requires 1 <= i < k");
  if (s.size() != g.num_edges()) throw PreconditionError("signature does not match graph");
  const auto n = static_cast<std::size_t>(g.num_vertices());
  HermitianMatrix sum(n);
  std::vector<cplx> r(n);
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    const Edge e = g.edge(j);
    const cplx alpha = root_of_unity(2 * k, static_cast<long long>(i) * s[j]);
    std::fill(r.begin(), r.end(), cplx(0.0, 0.0));
    r[e.u] = alpha;
    r[e.v] = std::conj(alpha);
    for (std::size_t a : {static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v)}) {
      for (std::size_t b : {static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v)}) {
        sum(a, b) += r[a] * std::conj(r[b]);
      }
    }
  }
  for (Vertex u = 0; u < g.num_vertices(); ++u) sum(u, u) -= static_cast<double>(g.degree(u));
  RankOneReport rep;
  rep.defect = max_entry_difference(sum, signed_adjacency(g, s, i));
  rep.ok = rep.defect <= 1e-12;
  return rep;
}

}  // namespace cyclift
