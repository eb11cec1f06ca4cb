#include "cyclift/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "cyclift/errors.hpp"
#include "cyclift/parallel.hpp"
#include "cyclift/spectra.hpp"

namespace cyclift {

namespace {

constexpr std::uint64_t kChunk = 64;

double spectral_max(const Graph& g, const CyclicSignature& s, int i) {
  return hermitian_eigenvalues(signed_adjacency(g, s, i)).max();
}

// sigma(A^{s,k-i}) = sigma(A^{s,i}) because the two matrices are entrywise
// conjugate, so powers above k/2 add nothing.
double new_spectral_radius(const Graph& g, const CyclicSignature& s) {
  double r = 0.0;
  for (int i = 1; 2 * i <= s.k(); ++i) r = std::max(r, hermitian_eigenvalues(signed_adjacency(g, s, i)).radius());
  return r;
}

void check_power(int i, int k) {
  if (i < 1 || i >= k) throw PreconditionError("power i must satisfy 1 <= i < k");
}

// On bipartite graphs the one-sided bound for every power implies the
// two-sided bound by spectral symmetry; a disagreement is a bug.
void cross_check_hit(const Graph& g, const CyclicSignature& s, double rho) {
  if (!bipartition(g)) return;
  bool all_one_sided = true;
  for (int i = 1; i < s.k() && all_one_sided; ++i) all_one_sided = one_sided_ok(g, s, i, rho);
  if (all_one_sided && !two_sided_ok(g, s, rho)) {
    throw std::logic_error("bipartite spectral symmetry violated on a search hit");
  }
}

struct ChunkResult {
  std::optional<std::uint64_t> first;  // first passing index in the chunk
  double first_score = 0.0;
  double best = std::numeric_limits<double>::infinity();
  std::uint64_t passing = 0;
};

}  // namespace

bool one_sided_ok(const Graph& g, const CyclicSignature& s, int i, double rho) {
  check_power(i, s.k());
  return spectral_max(g, s, i) <= rho + kRamanujanSlack;
}

bool two_sided_ok(const Graph& g, const CyclicSignature& s, double rho) {
  return new_spectral_radius(g, s) <= rho + kRamanujanSlack;
}

double search_score(const Graph& g, const CyclicSignature& s, const SearchMode& mode) {
  if (mode.kind == SearchMode::Kind::OneSided) return spectral_max(g, s, mode.power);
  return new_spectral_radius(g, s);
}

SearchOutcome exhaustive_search(const Graph& g, int k, const SearchMode& mode, double rho, bool census,
                                std::uint64_t budget) {
  if (k < 2) throw PreconditionError("k must be >= 2");
  if (mode.kind == SearchMode::Kind::OneSided) check_power(mode.power, k);
  const std::size_t m = g.num_edges();
  const std::uint64_t total = int_pow_saturating(static_cast<std::uint64_t>(k), m);
  if (total > budget) {
    throw BudgetExceeded("exhaustive search needs " + std::to_string(k) + "^" + std::to_string(m) +
                         " assignments, budget is " + std::to_string(budget));
  }

  auto decode = [&](std::uint64_t idx) {
    std::vector<int> exps(m);
    for (std::size_t t = m; t-- > 0;) {
      exps[t] = static_cast<int>(idx % static_cast<std::uint64_t>(k));
      idx /= static_cast<std::uint64_t>(k);
    }
    return CyclicSignature(k, std::move(exps));
  };

  SearchOutcome out;
  out.strategy = "exhaustive";
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  const std::uint64_t batch = std::max<std::uint64_t>(1, 4 * thread_count());
  double best = std::numeric_limits<double>::infinity();
  std::uint64_t passing = 0;

  for (std::uint64_t c0 = 0; c0 < chunks; c0 += batch) {
    const std::uint64_t nb = std::min(batch, chunks - c0);
    std::vector<ChunkResult> res(nb);
    parallel_tasks(nb, [&](std::size_t b) {
      ChunkResult& r = res[b];
      const std::uint64_t begin = (c0 + b) * kChunk;
      const std::uint64_t end = std::min(total, begin + kChunk);
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        const double score = search_score(g, decode(idx), mode);
        r.best = std::min(r.best, score);
        if (score <= rho + kRamanujanSlack) {
          ++r.passing;
          if (!r.first) {
            r.first = idx;
            r.first_score = score;
            if (!census) break;
          }
        }
      }
    });
    for (const ChunkResult& r : res) {
      best = std::min(best, r.best);
      passing += r.passing;
      if (r.first && !out.signature) {
        out.signature = decode(*r.first);
        out.tested = *r.first + 1;
        out.best_lambda_max = r.first_score;
        if (!census) break;
      }
    }
    if (out.signature && !census) break;
  }

  if (census) {
    out.census = passing;
    out.tested = total;
  }
  if (!out.signature) {
    out.tested = total;
    out.best_lambda_max = best;
  } else {
    cross_check_hit(g, *out.signature, rho);
  }
  return out;
}

SearchOutcome random_search(const Graph& g, int k, const SearchMode& mode, double rho, std::uint64_t max_iters,
                            std::uint64_t seed) {
  if (max_iters < 1) throw PreconditionError("random search needs max_iters >= 1");
  if (k < 2) throw PreconditionError("k must be >= 2");
  if (mode.kind == SearchMode::Kind::OneSided) check_power(mode.power, k);

  SearchOutcome out;
  out.strategy = "random";
  out.seed = seed;
  std::mt19937_64 rng(seed);
  const std::uint64_t batch = std::max<std::uint64_t>(16, 4 * thread_count());
  double best = std::numeric_limits<double>::infinity();

  for (std::uint64_t done = 0; done < max_iters;) {
    const std::uint64_t nb = std::min(batch, max_iters - done);
    std::vector<CyclicSignature> cand;
    cand.reserve(nb);
    for (std::uint64_t b = 0; b < nb; ++b) cand.push_back(random_signature(g, k, rng));
    std::vector<double> score(nb);
    parallel_tasks(nb, [&](std::size_t b) { score[b] = search_score(g, cand[b], mode); });
    for (std::uint64_t b = 0; b < nb; ++b) {
      best = std::min(best, score[b]);
      if (score[b] <= rho + kRamanujanSlack) {
        out.signature = cand[b];
        out.tested = done + b + 1;
        out.best_lambda_max = score[b];
        cross_check_hit(g, cand[b], rho);
        return out;
      }
    }
    done += nb;
  }
  out.tested = max_iters;
  out.best_lambda_max = best;
  return out;
}

SearchOutcome greedy_conditional_search(const Graph& g, int k, int i, std::uint64_t budget) {
  if (k < 2) throw PreconditionError("k must be >= 2");
  check_power(i, k);
  const std::size_t m = g.num_edges();
  const std::uint64_t per_step = int_pow_saturating(static_cast<std::uint64_t>(k), m);
  if (per_step > budget) {
    throw BudgetExceeded("greedy search needs " + std::to_string(k) + "^" + std::to_string(m) +
                         " completions in its first step, budget is " + std::to_string(budget));
  }

  SearchOutcome out;
  out.strategy = "greedy";
  PartialAssignment a = PartialAssignment::all_free(k, m);
  if (g.num_vertices() > 0) out.root_chain.push_back(largest_root(expected_char_poly(g, i, a, budget)));

  std::vector<int> chosen;
  for (std::size_t q = 0; q < m; ++q) {
    double best_root = std::numeric_limits<double>::infinity();
    int best_t = 0;
    for (int t = 0; t < k; ++t) {
      a.fixed[q] = t;
      const Polynomial p = expected_char_poly(g, i, a, budget);
      out.tested += int_pow_saturating(static_cast<std::uint64_t>(k), m - q - 1);
      const double r = largest_root(p);
      if (t == 0 || r < best_root - 1e-12 * (1.0 + std::abs(best_root))) {
        best_root = r;
        best_t = t;
      }
    }
    a.fixed[q] = best_t;
    chosen.push_back(best_t);
    out.root_chain.push_back(best_root);
  }
  out.signature = CyclicSignature(k, chosen);
  out.best_lambda_max = g.num_vertices() > 0 ? spectral_max(g, *out.signature, i) : 0.0;
  return out;
}

}  // namespace cyclift
