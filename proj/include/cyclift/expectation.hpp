#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclift/graph.hpp"
#include "cyclift/polynomial.hpp"
#include "cyclift/signature.hpp"

namespace cyclift {

// Default cap on the number of completions any full enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = 531441;  // 3^12

// k^e, saturating at UINT64_MAX.
std::uint64_t int_pow_saturating(std::uint64_t k, std::size_t e);

// Partial signature: fixed[j] holds the exponent of edge j or nullopt when
// edge j is free. weights[j] is the distribution of a free edge over
// {0..k-1}; an empty `weights` means uniform on every free edge.
struct PartialAssignment {
  int k = 3;
  std::vector<std::optional<int>> fixed;
  std::vector<std::vector<double>> weights;

  static PartialAssignment all_free(int k, std::size_t m) {
    return {k, std::vector<std::optional<int>>(m), {}};
  }
};

// sum over completions of prod_j p_j(l_j) * det(xI - A^{s,i}).
// Enumerates free edges in edge-lexicographic order (lowest free edge most
// significant) in fixed-size chunks whose partial sums are reduced in
// order, so the result is bit-identical for any worker count.
// Throws BudgetExceeded when k^{#free} > budget and PreconditionError for
// malformed weights.
Polynomial expected_char_poly(const Graph& g, int i, const PartialAssignment& a,
                              std::uint64_t budget = kDefaultBudget);

// g^{s_1..s_q, t} for t = 0..k-1, uniform over edges q+1..m. `prefix`
// holds the exponents of edges 0..q-1.
std::vector<Polynomial> interlacing_siblings(const Graph& g, int k, int i, const std::vector<int>& prefix,
                                             std::uint64_t budget = kDefaultBudget);

struct ConvexCombinationReport {
  int trials = 0;
  int failures = 0;
  double worst_imag = 0.0;  // largest |Im| / (1 + |z|) over clustered roots
  std::vector<std::vector<std::vector<double>>> failing_weights;
};

// Random per-edge distributions (a mix of dense, sparse and point-mass
// draws); each weighted expected characteristic polynomial must be
// real-rooted within 1e-6.
ConvexCombinationReport convex_combination_real_rooted_check(const Graph& g, int k, int i, int trials,
                                                             std::uint64_t seed,
                                                             std::uint64_t budget = kDefaultBudget);

struct InterlacingFamilyReport {
  int trials = 0;
  int failures = 0;
  std::vector<std::vector<int>> failing_prefixes;
};

// Random prefixes s_1..s_q (q uniform in [0, m)); the sibling family
// {g^{s_1..s_q,t}}_t must have a common interlacing.
InterlacingFamilyReport interlacing_family_check(const Graph& g, int k, int i, int trials, std::uint64_t seed,
                                                 std::uint64_t budget = kDefaultBudget);

struct RankOneReport {
  bool ok = false;
  double defect = 0.0;
};

// A^{s,i} = sum_j r_j r_j^* - D with r_j = alpha e_u + conj(alpha) e_v,
// alpha = xi^{i l_j / 2} realised as a 2k-th root of unity; checked
// entrywise within 1e-12. Requires 1 <= i < k.
RankOneReport rank_one_decomposition(const Graph& g, const CyclicSignature& s, int i);
inline bool rank_one_decomposition_check(const Graph& g, const CyclicSignature& s, int i) {
  return rank_one_decomposition(g, s, i).ok;
}

}  // namespace cyclift
