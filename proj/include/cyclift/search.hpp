#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclift/expectation.hpp"
#include "cyclift/graph.hpp"
#include "cyclift/signature.hpp"

namespace cyclift {

// Eigenvalues exactly at the bound pass.
inline constexpr double kRamanujanSlack = 1e-9;
inline constexpr std::uint64_t kDefaultSearchBudget = 1594323;  // 3^13

struct SearchMode {
  enum class Kind { OneSided, TwoSided };
  Kind kind = Kind::TwoSided;
  int power = 1;  // one-sided only

  static SearchMode one_sided(int i) { return {Kind::OneSided, i}; }
  static SearchMode two_sided() { return {Kind::TwoSided, 0}; }
};

struct SearchOutcome {
  std::optional<CyclicSignature> signature;
  std::uint64_t tested = 0;
  // Score of the returned signature, or the best score seen when none
  // passed. One-sided: lambda_max(A^{s,i}); two-sided: max |new eigenvalue|.
  double best_lambda_max = 0.0;
  std::string strategy;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> census;  // passing assignments, census mode only
  // Greedy only: largest root of g^{s_1..s_q} for q = 0..m.
  std::vector<double> root_chain;
};

// lambda_max(A^{s,i}) <= rho + 1e-9; requires 1 <= i < k.
bool one_sided_ok(const Graph& g, const CyclicSignature& s, int i, double rho);

// Every new eigenvalue has |lambda| <= rho + 1e-9.
bool two_sided_ok(const Graph& g, const CyclicSignature& s, double rho);

// Score used by searches (see SearchOutcome::best_lambda_max).
double search_score(const Graph& g, const CyclicSignature& s, const SearchMode& mode);

// All k^m assignments in edge-lexicographic order (edge 0 most
// significant); first passing assignment wins regardless of worker count.
SearchOutcome exhaustive_search(const Graph& g, int k, const SearchMode& mode, double rho, bool census = false,
                                std::uint64_t budget = kDefaultSearchBudget);

// Uniform random signatures from a seeded generator, drawn sequentially.
SearchOutcome random_search(const Graph& g, int k, const SearchMode& mode, double rho, std::uint64_t max_iters,
                            std::uint64_t seed);

// Fixes edges in order; at each step keeps the exponent t whose
// conditional expected characteristic polynomial (uniform over the
// remaining edges) has the smallest largest root, ties to the smallest t.
// Throws BudgetExceeded when k^m > budget.
SearchOutcome greedy_conditional_search(const Graph& g, int k, int i, std::uint64_t budget = kDefaultBudget);

}  // namespace cyclift
