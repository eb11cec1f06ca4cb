#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cyclift/graph.hpp"

namespace cyclift {

// Cyclic signature with values in the k-th roots of unity. Exponent l_j is
// the signature xi^{l_j} of edge j in its canonical orientation (u < v);
// the reversed edge carries (k - l_j) mod k.
class CyclicSignature {
 public:
  CyclicSignature() = default;
  // Throws PreconditionError if k < 2 or an exponent is outside [0, k).
  CyclicSignature(int k, std::vector<int> exponents);

  // All-zero (identity) signature on m edges.
  static CyclicSignature identity(int k, std::size_t m);

  int k() const { return k_; }
  std::size_t size() const { return exps_.size(); }
  const std::vector<int>& exponents() const { return exps_; }
  int operator[](std::size_t j) const { return exps_[j]; }

  // Exponent seen when walking the oriented edge.
  int exponent(OrientedEdge e) const {
    const int l = exps_[e.edge];
    return e.forward ? l : (k_ - l) % k_;
  }

  friend bool operator==(const CyclicSignature&, const CyclicSignature&) = default;

 private:
  int k_ = 2;
  std::vector<int> exps_;
};

// Switching function theta(u) = xi^{theta[u]}.
struct SwitchingFunction {
  int k = 2;
  std::vector<int> theta;

  SwitchingFunction inverse() const;
};

// i.i.d. uniform exponents drawn from `rng` in edge order.
CyclicSignature random_signature(const Graph& g, int k, std::mt19937_64& rng);
CyclicSignature random_signature(const Graph& g, int k, std::uint64_t seed);

// s^theta(u,v) = theta(u) s(u,v) theta(v)^{-1}.
CyclicSignature switch_signature(const Graph& g, const CyclicSignature& s, const SwitchingFunction& th);

// Sum of oriented exponents along a closed walk, mod k.
int cycle_exponent(const Graph& g, const CyclicSignature& s, const std::vector<OrientedEdge>& cycle);

bool is_balanced(const Graph& g, const CyclicSignature& s);

// theta with switch(s, theta) == identity, when s is balanced.
std::optional<SwitchingFunction> balancing_switch(const Graph& g, const CyclicSignature& s);

// theta with switch(s1, theta) == s2, when one exists.
std::optional<SwitchingFunction> switching_equivalent(const Graph& g, const CyclicSignature& s1,
                                                      const CyclicSignature& s2);

}  // namespace cyclift
