#include "cyclift/signature.hpp"

#include <queue>
#include <string>

#include "cyclift/errors.hpp"

namespace cyclift {

namespace {

int mod(int a, int k) {
  const int r = a % k;
  return r < 0 ? r + k : r;
}

void require_match(const Graph& g, const CyclicSignature& s) {
  if (s.size() != g.num_edges()) {
    throw PreconditionError("signature has " + std::to_string(s.size()) + " exponents, graph has " +
                            std::to_string(g.num_edges()) + " edges");
  }
}

}  // namespace

CyclicSignature::CyclicSignature(int k, std::vector<int> exponents) : k_(k), exps_(std::move(exponents)) {
  if (k < 2) throw PreconditionError("signature order k must be >= 2");
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (exps_[j] < 0 || exps_[j] >= k) {
      throw PreconditionError("exponent " + std::to_string(exps_[j]) + " of edge " + std::to_string(j) +
                              " outside [0," + std::to_string(k) + ")");
    }
  }
}

CyclicSignature CyclicSignature::identity(int k, std::size_t m) {
  return CyclicSignature(k, std::vector<int>(m, 0));
}

SwitchingFunction SwitchingFunction::inverse() const {
  SwitchingFunction out{k, theta};
  for (int& t : out.theta) t = mod(-t, k);
  return out;
}

CyclicSignature random_signature(const Graph& g, int k, std::mt19937_64& rng) {
  if (k < 2) throw PreconditionError("signature order k must be >= 2");
  std::uniform_int_distribution<int> dist(0, k - 1);
  std::vector<int> exps(g.num_edges());
  for (int& l : exps) l = dist(rng);
  return CyclicSignature(k, std::move(exps));
}

CyclicSignature random_signature(const Graph& g, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_signature(g, k, rng);
}

CyclicSignature switch_signature(const Graph& g, const CyclicSignature& s, const SwitchingFunction& th) {
  require_match(g, s);
  if (th.theta.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw PreconditionError("switching function size does not match vertex count");
  }
  if (th.k != s.k()) throw PreconditionError("switching function order differs from signature order");
  std::vector<int> exps(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    const Edge e = g.edge(j);
    exps[j] = mod(th.theta[e.u] + s[j] - th.theta[e.v], s.k());
  }
  return CyclicSignature(s.k(), std::move(exps));
}

int cycle_exponent(const Graph& g, const CyclicSignature& s, const std::vector<OrientedEdge>& cycle) {
  require_match(g, s);
  if (!is_closed_walk(g, cycle)) throw PreconditionError("cycle is not a closed walk");
  int total = 0;
  for (const OrientedEdge& e : cycle) total = (total + s.exponent(e)) % s.k();
  return total;
}

bool is_balanced(const Graph& g, const CyclicSignature& s) {
  for (const auto& c : fundamental_cycles(g)) {
    if (cycle_exponent(g, s, c) != 0) return false;
  }
  return true;
}

std::optional<SwitchingFunction> balancing_switch(const Graph& g, const CyclicSignature& s) {
  require_match(g, s);
  const int k = s.k();
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<int> theta(n, 0);
  std::vector<bool> seen(n, false);
  // Potential along a BFS forest: theta(v) = theta(u) + l(u,v) zeroes every
  // tree edge; chords are then zero iff their cycles are balanced.
  for (Vertex r = 0; r < g.num_vertices(); ++r) {
    if (seen[r]) continue;
    seen[r] = true;
    std::queue<Vertex> q;
    q.push(r);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (const Incidence& inc : g.incident(u)) {
        const OrientedEdge e{inc.edge, g.edge(inc.edge).u == u};
        const int want = mod(theta[u] + s.exponent(e), k);
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = true;
          theta[inc.neighbor] = want;
          q.push(inc.neighbor);
        } else if (theta[inc.neighbor] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return SwitchingFunction{k, std::move(theta)};
}

std::optional<SwitchingFunction> switching_equivalent(const Graph& g, const CyclicSignature& s1,
                                                      const CyclicSignature& s2) {
  require_match(g, s1);
  require_match(g, s2);
  if (s1.k() != s2.k()) throw PreconditionError("signatures have different orders");
  const int k = s1.k();
  // s1^theta = s2 iff (s1 - s2)^theta = id, exponentwise.
  std::vector<int> diff(s1.size());
  for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = mod(s1[j] - s2[j], k);
  return balancing_switch(g, CyclicSignature(k, std::move(diff)));
}

}  // namespace cyclift
