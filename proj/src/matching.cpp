#include "cyclift/matching.hpp"

#include <map>

namespace cyclift {

namespace {

using Key = std::vector<std::uint64_t>;

class Counter {
 public:
  explicit Counter(const Graph& g) : g_(g), words_((static_cast<std::size_t>(g.num_vertices()) + 63) / 64) {}

  std::vector<BigInt> run() {
    Key all(words_, 0);
    for (Vertex u = 0; u < g_.num_vertices(); ++u) set(all, u, true);
    return count(all);
  }

 private:
  static bool get(const Key& k, Vertex u) { return (k[u / 64] >> (u % 64)) & 1U; }
  static void set(Key& k, Vertex u, bool on) {
    const std::uint64_t bit = std::uint64_t{1} << (u % 64);
    if (on) {
      k[u / 64] |= bit;
    } else {
      k[u / 64] &= ~bit;
    }
  }

  Vertex lowest(const Key& k) const {
    for (std::size_t w = 0; w < k.size(); ++w) {
      if (k[w]) return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(k[w])));
    }
    return -1;
  }

  const std::vector<BigInt>& count(const Key& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    std::vector<BigInt> out{1};
    const Vertex v = lowest(s);
    if (v >= 0) {
      Key without_v = s;
      set(without_v, v, false);
      out = count(without_v);
      for (const Incidence& inc : g_.incident(v)) {
        if (!get(s, inc.neighbor)) continue;
        Key without_both = without_v;
        set(without_both, inc.neighbor, false);
        const std::vector<BigInt>& sub = count(without_both);
        if (out.size() < sub.size() + 1) out.resize(sub.size() + 1);
        for (std::size_t i = 0; i < sub.size(); ++i) out[i + 1] += sub[i];
      }
    }
    return memo_.emplace(s, std::move(out)).first->second;
  }

  const Graph& g_;
  std::size_t words_;
  std::map<Key, std::vector<BigInt>> memo_;
};

}  // namespace

std::vector<std::string> MatchingCounts::to_strings() const {
  std::vector<std::string> out;
  for (const BigInt& c : counts) out.push_back(c.str());
  return out;
}

MatchingCounts matching_counts(const Graph& g) {
  MatchingCounts mc{Counter(g).run()};
  mc.counts.resize(static_cast<std::size_t>(g.num_vertices()) / 2 + 1);
  return mc;
}

std::vector<std::string> matching_polynomial_exact(const Graph& g) {
  const MatchingCounts mc = matching_counts(g);
  const int n = g.num_vertices();
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < mc.counts.size(); ++i) {
    BigInt c = mc.counts[i];
    if (i % 2 == 1) c = -c;
    coeffs[static_cast<std::size_t>(n) - 2 * i] = c;
  }
  std::vector<std::string> out;
  for (const BigInt& c : coeffs) out.push_back(c.str());
  return out;
}

Polynomial matching_polynomial(const Graph& g) {
  const MatchingCounts mc = matching_counts(g);
  const int n = g.num_vertices();
  std::vector<double> coeffs(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::size_t i = 0; i < mc.counts.size(); ++i) {
    const double c = mc.counts[i].convert_to<double>();
    coeffs[static_cast<std::size_t>(n) - 2 * i] = (i % 2 == 1) ? -c : c;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace cyclift
