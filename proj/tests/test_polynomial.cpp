#include <doctest.h>

#include <cmath>
#include <random>

#include "cyclift/corpus.hpp"
#include "cyclift/errors.hpp"
#include "cyclift/matching.hpp"
#include "cyclift/polynomial.hpp"
#include "cyclift/spectra.hpp"

using namespace cyclift;

namespace {

Polynomial P(std::vector<double> c) { return Polynomial(std::move(c)); }

// Brute force over edge subsets.
std::vector<long long> matchings_oracle(const Graph& g) {
  const std::size_t m = g.num_edges();
  std::vector<long long> counts(g.num_vertices() / 2 + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> used(g.num_vertices(), 0);
    bool ok = true;
    int size = 0;
    for (std::size_t j = 0; j < m && ok; ++j) {
      if (!(mask >> j & 1u)) continue;
      ok = !used[g.edge(j).u] && !used[g.edge(j).v];
      used[g.edge(j).u] = used[g.edge(j).v] = 1;
      ++size;
    }
    if (ok) ++counts[size];
  }
  return counts;
}

}  // namespace

TEST_CASE("Polynomial arithmetic") {
  const Polynomial p = P({1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(P({0, 0}).is_zero());
  CHECK(P({}).degree() == -1);
  CHECK(p(3.0) == 7.0);
  CHECK((p * 2.0).coeffs() == std::vector<double>{2, 4});
  CHECK((p - p).is_zero());
  CHECK(P({0, 0, 3}).derivative().coeffs() == std::vector<double>{0, 6});
  CHECK(max_coeff_difference(P({1, 2}), P({1, 2, 1e-3})) == 1e-3);
  const std::vector<double> roots{1.0, -1.0, 2.0};
  CHECK(from_roots(roots).coeffs() == std::vector<double>{2, -1, -2, 1});
}

TEST_CASE("char_poly") {
  CHECK(max_coeff_difference(char_poly(adjacency_matrix(complete_bipartite(1))), P({-1, 0, 1})) <= 1e-14);
  CHECK(max_coeff_difference(char_poly(adjacency_matrix(cycle_graph(3))), P({-2, -3, 0, 1})) <= 1e-13);
  CHECK(char_poly(HermitianMatrix(2)).coeffs() == std::vector<double>{0, 0, 1});

  SUBCASE("bipartite graphs have vanishing alternate coefficients") {
    for (const auto& ng : default_corpus()) {
      if (!bipartition(ng.graph)) continue;
      const Polynomial f = char_poly(adjacency_matrix(ng.graph));
      const int n = ng.graph.num_vertices();
      for (int j = (n + 1) % 2; j <= n; j += 2) CHECK(std::abs(f.coeff(j)) <= 1e-9);
    }
  }
}

TEST_CASE("roots and real-rootedness") {
  CHECK(is_real_rooted(P({-1, 0, 1})));
  CHECK_FALSE(is_real_rooted(P({1, 0, 1})));
  CHECK_THROWS_AS(is_real_rooted(Polynomial()), PreconditionError);
  CHECK(largest_root(P({-1, 0, 1})) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(largest_root(P({2, 0, -4, 0, 1})) == doctest::Approx(std::sqrt(2.0 + std::sqrt(2.0))).epsilon(1e-12));
  CHECK(largest_root(P({-2, -3, 0, 1})) == doctest::Approx(2.0).epsilon(1e-7));
  CHECK_THROWS_AS(largest_root(P({1, 0, 1})), PreconditionError);

  SUBCASE("repeated roots are recognised as real") {
    const std::vector<double> r{-1, -1, -1, -1, 2, 2, 0.5};
    const Polynomial p = from_roots(r);
    CHECK(is_real_rooted(p));
    const auto rr = real_roots(p);
    REQUIRE(rr.size() == r.size());
    CHECK(rr.front() == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(rr.back() == doctest::Approx(2.0).epsilon(1e-6));
  }
  SUBCASE("zero roots are factored exactly") {
    const auto rr = real_roots(P({0, 0, 0, -1, 0, 1}));
    REQUIRE(rr.size() == 5);
    CHECK(rr[1] == 0.0);
    CHECK(rr[2] == 0.0);
    CHECK(rr[3] == 0.0);
  }
  SUBCASE("symmetric roots around an exact zero stay distinct") {
    const auto rr = real_roots(P({0, -2, 0, 1}));
    REQUIRE(rr.size() == 3);
    CHECK(rr[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
    CHECK(rr[1] == 0.0);
    CHECK(rr[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(largest_root(matching_polynomial(path_graph(3))) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  }
  SUBCASE("mixed multiplicities recover every root") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> pick(-3, 3);
    for (int t = 0; t < 200; ++t) {
      std::vector<double> r;
      const int n = 1 + t % 9;
      for (int j = 0; j < n; ++j) {
        const double x = 0.5 * pick(rng);
        r.push_back(x);
        if (t % 2) r.push_back(-x);
      }
      std::sort(r.begin(), r.end());
      const auto got = real_roots(from_roots(r));
      REQUIRE(got.size() == r.size());
      for (std::size_t j = 0; j < r.size(); ++j) CHECK(std::abs(got[j] - r[j]) <= 1e-3);
      CHECK(largest_root(from_roots(r)) == doctest::Approx(r.back()).epsilon(1e-4));
    }
  }
  SUBCASE("close but distinct complex pair is not real") {
    // (x - 1)^2 + 1e-4
    CHECK_FALSE(is_real_rooted(P({1 + 1e-4, -2, 1})));
  }
  SUBCASE("random real-rooted polynomials") {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> nd;
    for (int t = 0; t < 100; ++t) {
      std::vector<double> r(1 + t % 12);
      for (double& x : r) x = 2.0 * nd(rng);
      const Polynomial p = from_roots(r) * (0.5 + t % 3);
      CHECK(is_real_rooted(p));
      CHECK(largest_root(p) == doctest::Approx(*std::max_element(r.begin(), r.end())).epsilon(1e-6));
    }
  }
}

TEST_CASE("has_common_interlacing") {
  const std::vector<Polynomial> one{P({-1, 0, 1})};
  CHECK(has_common_interlacing(one));
  const std::vector<Polynomial> nested{P({-1, 0, 1}), P({-4, 0, 1})};
  CHECK(has_common_interlacing(nested));
  const std::vector<Polynomial> apart{P({0, -2, 1}), P({15, -8, 1})};
  CHECK_FALSE(has_common_interlacing(apart));
  const std::vector<Polynomial> mixed{P({-1, 0, 1}), P({0, 1})};
  CHECK_THROWS_AS(has_common_interlacing(mixed), PreconditionError);
}

TEST_CASE("matching counts against brute force") {
  CHECK(matching_counts(complete_bipartite(1)).to_strings() == std::vector<std::string>{"1", "1"});
  CHECK(matching_counts(path_graph(3)).to_strings() == std::vector<std::string>{"1", "2"});
  CHECK(matching_counts(cycle_graph(4)).to_strings() == std::vector<std::string>{"1", "4", "2"});
  CHECK(matching_polynomial_exact(cycle_graph(4)) == std::vector<std::string>{"2", "0", "-4", "0", "1"});
  CHECK(matching_polynomial(path_graph(3)).coeffs() == std::vector<double>{0, -2, 0, 1});
  CHECK(matching_polynomial(complete_bipartite(1)).coeffs() == std::vector<double>{-1, 0, 1});

  for (const auto& ng : default_corpus()) {
    CAPTURE(ng.name);
    const auto oracle = matchings_oracle(ng.graph);
    const auto ours = matching_counts(ng.graph);
    REQUIRE(ours.counts.size() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(ours.counts[i] == oracle[i]);
    CHECK(ours.counts[1] == ng.graph.num_edges());
  }
  std::mt19937_64 rng(22);
  for (int t = 0; t < 40; ++t) {
    const Graph g = random_graph(rng, 1, 9, 0.4);
    if (g.num_edges() > 18) continue;
    const auto oracle = matchings_oracle(g);
    const auto ours = matching_counts(g);
    for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(ours.counts[i] == oracle[i]);
  }
}

TEST_CASE("matching counts stay exact beyond 64 bits") {
  // 2 x n ladder, rungs interleaved so the recursion frontier stays small;
  // perfect matchings follow the Fibonacci recurrence
  const int n = 100;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int c = 0; c < n; ++c) {
    edges.emplace_back(2 * c, 2 * c + 1);
    if (c + 1 < n) {
      edges.emplace_back(2 * c, 2 * c + 2);
      edges.emplace_back(2 * c + 1, 2 * c + 3);
    }
  }
  const auto counts = matching_counts(Graph(2 * n, edges));
  BigInt a = 1, b = 2;  // ladders of length 1 and 2
  for (int c = 3; c <= n; ++c) {
    const BigInt next = a + b;
    a = b;
    b = next;
  }
  CHECK(counts.counts.back() == b);
  CHECK(b > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("matching polynomial roots") {
  for (const auto& ng : default_corpus()) {
    CAPTURE(ng.name);
    const Polynomial mu = matching_polynomial(ng.graph);
    REQUIRE(is_real_rooted(mu));
    const int d = ng.graph.max_degree();
    const double hl = 2.0 * std::sqrt(std::max(d - 1, 0));
    const auto roots = real_roots(mu);
    REQUIRE(static_cast<int>(roots.size()) == ng.graph.num_vertices());
    for (double r : roots) {
      if (d >= 2) CHECK(std::abs(r) <= hl + 1e-9);
      CHECK(std::abs(mu(r)) <= 1e-6 * (1 + std::abs(r)));
    }
    // largest root of mu is the largest eigenvalue of the path tree's
    // analogue only for trees; for every graph it dominates lambda_max of
    // some signature, so it is at least the average degree bound sqrt(m/n)
    CHECK(largest_root(mu) >= std::sqrt(static_cast<double>(ng.graph.num_edges()) / ng.graph.num_vertices()) - 1e-9);
  }
}
