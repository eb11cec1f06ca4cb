#include <doctest.h>

#include <array>
#include <random>

#include "cyclift/corpus.hpp"
#include "cyclift/errors.hpp"
#include "cyclift/signature.hpp"

using namespace cyclift;

namespace {

SwitchingFunction random_switch(std::mt19937_64& rng, int k, int n) {
  SwitchingFunction th{k, std::vector<int>(n)};
  std::uniform_int_distribution<int> d(0, k - 1);
  for (int& t : th.theta) t = d(rng);
  return th;
}

bool all_zero(const CyclicSignature& s) {
  for (int l : s.exponents())
    if (l != 0) return false;
  return true;
}

const Graph kTriangle = cycle_graph(3);  // edges {0,1},{1,2},{0,2}

}  // namespace

TEST_CASE("CyclicSignature validation and reversal") {
  CHECK_THROWS_AS(CyclicSignature(1, {0}), PreconditionError);
  CHECK_THROWS_AS(CyclicSignature(3, {3}), PreconditionError);
  CHECK_THROWS_AS(CyclicSignature(3, {-1}), PreconditionError);
  const CyclicSignature s(5, {0, 1, 4});
  for (std::size_t j = 0; j < 3; ++j) CHECK((s.exponent({j, true}) + s.exponent({j, false})) % 5 == 0);
}

TEST_CASE("random_signature") {
  const Graph k2 = complete_bipartite(1);
  const auto s = random_signature(k2, 3, std::uint64_t{0});
  CHECK(s.size() == 1);
  CHECK(s[0] >= 0);
  CHECK(s[0] < 3);
  CHECK(random_signature(petersen_graph(), 4, std::uint64_t{42}) ==
        random_signature(petersen_graph(), 4, std::uint64_t{42}));
  CHECK_THROWS_AS(random_signature(k2, 1, std::uint64_t{0}), PreconditionError);

  std::mt19937_64 rng(0);
  std::array<int, 3> freq{};
  const int draws = 30000;
  for (int t = 0; t < draws; ++t) ++freq[random_signature(k2, 3, rng)[0]];
  for (int f : freq) {
    CHECK(f >= 0.30 * draws);
    CHECK(f <= 0.37 * draws);
  }
}

TEST_CASE("switch_signature") {
  const Graph k2 = complete_bipartite(1);
  const CyclicSignature s(3, {1});
  CHECK(switch_signature(k2, s, {3, {0, 0}}) == s);
  CHECK(switch_signature(k2, s, {3, {0, 1}})[0] == 0);
  CHECK_THROWS_AS(switch_signature(k2, s, {3, {0, 1, 2}}), PreconditionError);
  CHECK_THROWS_AS(switch_signature(k2, s, {4, {0, 1}}), PreconditionError);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_graph(rng, 2, 8, 0.5);
    const int k = 2 + t % 5;
    const auto s2 = random_signature(g, k, rng);
    const auto th = random_switch(rng, k, g.num_vertices());
    CHECK(switch_signature(g, switch_signature(g, s2, th), th.inverse()) == s2);
  }
}

TEST_CASE("cycle_exponent") {
  const auto cycle = fundamental_cycles(kTriangle).front();
  CHECK(cycle_exponent(kTriangle, CyclicSignature::identity(3, 3), cycle) == 0);
  // walk 0->1->2->0: edges 0, 1 forward, edge 2 reversed
  const std::vector<OrientedEdge> walk{{0, true}, {1, true}, {2, false}};
  CHECK(cycle_exponent(kTriangle, CyclicSignature(3, {1, 1, 2}), walk) == 0);  // 1+1+1
  CHECK(cycle_exponent(kTriangle, CyclicSignature(3, {1, 0, 0}), walk) == 1);
  CHECK_THROWS_AS(cycle_exponent(kTriangle, CyclicSignature(3, {1, 0, 0}), {{0, true}, {1, true}}),
                  PreconditionError);
}

TEST_CASE("is_balanced and balancing_switch") {
  CHECK(is_balanced(petersen_graph(), CyclicSignature::identity(3, 15)));
  CHECK_FALSE(is_balanced(kTriangle, CyclicSignature(3, {1, 0, 0})));
  CHECK(is_balanced(path_graph(5), CyclicSignature(3, {1, 2, 0, 1})));

  const auto id = balancing_switch(kTriangle, CyclicSignature::identity(3, 3));
  REQUIRE(id);
  CHECK(all_zero(switch_signature(kTriangle, CyclicSignature::identity(3, 3), *id)));

  const CyclicSignature ones(3, {1, 1, 2});  // 1 on each edge of 0->1->2->0
  CHECK(is_balanced(kTriangle, ones));
  const auto th = balancing_switch(kTriangle, ones);
  REQUIRE(th);
  CHECK(all_zero(switch_signature(kTriangle, ones, *th)));
  CHECK_FALSE(balancing_switch(kTriangle, CyclicSignature(3, {1, 0, 0})).has_value());
}

TEST_CASE("switching_equivalent") {
  const CyclicSignature ones(3, {1, 1, 2});
  const auto same = switching_equivalent(kTriangle, ones, ones);
  REQUIRE(same);
  CHECK(switch_signature(kTriangle, ones, *same) == ones);

  const auto to_id = switching_equivalent(kTriangle, ones, CyclicSignature::identity(3, 3));
  REQUIRE(to_id);
  CHECK(all_zero(switch_signature(kTriangle, ones, *to_id)));

  CHECK_FALSE(switching_equivalent(kTriangle, CyclicSignature(3, {1, 0, 0}), CyclicSignature(3, {2, 0, 0})));
  CHECK_THROWS_AS(switching_equivalent(kTriangle, ones, CyclicSignature::identity(4, 3)), PreconditionError);
}

TEST_CASE("switching properties on random instances") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_graph(rng, 2, 8, 0.5);
    const int k = 2 + t % 5;
    const auto s = random_signature(g, k, rng);
    const auto th = random_switch(rng, k, g.num_vertices());
    const auto sw = switch_signature(g, s, th);
    const auto cycles = fundamental_cycles(g);
    for (const auto& c : cycles) CHECK(cycle_exponent(g, sw, c) == cycle_exponent(g, s, c));

    const auto eq = switching_equivalent(g, s, sw);
    REQUIRE(eq);
    CHECK(switch_signature(g, s, *eq) == sw);

    // equivalence iff all fundamental-cycle exponents agree
    const auto other = random_signature(g, k, rng);
    bool agree = true;
    for (const auto& c : cycles) agree = agree && cycle_exponent(g, s, c) == cycle_exponent(g, other, c);
    CHECK(switching_equivalent(g, s, other).has_value() == agree);

    if (const auto b = balancing_switch(g, s)) CHECK(all_zero(switch_signature(g, s, *b)));
    CHECK(balancing_switch(g, s).has_value() == is_balanced(g, s));
  }
}
