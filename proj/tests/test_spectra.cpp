#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cyclift/corpus.hpp"
#include "cyclift/errors.hpp"
#include "cyclift/hermitian.hpp"
#include "cyclift/spectra.hpp"

using namespace cyclift;

namespace {

std::vector<double> eigen_oracle(const HermitianMatrix& h) {
  const auto n = static_cast<Eigen::Index>(h.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = h(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return v;
}

HermitianMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> nd;
  HermitianMatrix h(n);
  for (std::size_t r = 0; r < n; ++r) {
    h(r, r) = nd(rng);
    for (std::size_t c = r + 1; c < n; ++c) h.set_pair(r, c, {nd(rng), nd(rng)});
  }
  return h;
}

const cplx kXi3 = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);

}  // namespace

TEST_CASE("hermitian_eigenvalues small cases") {
  CHECK(hermitian_eigenvalues(adjacency_matrix(complete_bipartite(1))).values == std::vector<double>{-1.0, 1.0});
  const auto tri = hermitian_eigenvalues(adjacency_matrix(cycle_graph(3))).values;
  REQUIRE(tri.size() == 3);
  CHECK(tri[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(tri[1] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(tri[2] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(hermitian_eigenvalues(HermitianMatrix(4)).values == std::vector<double>(4, 0.0));
  CHECK(hermitian_eigenvalues(HermitianMatrix(0)).values.empty());

  HermitianMatrix bad(2);
  bad(0, 1) = {0.0, 1.0};
  bad(1, 0) = {0.0, 1.0};
  CHECK_THROWS_AS(hermitian_eigenvalues(bad), PreconditionError);
  HermitianMatrix complex_diag(1);
  complex_diag(0, 0) = {1.0, 1e-6};
  CHECK_THROWS_AS(hermitian_eigenvalues(complex_diag), PreconditionError);
}

TEST_CASE("hermitian_eigenvalues against an independent solver") {
  std::mt19937_64 rng(1);
  for (std::size_t n : {1, 2, 3, 5, 8, 17, 40, 96}) {
    for (int rep = 0; rep < 3; ++rep) {
      const HermitianMatrix h = random_hermitian(rng, n);
      const auto ours = hermitian_eigenvalues(h);
      const auto ref = eigen_oracle(h);
      CAPTURE(n);
      CHECK(std::is_sorted(ours.values.begin(), ours.values.end()));
      double worst = 0.0;
      for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, std::abs(ours.values[j] - ref[j]));
      CHECK(worst <= 1e-9 * (1.0 + h.inf_norm()));
    }
  }
  SUBCASE("highly degenerate spectra") {
    // lift of K_{3,3} by the identity: every eigenvalue tripled
    const Graph g = lift_graph(complete_bipartite(3), CyclicSignature::identity(3, 9));
    const auto h = adjacency_matrix(g);
    const auto ours = hermitian_eigenvalues(h);
    const auto ref = eigen_oracle(h);
    for (std::size_t j = 0; j < ref.size(); ++j) CHECK(std::abs(ours.values[j] - ref[j]) <= 1e-12);
  }
}

TEST_CASE("tridiagonal reduction preserves the spectrum") {
  std::mt19937_64 rng(2);
  const HermitianMatrix h = random_hermitian(rng, 12);
  std::vector<double> d, e;
  hermitian_tridiagonalize(h, d, e);
  REQUIRE(d.size() == 12);
  REQUIRE(e.size() == 11);
  for (double x : e) CHECK(x >= 0.0);
  const auto tri = tridiagonal_eigenvalues(d, e);
  const auto ref = eigen_oracle(h);
  for (std::size_t j = 0; j < ref.size(); ++j) CHECK(tri[j] == doctest::Approx(ref[j]).epsilon(1e-11));
}

TEST_CASE("signed_adjacency") {
  const Graph k2 = complete_bipartite(1);
  const CyclicSignature s(3, {1});
  const auto a = signed_adjacency(k2, s, 1);
  CHECK(std::abs(a(0, 1) - kXi3) < 1e-15);
  CHECK(std::abs(a(1, 0) - std::conj(kXi3)) < 1e-15);
  CHECK_THROWS_AS(signed_adjacency(k2, s, 3), PreconditionError);
  CHECK_THROWS_AS(signed_adjacency(k2, s, -1), PreconditionError);

  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_graph(rng, 2, 8, 0.5);
    const int k = 2 + t % 5;
    const auto sig = random_signature(g, k, rng);
    CHECK(max_entry_difference(signed_adjacency(g, sig, 0), adjacency_matrix(g)) == 0.0);
    for (int i = 1; i < k; ++i) {
      CHECK(max_entry_difference(signed_adjacency(g, sig, i), signed_adjacency(g, sig, k - i).conjugate()) <=
            1e-15);
      // A^{s,i} = sum_l xi^{il} A_l
      HermitianMatrix sum(g.num_vertices());
      for (int l = 0; l < k; ++l) {
        const auto b = signature_block(g, sig, l);
        for (int r = 0; r < g.num_vertices(); ++r)
          for (int c = 0; c < g.num_vertices(); ++c) sum(r, c) += root_of_unity(k, 1LL * i * l) * b(r, c);
      }
      CHECK(max_entry_difference(sum, signed_adjacency(g, sig, i)) == 0.0);
    }
    for (int l = 0; l < k; ++l) {
      const auto a_l = signature_block(g, sig, l);
      const auto a_kl = signature_block(g, sig, (k - l) % k);
      for (int r = 0; r < g.num_vertices(); ++r)
        for (int c = 0; c < g.num_vertices(); ++c) CHECK(a_l(r, c) == a_kl(c, r));
    }
  }
}

TEST_CASE("lift_graph") {
  const Graph k2 = complete_bipartite(1);
  const Graph l0 = lift_graph(k2, CyclicSignature(3, {0}));
  CHECK(l0.num_vertices() == 6);
  CHECK(l0.num_components() == 3);
  const Graph l1 = lift_graph(k2, CyclicSignature(3, {1}));
  // u_i = 0*3+i, v_i = 1*3+i
  CHECK(l1.edges() == std::vector<Edge>{{0, 4}, {1, 5}, {2, 3}});

  const Graph tri = cycle_graph(3);
  const Graph c9 = lift_graph(tri, CyclicSignature(3, {1, 0, 0}));
  CHECK(c9.num_vertices() == 9);
  CHECK(c9.num_edges() == 9);
  CHECK(c9.regular_degree() == 2);
  CHECK(c9.is_connected());

  std::mt19937_64 rng(6);
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_graph(rng, 2, 7, 0.5);
    const int k = 2 + t % 4;
    const auto s = random_signature(g, k, rng);
    const Graph lift = lift_graph(g, s);
    CHECK(lift.num_vertices() == k * g.num_vertices());
    CHECK(lift.num_edges() == k * g.num_edges());
    // block-circulant assembly reproduces the lift after relabelling i*n+u -> u*k+i
    const auto bc = block_circulant_lift(g, s);
    const auto adj = adjacency_matrix(lift);
    const int n = g.num_vertices();
    bool same = true;
    for (int a = 0; a < n * k; ++a)
      for (int b = 0; b < n * k; ++b) {
        const int ua = a % n, ia = a / n, ub = b % n, ib = b / n;
        same = same && bc(a, b) == adj(ua * k + ia, ub * k + ib);
      }
    CHECK(same);
  }
}

TEST_CASE("lift_spectrum_check") {
  SUBCASE("identity signature gives k copies") {
    for (const auto& ng : default_corpus()) {
      const auto rep = lift_spectrum_check(ng.graph, CyclicSignature::identity(3, ng.graph.num_edges()));
      CHECK(rep.match);
      const auto base = hermitian_eigenvalues(adjacency_matrix(ng.graph));
      std::vector<Spectrum> three(3, base);
      CHECK(max_discrepancy(rep.lift, merge(three)) <= 1e-8);
    }
  }
  SUBCASE("C9 from the triangle matches the circulant closed form") {
    const auto rep = lift_spectrum_check(cycle_graph(3), CyclicSignature(3, {1, 0, 0}));
    CHECK(rep.match);
    std::vector<double> closed;
    for (int j = 0; j < 9; ++j) closed.push_back(2.0 * std::cos(2.0 * std::numbers::pi * j / 9.0));
    std::sort(closed.begin(), closed.end());
    for (std::size_t j = 0; j < 9; ++j) {
      CHECK(rep.lift.values[j] == doctest::Approx(closed[j]).epsilon(1e-12));
      CHECK(rep.decomposed.values[j] == doctest::Approx(closed[j]).epsilon(1e-12));
    }
  }
  SUBCASE("random instances") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 40; ++t) {
      const Graph g = random_graph(rng, 2, 8, 0.5);
      const int k = 2 + t % 5;
      CHECK(lift_spectrum_check(g, random_signature(g, k, rng)).match);
    }
  }
}

TEST_CASE("new_eigenvalues") {
  const Graph p = petersen_graph();
  const auto base = hermitian_eigenvalues(adjacency_matrix(p));
  const auto ne = new_eigenvalues(p, CyclicSignature::identity(4, 15));
  std::vector<Spectrum> three(3, base);
  CHECK(max_discrepancy(ne, merge(three)) <= 1e-10);

  const auto k2 = new_eigenvalues(complete_bipartite(1), CyclicSignature(3, {2}));
  REQUIRE(k2.size() == 4);
  CHECK(k2.values[0] == doctest::Approx(-1.0));
  CHECK(k2.values[1] == doctest::Approx(-1.0));
  CHECK(k2.values[2] == doctest::Approx(1.0));
  CHECK(k2.values[3] == doctest::Approx(1.0));

  std::mt19937_64 rng(10);
  for (int t = 0; t < 20; ++t) {
    const Graph g = random_graph(rng, 2, 8, 0.6);
    const auto s = random_signature(g, 3, rng);
    const auto ps = power_spectra(g, s);
    CHECK(max_discrepancy(ps[1], ps[2]) <= 1e-10 * (1 + ps[1].radius()));
    CHECK(new_eigenvalues(g, s).size() == 2 * static_cast<std::size_t>(g.num_vertices()));
  }
}

TEST_CASE("bipartite_symmetry_check") {
  const Graph k33 = complete_bipartite(3);
  const auto sp = hermitian_eigenvalues(adjacency_matrix(k33));
  const std::vector<double> expected{-3, 0, 0, 0, 0, 3};
  for (std::size_t j = 0; j < 6; ++j) CHECK(std::abs(sp.values[j] - expected[j]) <= 1e-12);
  CHECK(bipartite_symmetry_check(k33, CyclicSignature::identity(3, 9), 0));
  CHECK(bipartite_symmetry_check(complete_bipartite(1), CyclicSignature(5, {3}), 2));
  CHECK_THROWS_AS(bipartite_symmetry_check(cycle_graph(3), CyclicSignature::identity(3, 3), 1), PreconditionError);

  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_bipartite_graph(rng, 5, 0.6);
    const int k = 2 + t % 5;
    const auto s = random_signature(g, k, rng);
    CHECK(bipartite_symmetry_check(g, s, t % k));
  }
}

TEST_CASE("switching_invariance") {
  std::mt19937_64 rng(14);
  const Graph g = petersen_graph();
  const auto s = random_signature(g, 4, rng);
  const auto zero = switching_invariance(g, s, {4, std::vector<int>(10, 0)}, 1);
  CHECK(zero.ok);
  CHECK(zero.conjugation_defect == 0.0);

  // balanced s is switching equivalent to the identity
  const Graph c6 = cycle_graph(6);
  const CyclicSignature bal(3, {1, 2, 0, 1, 1, 2});
  REQUIRE(is_balanced(c6, bal));
  CHECK(max_discrepancy(hermitian_eigenvalues(signed_adjacency(c6, bal, 1)),
                        hermitian_eigenvalues(adjacency_matrix(c6))) <= 1e-12);

  for (int t = 0; t < 30; ++t) {
    const Graph h = random_graph(rng, 2, 8, 0.5);
    const int k = 2 + t % 5;
    const auto sig = random_signature(h, k, rng);
    SwitchingFunction th{k, std::vector<int>(h.num_vertices())};
    for (int& x : th.theta) x = static_cast<int>(rng() % k);
    CHECK(switching_invariance_check(h, sig, th, static_cast<int>(rng() % k)));
  }
}
