#include "cyclift/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cyclift/errors.hpp"

namespace cyclift {

cplx root_of_unity(int k, long long e) {
  e %= k;
  if (e < 0) e += k;
  // Reduce to an angle phi in [0, pi/4] so that symmetric roots come out as
  // exact reflections of each other.
  const long long n = 8 * e;
  const long long octant = n / k;
  const long long rem = n % k;
  const long long num = octant % 2 == 0 ? rem : k - rem;  // phi = num/k * pi/4
  double c, s;
  if (num == 0) {
    c = 1.0, s = 0.0;
  } else if (num == k) {
    c = s = std::sqrt(0.5);
  } else if (3 * num == 2 * k) {
    c = std::sqrt(3.0) / 2.0, s = 0.5;
  } else {
    const double phi = std::numbers::pi / 4.0 * static_cast<double>(num) / static_cast<double>(k);
    c = std::cos(phi), s = std::sin(phi);
  }
  switch (octant) {
    case 0: return {c, s};
    case 1: return {s, c};
    case 2: return {-s, c};
    case 3: return {-c, s};
    case 4: return {-c, -s};
    case 5: return {-s, -c};
    case 6: return {s, -c};
    default: return {c, -s};
  }
}

HermitianMatrix signed_adjacency(const Graph& g, const CyclicSignature& s, int i) {
  if (s.size() != g.num_edges()) throw PreconditionError("signature does not match graph");
  if (i < 0 || i >= s.k()) {
    throw PreconditionError("power i=" + std::to_string(i) + " outside [0," + std::to_string(s.k()) + ")");
  }
  HermitianMatrix a(static_cast<std::size_t>(g.num_vertices()));
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    const Edge e = g.edge(j);
    a.set_pair(e.u, e.v, root_of_unity(s.k(), static_cast<long long>(i) * s[j]));
  }
  return a;
}

HermitianMatrix adjacency_matrix(const Graph& g) {
  HermitianMatrix a(static_cast<std::size_t>(g.num_vertices()));
  for (const Edge& e : g.edges()) a.set_pair(e.u, e.v, 1.0);
  return a;
}

HermitianMatrix signature_block(const Graph& g, const CyclicSignature& s, int l) {
  const int k = s.k();
  l = ((l % k) + k) % k;
  HermitianMatrix a(static_cast<std::size_t>(g.num_vertices()));
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    const Edge e = g.edge(j);
    if (s[j] == l) a(e.u, e.v) = 1.0;
    if ((k - s[j]) % k == l) a(e.v, e.u) = 1.0;
  }
  return a;
}

HermitianMatrix block_circulant_lift(const Graph& g, const CyclicSignature& s) {
  const int k = s.k();
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<HermitianMatrix> blocks;
  for (int l = 0; l < k; ++l) blocks.push_back(signature_block(g, s, l));
  HermitianMatrix out(n * static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const HermitianMatrix& blk = blocks[static_cast<std::size_t>(((b - a) % k + k) % k)];
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out(a * n + r, b * n + c) = blk(r, c);
      }
    }
  }
  return out;
}

Graph lift_graph(const Graph& g, const CyclicSignature& s) {
  if (s.size() != g.num_edges()) throw PreconditionError("signature does not match graph");
  const int k = s.k();
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g.num_edges() * static_cast<std::size_t>(k));
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    const Edge e = g.edge(j);
    for (int i = 0; i < k; ++i) {
      edges.emplace_back(e.u * k + i, e.v * k + (i + s[j]) % k);
    }
  }
  // Graph's constructor rejects parallel edges; a simple base cannot
  // produce one.
  return Graph(g.num_vertices() * k, std::move(edges));
}

std::vector<Spectrum> power_spectra(const Graph& g, const CyclicSignature& s) {
  std::vector<Spectrum> out;
  out.reserve(static_cast<std::size_t>(s.k()));
  for (int i = 0; i < s.k(); ++i) out.push_back(hermitian_eigenvalues(signed_adjacency(g, s, i)));
  return out;
}

LiftSpectrumReport lift_spectrum_check(const Graph& g, const CyclicSignature& s) {
  LiftSpectrumReport r;
  r.lift = hermitian_eigenvalues(adjacency_matrix(lift_graph(g, s)));
  const auto parts = power_spectra(g, s);
  r.decomposed = merge(parts);
  r.max_discrepancy = max_discrepancy(r.lift, r.decomposed);
  r.tolerance = 1e-8 * (1.0 + std::max(r.lift.radius(), r.decomposed.radius()));
  r.match = r.lift.size() == r.decomposed.size() && r.max_discrepancy <= r.tolerance;
  return r;
}

Spectrum new_eigenvalues(const Graph& g, const CyclicSignature& s) {
  std::vector<Spectrum> parts;
  for (int i = 1; i < s.k(); ++i) parts.push_back(hermitian_eigenvalues(signed_adjacency(g, s, i)));
  return merge(parts);
}

bool bipartite_symmetry_check(const Graph& g, const CyclicSignature& s, int i) {
  if (!bipartition(g)) throw PreconditionError("bipartite symmetry check requires a bipartite graph");
  const Spectrum sp = hermitian_eigenvalues(signed_adjacency(g, s, i));
  const double tol = 1e-8 * (1.0 + sp.radius());
  const std::size_t n = sp.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(sp.values[j] + sp.values[n - 1 - j]) > tol) return false;
  }
  return true;
}

SwitchingReport switching_invariance(const Graph& g, const CyclicSignature& s, const SwitchingFunction& th,
                                     int i) {
  const CyclicSignature switched = switch_signature(g, s, th);
  const HermitianMatrix a = signed_adjacency(g, s, i);
  const HermitianMatrix b = signed_adjacency(g, switched, i);

  // D A D^* with D = diag(theta(u)^i).
  const std::size_t n = a.size();
  HermitianMatrix conj(n);
  for (std::size_t r = 0; r < n; ++r) {
    const cplx dr = root_of_unity(s.k(), static_cast<long long>(i) * th.theta[r]);
    for (std::size_t c = 0; c < n; ++c) {
      const cplx dc = root_of_unity(s.k(), static_cast<long long>(i) * th.theta[c]);
      conj(r, c) = dr * a(r, c) * std::conj(dc);
    }
  }

  SwitchingReport rep;
  rep.conjugation_defect = max_entry_difference(conj, b);
  const Spectrum sa = hermitian_eigenvalues(a);
  const Spectrum sb = hermitian_eigenvalues(b);
  rep.spectral_discrepancy = max_discrepancy(sa, sb);
  rep.ok = rep.conjugation_defect <= 1e-12 && rep.spectral_discrepancy <= 1e-8;
  return rep;
}

}  // namespace cyclift
