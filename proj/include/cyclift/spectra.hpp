#pragma once

#include <vector>

#include "cyclift/graph.hpp"
#include "cyclift/hermitian.hpp"
#include "cyclift/signature.hpp"

namespace cyclift {

// xi^e with xi = exp(2 pi i / k), evaluated by octant reduction: roots
// related by a symmetry of the square are exact reflections of each other
// and multiples of 30 and 45 degrees are correctly rounded.
cplx root_of_unity(int k, long long e);

// Hadamard power A^{s,i}: entry (u,v) = xi^{i * l(u,v)} on edges, 0 elsewhere.
// i = 0 gives the plain adjacency matrix. Throws when i is outside [0, k).
HermitianMatrix signed_adjacency(const Graph& g, const CyclicSignature& s, int i);

// Plain 0/1 adjacency matrix.
HermitianMatrix adjacency_matrix(const Graph& g);

// Real 0/1 block A_l: entry (u,v) = 1 iff the oriented edge (u,v) carries
// xi^l. A_l is the transpose of A_{k-l}.
HermitianMatrix signature_block(const Graph& g, const CyclicSignature& s, int l);

// Adjacency of the lift assembled from the blocks A_l in block-circulant
// layout: block (a,b) = A_{(b-a) mod k}. Fibre vertex (u,i) sits at index
// i*n + u here, which differs from the lift's vertex numbering.
HermitianMatrix block_circulant_lift(const Graph& g, const CyclicSignature& s);

// The k-cyclic lift. Vertex (u,i) is numbered u*k + i. Each base edge
// (u,v) with exponent l yields {u_i, v_{(i+l) mod k}} for i = 0..k-1, in
// base-edge then fibre order.
Graph lift_graph(const Graph& g, const CyclicSignature& s);

struct LiftSpectrumReport {
  bool match = false;
  double max_discrepancy = 0.0;
  double tolerance = 0.0;
  Spectrum lift;
  Spectrum decomposed;
};

// Compares sigma(lift adjacency) with the union of sigma(A^{s,i}),
// i = 0..k-1, at relative tolerance 1e-8 (1 + spectral radius).
LiftSpectrumReport lift_spectrum_check(const Graph& g, const CyclicSignature& s);

// Union of sigma(A^{s,i}) for i = 1..k-1.
Spectrum new_eigenvalues(const Graph& g, const CyclicSignature& s);

// Eigenvalues of every Hadamard power, index i = 0..k-1.
std::vector<Spectrum> power_spectra(const Graph& g, const CyclicSignature& s);

// sigma(A^{s,i}) symmetric about zero within 1e-8 (1 + radius). Throws
// PreconditionError when g is not bipartite.
bool bipartite_symmetry_check(const Graph& g, const CyclicSignature& s, int i);

struct SwitchingReport {
  bool ok = false;
  double spectral_discrepancy = 0.0;
  double conjugation_defect = 0.0;
};

// Spectra of A^{s,i} and A^{s^theta,i} agree within 1e-8 and
// A^{s^theta,i} = D A^{s,i} D^* entrywise within 1e-12, where
// D = diag(theta(u)^i).
SwitchingReport switching_invariance(const Graph& g, const CyclicSignature& s, const SwitchingFunction& th,
                                     int i);
inline bool switching_invariance_check(const Graph& g, const CyclicSignature& s, const SwitchingFunction& th,
                                       int i) {
  return switching_invariance(g, s, th, i).ok;
}

}  // namespace cyclift
