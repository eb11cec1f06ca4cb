#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclift/graph.hpp"
#include "cyclift/hermitian.hpp"
#include "cyclift/search.hpp"
#include "cyclift/signature.hpp"

namespace cyclift {

// One level of a lift tower. `graph` is the level's graph; for level >= 2
// it is the lift of `base` (the previous level's graph) by `signature`.
// Level 1 is the seed: no signature, no new eigenvalues, margin = rho.
struct RamanujanCertificate {
  int level = 1;
  Graph graph;
  std::optional<Graph> base;
  std::optional<CyclicSignature> signature;
  double rho = 0.0;
  Spectrum new_eigs;
  double margin = 0.0;  // rho - max |new eigenvalue|
};

struct Tower {
  std::vector<RamanujanCertificate> levels;
  bool complete = false;
  std::string diagnostic;  // why construction stopped early
};

enum class TowerStrategy { Exhaustive, Random, Greedy };

struct TowerOptions {
  int d = 3;
  int levels = 1;
  TowerStrategy strategy = TowerStrategy::Random;
  int k = 3;
  // Required for k != 3: only k = 3 carries the two-sided guarantee.
  bool allow_any_k = false;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultSearchBudget;      // exhaustive / greedy
  std::uint64_t random_iters = 200000;              // random, per level
};

// Seed K_{d,d}, then repeatedly find a signature whose new eigenvalues lie
// in [-2 sqrt(d-1), 2 sqrt(d-1)], lift and certify. Stops with a partial
// tower and a diagnostic when a strategy exhausts its budget. Throws
// PreconditionError for d < 2, levels < 1, or k != 3 without override.
Tower build_tower(const TowerOptions& opt);

// Level-specific random seed derived from the tower seed.
std::uint64_t level_seed(std::uint64_t seed, int level);

// Certificate for lifting `base` by `s` at the given level.
RamanujanCertificate certify_lift(const Graph& base, const CyclicSignature& s, int level, double rho);
RamanujanCertificate certify_seed(const Graph& seed, double rho);

struct CertificateCheck {
  bool ok = false;
  std::vector<std::string> problems;
};

// Recomputes lift, regularity, bipartiteness, rho, new eigenvalues and
// margin from scratch; everything must match within 1e-8.
CertificateCheck check_certificate(const RamanujanCertificate& c);
inline bool verify_certificate(const RamanujanCertificate& c) { return check_certificate(c).ok; }

// Every level verifies and consecutive levels chain (base of t+1 is the
// graph of t).
CertificateCheck check_tower(const std::vector<RamanujanCertificate>& levels);

}  // namespace cyclift
