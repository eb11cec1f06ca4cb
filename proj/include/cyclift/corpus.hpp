#pragma once

#include <random>
#include <string>
#include <vector>

#include "cyclift/graph.hpp"

namespace cyclift {

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Default verification corpus: K2, P3, P4, C3..C6, K4, K2,3, K3,3, Petersen.
// The same graphs ship as edge lists under data/corpus/.
const std::vector<NamedGraph>& default_corpus();

// G(n, p) with n in [lo, hi]; may be disconnected.
Graph random_graph(std::mt19937_64& rng, int lo = 2, int hi = 8, double p = 0.5);

// Random bipartite graph with parts of size a, b in [1, hi], each cross
// edge kept with probability p, at least one edge.
Graph random_bipartite_graph(std::mt19937_64& rng, int hi = 5, double p = 0.6);

}  // namespace cyclift
