#include "cyclift/corpus.hpp"

namespace cyclift {

const std::vector<NamedGraph>& default_corpus() {
  static const std::vector<NamedGraph> corpus = {
      {"K2", path_graph(2)},
      {"P3", path_graph(3)},
      {"P4", path_graph(4)},
      {"C3", cycle_graph(3)},
      {"C4", cycle_graph(4)},
      {"C5", cycle_graph(5)},
      {"C6", cycle_graph(6)},
      {"K4", complete_graph(4)},
      {"K2_3", Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})},
      {"K3_3", complete_bipartite(3)},
      {"Petersen", petersen_graph()},
  };
  return corpus;
}

Graph random_graph(std::mt19937_64& rng, int lo, int hi, double p) {
  const int n = std::uniform_int_distribution<int>(lo, hi)(rng);
  std::bernoulli_distribution keep(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (keep(rng)) edges.emplace_back(a, b);
    }
  }
  return Graph(n, std::move(edges));
}

Graph random_bipartite_graph(std::mt19937_64& rng, int hi, double p) {
  std::uniform_int_distribution<int> side(1, hi);
  const int a = side(rng), b = side(rng);
  std::bernoulli_distribution keep(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int x = 0; x < a; ++x) {
    for (int y = 0; y < b; ++y) {
      if (keep(rng)) edges.emplace_back(x, a + y);
    }
  }
  if (edges.empty()) edges.emplace_back(0, a);
  return Graph(a + b, std::move(edges));
}

}  // namespace cyclift
