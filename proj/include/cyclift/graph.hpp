#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclift {

using Vertex = int;

// Undirected edge stored in canonical orientation (u < v).
struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Edge index plus direction. forward == true walks u -> v of the canonical
// orientation; false walks v -> u.
struct OrientedEdge {
  std::size_t edge;
  bool forward;
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

struct Incidence {
  Vertex neighbor;
  std::size_t edge;
};

// Finite simple undirected graph. Edge indices follow insertion order and
// are stable; they define the edge order used by every enumeration.
// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Throws PreconditionError on self-loops, parallel edges, or vertex ids
  // outside [0, n).
  Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t j) const { return edges_[j]; }
  const std::vector<Incidence>& incident(Vertex u) const { return adj_[u]; }
  int degree(Vertex u) const { return static_cast<int>(adj_[u].size()); }
  int max_degree() const;

  // Index of edge {a,b}, if present.
  std::optional<std::size_t> find_edge(Vertex a, Vertex b) const;

  Vertex tail(OrientedEdge e) const { return e.forward ? edges_[e.edge].u : edges_[e.edge].v; }
  Vertex head(OrientedEdge e) const { return e.forward ? edges_[e.edge].v : edges_[e.edge].u; }

  // Degree d if every vertex has degree d.
  std::optional<int> regular_degree() const;

  // Component id per vertex, numbered in order of smallest member.
  std::vector<int> components(int* count = nullptr) const;
  int num_components() const;
  bool is_connected() const;
  bool is_tree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

struct Bipartition {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  std::vector<int> side;  // 0 or 1 per vertex
};

// Edge-list text: one "u v" pair per line, '#' starts a comment, blank lines
// ignored. n = 1 + max vertex id. Errors name the offending line.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

// Inverse of parse_graph; `header` lines are emitted as '#' comments first.
std::string format_edge_list(const Graph& g, const std::vector<std::string>& header = {});

// K_{d,d}: left part 0..d-1, right part d..2d-1, edges in row-major order.
Graph complete_bipartite(int d);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph petersen_graph();

// BFS 2-colouring per component; nullopt iff an odd cycle exists.
std::optional<Bipartition> bipartition(const Graph& g);

// One cycle per non-tree edge of a BFS spanning forest. Each cycle is a
// closed walk of oriented edges starting with the non-tree edge.
std::vector<std::vector<OrientedEdge>> fundamental_cycles(const Graph& g);

// True iff the sequence is non-empty, consecutive edges chain head to tail
// and the walk returns to its start.
bool is_closed_walk(const Graph& g, const std::vector<OrientedEdge>& walk);

enum class RadiusKind { Regular, Tree, Estimate };

struct CoverRadius {
  double value = 0.0;
  RadiusKind kind = RadiusKind::Regular;
  // Estimate only: final ball radius and whether successive estimates met
  // the convergence threshold.
  int ball_radius = 0;
  bool converged = true;
};

// Spectral radius of the universal covering tree. Exact for regular graphs
// (2 sqrt(d-1)) and trees; otherwise the largest eigenvalue of growing
// balls in the cover, a lower bound that increases with the radius.
// Throws PreconditionError when g is disconnected or has no vertices.
CoverRadius universal_cover_spectral_radius(const Graph& g);

// Largest adjacency eigenvalue of the radius-R ball of the universal cover
// rooted at `root`. Evaluated by leaf-to-root elimination on the tree,
// where subtrees are identified by (incoming oriented edge, depth left).
double cover_ball_radius(const Graph& g, Vertex root, int radius);

}  // namespace cyclift
