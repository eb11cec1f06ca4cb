#include "cyclift/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include "cyclift/errors.hpp"
#include "cyclift/hermitian.hpp"

namespace cyclift {

Graph::Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n), adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw PreconditionError("negative vertex count");
  std::set<std::pair<Vertex, Vertex>> seen;
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw PreconditionError("edge {" + std::to_string(a) + "," + std::to_string(b) + "} out of range");
    }
    if (a == b) throw PreconditionError("self-loop at vertex " + std::to_string(a));
    const Vertex u = std::min(a, b), v = std::max(a, b);
    if (!seen.insert({u, v}).second) {
      throw PreconditionError("parallel edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    const std::size_t j = edges_.size();
    edges_.push_back({u, v});
    adj_[u].push_back({v, j});
    adj_[v].push_back({u, j});
  }
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

std::optional<std::size_t> Graph::find_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
  for (const Incidence& inc : adj_[a]) {
    if (inc.neighbor == b) return inc.edge;
  }
  return std::nullopt;
}

std::optional<int> Graph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  const int d = degree(0);
  for (Vertex u = 1; u < n_; ++u) {
    if (degree(u) != d) return std::nullopt;
  }
  return d;
}

std::vector<int> Graph::components(int* count) const {
  std::vector<int> comp(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for (Vertex s = 0; s < n_; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (const Incidence& inc : adj_[u]) {
        if (comp[inc.neighbor] < 0) {
          comp[inc.neighbor] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

int Graph::num_components() const {
  int c = 0;
  components(&c);
  return c;
}

bool Graph::is_connected() const { return n_ > 0 && num_components() == 1; }

bool Graph::is_tree() const {
  return is_connected() && num_edges() + 1 == static_cast<std::size_t>(n_);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  int max_id = -1;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    Vertex ids[2];
    std::size_t got = 0;
    while (!line.empty()) {
      const auto end = line.find_first_of(" \t");
      const std::string_view tok = line.substr(0, end);
      if (got == 2) parse_fail(line_no, "expected exactly two vertex ids");
      int value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0) {
        parse_fail(line_no, "malformed vertex id '" + std::string(tok) + "'");
      }
      ids[got++] = value;
      line = end == std::string_view::npos ? std::string_view{} : trim(line.substr(end));
    }
    if (got != 2) parse_fail(line_no, "expected exactly two vertex ids");
    if (ids[0] == ids[1]) parse_fail(line_no, "self-loop at vertex " + std::to_string(ids[0]));
    const auto key = std::minmax(ids[0], ids[1]);
    if (!seen.insert({key.first, key.second}).second) {
      parse_fail(line_no, "duplicate edge {" + std::to_string(key.first) + "," + std::to_string(key.second) + "}");
    }
    edges.emplace_back(ids[0], ids[1]);
    max_id = std::max({max_id, ids[0], ids[1]});
  }
  return Graph(max_id + 1, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_edge_list(const Graph& g, const std::vector<std::string>& header) {
  std::string out;
  for (const std::string& h : header) out += "# " + h + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph complete_bipartite(int d) {
  if (d < 1) throw PreconditionError("complete_bipartite requires d >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) edges.emplace_back(a, d + b);
  }
  return Graph(2 * d, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle_graph requires n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int a = 0; a < n; ++a) edges.emplace_back(a, (a + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  if (n < 1) throw PreconditionError("path_graph requires n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 1) throw PreconditionError("complete_graph requires n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return Graph(n, std::move(edges));
}

Graph petersen_graph() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int a = 0; a < 5; ++a) edges.emplace_back(a, (a + 1) % 5);        // outer
  for (int a = 0; a < 5; ++a) edges.emplace_back(a, a + 5);              // spokes
  for (int a = 0; a < 5; ++a) edges.emplace_back(5 + a, 5 + (a + 2) % 5);  // pentagram
  return Graph(10, std::move(edges));
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (const Incidence& inc : g.incident(u)) {
        if (side[inc.neighbor] < 0) {
          side[inc.neighbor] = 1 - side[u];
          q.push(inc.neighbor);
        } else if (side[inc.neighbor] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition out;
  for (Vertex u = 0; u < n; ++u) (side[u] == 0 ? out.left : out.right).push_back(u);
  out.side = std::move(side);
  return out;
}

namespace {

struct SpanningForest {
  std::vector<Vertex> parent;            // -1 at roots
  std::vector<std::size_t> parent_edge;  // edge to parent
  std::vector<int> depth;
  std::vector<bool> tree_edge;
};

SpanningForest bfs_forest(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  SpanningForest f{std::vector<Vertex>(n, -1), std::vector<std::size_t>(n, 0), std::vector<int>(n, -1),
                   std::vector<bool>(g.num_edges(), false)};
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (f.depth[s] >= 0) continue;
    f.depth[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (const Incidence& inc : g.incident(u)) {
        if (f.depth[inc.neighbor] >= 0) continue;
        f.depth[inc.neighbor] = f.depth[u] + 1;
        f.parent[inc.neighbor] = u;
        f.parent_edge[inc.neighbor] = inc.edge;
        f.tree_edge[inc.edge] = true;
        q.push(inc.neighbor);
      }
    }
  }
  return f;
}

// Oriented edge walking from `from` along edge j.
OrientedEdge orient(const Graph& g, std::size_t j, Vertex from) {
  return {j, g.edge(j).u == from};
}

}  // namespace

std::vector<std::vector<OrientedEdge>> fundamental_cycles(const Graph& g) {
  const SpanningForest f = bfs_forest(g);
  std::vector<std::vector<OrientedEdge>> cycles;
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    if (f.tree_edge[j]) continue;
    const Edge e = g.edge(j);
    // u -> v across the chord, then v back to u through the tree.
    std::vector<OrientedEdge> up;    // v up to the common ancestor
    std::vector<OrientedEdge> down;  // common ancestor down to u, reversed
    Vertex a = e.v, b = e.u;
    while (a != b) {
      if (f.depth[a] >= f.depth[b]) {
        up.push_back(orient(g, f.parent_edge[a], a));
        a = f.parent[a];
      } else {
        down.push_back(orient(g, f.parent_edge[b], f.parent[b]));
        b = f.parent[b];
      }
    }
    std::vector<OrientedEdge> cycle{OrientedEdge{j, true}};
    cycle.insert(cycle.end(), up.begin(), up.end());
    cycle.insert(cycle.end(), down.rbegin(), down.rend());
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

bool is_closed_walk(const Graph& g, const std::vector<OrientedEdge>& walk) {
  if (walk.empty()) return false;
  for (const OrientedEdge& e : walk) {
    if (e.edge >= g.num_edges()) return false;
  }
  for (std::size_t t = 0; t + 1 < walk.size(); ++t) {
    if (g.head(walk[t]) != g.tail(walk[t + 1])) return false;
  }
  return g.head(walk.back()) == g.tail(walk.front());
}

double cover_ball_radius(const Graph& g, Vertex root, int radius) {
  if (radius < 1 || g.degree(root) == 0) return 0.0;
  const std::size_t m2 = 2 * g.num_edges();
  // Oriented edge id: 2j for u->v, 2j+1 for v->u.
  auto head_of = [&](std::size_t id) { return (id & 1) ? g.edge(id / 2).u : g.edge(id / 2).v; };
  auto id_from = [&](std::size_t j, Vertex from) { return 2 * j + (g.edge(j).u == from ? 0 : 1); };
  std::vector<std::vector<std::size_t>> children(m2);
  for (std::size_t id = 0; id < m2; ++id) {
    const Vertex h = head_of(id);
    for (const Incidence& inc : g.incident(h)) {
      if (inc.edge != id / 2) children[id].push_back(id_from(inc.edge, h));
    }
  }
  std::vector<std::size_t> root_out;
  for (const Incidence& inc : g.incident(root)) root_out.push_back(id_from(inc.edge, root));

  // live[t][id]: oriented edge id enters a ball node at depth t (1..radius).
  std::vector<std::vector<char>> live(static_cast<std::size_t>(radius) + 1, std::vector<char>(m2, 0));
  for (std::size_t id : root_out) live[1][id] = 1;
  for (int t = 1; t < radius; ++t) {
    for (std::size_t id = 0; id < m2; ++id) {
      if (!live[t][id]) continue;
      for (std::size_t c : children[id]) live[t + 1][c] = 1;
    }
  }

  // lambda I - A(ball) is positive definite iff every pivot of the
  // leaf-first elimination is positive.
  std::vector<double> cur(m2), nxt(m2);
  auto positive_definite = [&](double lambda) {
    std::fill(cur.begin(), cur.end(), lambda);  // leaves at depth `radius`
    for (int t = radius - 1; t >= 1; --t) {
      for (std::size_t id = 0; id < m2; ++id) {
        if (!live[t][id]) continue;
        double piv = lambda;
        for (std::size_t c : children[id]) piv -= 1.0 / cur[c];
        if (!(piv > 0.0)) return false;
        nxt[id] = piv;
      }
      std::swap(cur, nxt);
    }
    double piv = lambda;
    for (std::size_t id : root_out) piv -= 1.0 / cur[id];
    return piv > 0.0;
  };

  double lo = 0.0, hi = static_cast<double>(g.max_degree());
  while (hi - lo > 1e-13 * hi) {
    const double mid = 0.5 * (lo + hi);
    (positive_definite(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

CoverRadius universal_cover_spectral_radius(const Graph& g) {
  if (!g.is_connected()) throw PreconditionError("universal cover radius requires a connected graph");
  if (auto d = g.regular_degree(); d && *d >= 2) {
    return {2.0 * std::sqrt(static_cast<double>(*d - 1)), RadiusKind::Regular, 0, true};
  }
  if (g.is_tree()) {
    HermitianMatrix a(static_cast<std::size_t>(g.num_vertices()));
    for (const Edge& e : g.edges()) a.set_pair(e.u, e.v, 1.0);
    return {hermitian_eigenvalues(a).max(), RadiusKind::Tree, 0, true};
  }
  Vertex root = 0;
  for (Vertex u = 1; u < g.num_vertices(); ++u) {
    if (g.degree(u) > g.degree(root)) root = u;
  }
  constexpr int kMaxRadius = 1 << 16;
  int radius = 8;
  double prev = cover_ball_radius(g, root, radius);
  while (radius < kMaxRadius) {
    radius *= 2;
    const double next = cover_ball_radius(g, root, radius);
    const bool done = std::abs(next - prev) < 1e-6;
    prev = std::max(prev, next);
    if (done) return {prev, RadiusKind::Estimate, radius, true};
  }
  return {prev, RadiusKind::Estimate, radius, false};
}

}  // namespace cyclift
