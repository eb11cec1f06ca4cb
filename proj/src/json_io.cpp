#include "cyclift/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "cyclift/errors.hpp"

namespace cyclift::io {

namespace {

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) return "0.0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s = buf;
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

void write(const Json& j, int indent, int depth, std::string& out) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += pretty ? ": " : ":";
        write(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        write(v, indent, depth + 1, out);
      }
      newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

template <class T>
T field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(where + ": field '" + key + "' has the wrong type");
  }
}

int int_field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  if (!j.at(key).is_number_integer()) throw ParseError(where + ": field '" + key + "' must be an integer");
  return j.at(key).get<int>();
}

}  // namespace

std::string dump(const Json& j, int indent) {
  std::string out;
  write(j, indent, 0, out);
  return out;
}

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

Json signature_to_json(const Graph& g, const CyclicSignature& s) {
  Json edges = Json::array();
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    edges.push_back(Json{{"u", g.edge(j).u}, {"v", g.edge(j).v}, {"l", s[j]}});
  }
  return Json{{"k", s.k()}, {"edges", std::move(edges)}};
}

namespace {

struct RawEntry {
  int u, v, l;
};

std::pair<int, std::vector<RawEntry>> raw_signature(const Json& j) {
  const int k = int_field(j, "k", "signature");
  if (!j.contains("edges") || !j.at("edges").is_array()) throw ParseError("signature: 'edges' must be an array");
  std::vector<RawEntry> out;
  std::size_t idx = 0;
  for (const auto& e : j.at("edges")) {
    const std::string where = "signature edges[" + std::to_string(idx++) + "]";
    out.push_back({int_field(e, "u", where), int_field(e, "v", where), int_field(e, "l", where)});
  }
  if (k < 2) throw PreconditionError("signature: k must be >= 2");
  for (std::size_t t = 0; t < out.size(); ++t) {
    if (out[t].l < 0 || out[t].l >= k) {
      throw PreconditionError("signature edges[" + std::to_string(t) + "]: exponent " + std::to_string(out[t].l) +
                              " outside [0," + std::to_string(k) + ")");
    }
  }
  return {k, std::move(out)};
}

}  // namespace

CyclicSignature signature_from_json(const Json& j, const Graph& g) {
  const auto [k, entries] = raw_signature(j);
  std::vector<int> exps(g.num_edges(), -1);
  for (std::size_t t = 0; t < entries.size(); ++t) {
    const RawEntry& e = entries[t];
    const auto idx = g.find_edge(e.u, e.v);
    const std::string where = "signature edges[" + std::to_string(t) + "]";
    if (!idx) {
      throw PreconditionError(where + ": {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge");
    }
    if (exps[*idx] >= 0) throw PreconditionError(where + ": edge listed twice");
    exps[*idx] = e.u < e.v ? e.l : (k - e.l) % k;
  }
  for (std::size_t t = 0; t < exps.size(); ++t) {
    if (exps[t] < 0) {
      throw PreconditionError("signature: edge {" + std::to_string(g.edge(t).u) + "," +
                              std::to_string(g.edge(t).v) + "} has no exponent");
    }
  }
  return CyclicSignature(k, std::move(exps));
}

std::pair<Graph, CyclicSignature> signature_with_graph_from_json(const Json& j, int n) {
  const auto [k, entries] = raw_signature(j);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const RawEntry& e : entries) edges.emplace_back(e.u, e.v);
  Graph g(n, std::move(edges));
  return {g, signature_from_json(j, g)};
}

Json spectrum_to_json(const Spectrum& s) {
  return Json{{"spectrum", s.values}, {"matrix_size", s.size()}};
}

Json polynomial_to_json(const Polynomial& p) {
  Json c = Json::array();
  for (double x : p.coeffs()) c.push_back(x);
  return Json{{"coeffs", std::move(c)}};
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
  return Json{{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  const int n = int_field(j, "n", "graph");
  if (!j.contains("edges") || !j.at("edges").is_array()) throw ParseError("graph: 'edges' must be an array");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ParseError("graph: each edge must be a pair of integers");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(n, std::move(edges));
}

Json certificate_to_json(const RamanujanCertificate& c) {
  Json j;
  j["level"] = c.level;
  j["rho"] = c.rho;
  j["margin"] = c.margin;
  j["new_eigenvalues"] = c.new_eigs.values;
  j["signature"] = c.signature && c.base ? signature_to_json(*c.base, *c.signature) : Json(nullptr);
  j["graph"] = graph_to_json(c.graph);
  return j;
}

RamanujanCertificate certificate_from_json(const Json& j) {
  RamanujanCertificate c;
  c.level = int_field(j, "level", "certificate");
  c.rho = field<double>(j, "rho", "certificate");
  c.margin = field<double>(j, "margin", "certificate");
  c.new_eigs.values = field<std::vector<double>>(j, "new_eigenvalues", "certificate");
  if (!j.contains("graph")) throw ParseError("certificate: missing field 'graph'");
  c.graph = graph_from_json(j.at("graph"));
  if (j.contains("signature") && !j.at("signature").is_null()) {
    const int k = int_field(j.at("signature"), "k", "signature");
    if (k < 2 || c.graph.num_vertices() % k != 0) {
      throw PreconditionError("certificate: vertex count is not a multiple of k");
    }
    auto [base, s] = signature_with_graph_from_json(j.at("signature"), c.graph.num_vertices() / k);
    c.base = std::move(base);
    c.signature = std::move(s);
  }
  return c;
}

Json outcome_to_json(const Graph& g, const SearchOutcome& o) {
  Json j;
  j["strategy"] = o.strategy;
  j["seed"] = o.seed;
  j["found"] = o.signature.has_value();
  j["tested"] = o.tested;
  j["best_lambda_max"] = o.best_lambda_max;
  j["signature"] = o.signature ? signature_to_json(g, *o.signature) : Json(nullptr);
  if (o.census) j["census"] = *o.census;
  if (!o.root_chain.empty()) j["root_chain"] = o.root_chain;
  return j;
}

}  // namespace cyclift::io
