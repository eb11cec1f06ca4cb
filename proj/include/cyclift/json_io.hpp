#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "cyclift/graph.hpp"
#include "cyclift/hermitian.hpp"
#include "cyclift/matching.hpp"
#include "cyclift/polynomial.hpp"
#include "cyclift/search.hpp"
#include "cyclift/signature.hpp"
#include "cyclift/tower.hpp"

namespace cyclift::io {

using Json = nlohmann::ordered_json;

// Deterministic serialisation: keys in insertion order, doubles with 17
// significant digits ("%.17g", ".0" appended to integral values),
// non-finite doubles as null. indent < 0 gives a single line.
std::string dump(const Json& j, int indent = -1);

// Parses JSON text; throws ParseError with the parser's message.
Json parse(const std::string& text, const std::string& source = "input");
Json read_file(const std::string& path);

// {"k": k, "edges": [{"u","v","l"}, ...]} in edge order, canonical
// orientation.
Json signature_to_json(const Graph& g, const CyclicSignature& s);

// Reads a signature against a graph. Entries may use either orientation;
// (v,u) with exponent l is stored as (u,v) with (k - l) mod k. Every graph
// edge must appear exactly once. Throws ParseError for structural problems
// and PreconditionError for entries that contradict the graph.
CyclicSignature signature_from_json(const Json& j, const Graph& g);

// Reads a signature whose entries themselves define the base graph (in
// listed order) on n vertices.
std::pair<Graph, CyclicSignature> signature_with_graph_from_json(const Json& j, int n);

Json spectrum_to_json(const Spectrum& s);
Json polynomial_to_json(const Polynomial& p);
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json certificate_to_json(const RamanujanCertificate& c);
RamanujanCertificate certificate_from_json(const Json& j);

Json outcome_to_json(const Graph& g, const SearchOutcome& o);

}  // namespace cyclift::io
