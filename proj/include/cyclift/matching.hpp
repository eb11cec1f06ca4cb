#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "cyclift/graph.hpp"
#include "cyclift/polynomial.hpp"

namespace cyclift {

using BigInt = boost::multiprecision::cpp_int;

// counts[i] = number of i-matchings, i = 0..floor(n/2).
struct MatchingCounts {
  std::vector<BigInt> counts;

  std::vector<std::string> to_strings() const;
};

// Exact counts. Recurses on induced subgraphs: with v the lowest remaining
// vertex, m(S) = m(S - v) + sum over neighbours u of m(S - v - u) shifted by
// one, i.e. the edge-deletion identity applied to every edge at v. Memoized
// on the vertex subset.
MatchingCounts matching_counts(const Graph& g);

// mu_G(x) = sum_i (-1)^i m_i x^{n-2i}, exact coefficients as decimal strings
// (ascending degree).
std::vector<std::string> matching_polynomial_exact(const Graph& g);

// Same polynomial in double precision (exact while counts < 2^53).
Polynomial matching_polynomial(const Graph& g);

}  // namespace cyclift
