#pragma once

#include <cstddef>
#include <istream>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hankel/field.hpp"
#include "hankel/matrix.hpp"
#include "hankel/rational.hpp"

namespace hankel {

/// Simple graph on vertices 1..vertex_count. Undirected edges are stored with
/// the smaller endpoint first; the edge list is sorted and duplicate-free.
struct GraphSpec {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool directed = false;

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

/// Validates endpoints and normalizes the edge list. Throws ValidationError.
GraphSpec make_graph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges,
                     bool directed = false);

/**
 * Edge-list format: '#' lines are comments and blank lines are skipped; the
 * first remaining line is the vertex count and each later line is "u v" with
 * 1 <= u, v <= n and u != v. Throws ParseError (with line number) on malformed
 * lines and ValidationError on out-of-range endpoints or loops.
 */
GraphSpec parse_edge_list(std::istream& in);
GraphSpec parse_edge_list(std::string_view text);

using MatrixMarketContent = std::variant<GraphSpec, Matrix<Rational>>;

/**
 * Matrix Market coordinate files. "pattern symmetric" yields an undirected
 * graph; "integer general" and "integer symmetric" yield the matrix itself.
 * Anything else raises UnsupportedFormatError.
 */
MatrixMarketContent parse_matrix_market(std::istream& in);
MatrixMarketContent parse_matrix_market(std::string_view text);

/// 0/1 adjacency matrix over the field of `like`.
template <Field F>
Matrix<F> adjacency_matrix(const GraphSpec& g, const F& like) {
  Matrix<F> a = zero_matrix(g.vertex_count, like);
  for (const auto& [u, v] : g.edges) {
    a(u - 1, v - 1) = like.make(1);
    if (!g.directed) a(v - 1, u - 1) = like.make(1);
  }
  return a;
}

inline Matrix<Rational> adjacency_matrix(const GraphSpec& g) { return adjacency_matrix(g, Rational(0)); }

}  // namespace hankel
