#include "hankel/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

std::size_t parse_index(const std::string& tok, std::size_t line_no, const char* what) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError(std::string("expected a nonnegative integer ") + what + ", got '" + tok + "'", line_no);
  }
  try {
    return static_cast<std::size_t>(std::stoull(tok));
  } catch (const std::out_of_range&) {
    throw ParseError(std::string(what) + " '" + tok + "' is too large", line_no);
  }
}

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

}  // namespace

GraphSpec make_graph(std::size_t vertex_count, EdgeList edges, bool directed) {
  if (vertex_count == 0) throw ValidationError("graph needs at least one vertex");
  for (auto& [u, v] : edges) {
    if (u < 1 || u > vertex_count || v < 1 || v > vertex_count) {
      throw ValidationError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") has an endpoint outside 1.." + std::to_string(vertex_count));
    }
    if (u == v) throw ValidationError("loop at vertex " + std::to_string(u) + " (only simple graphs)");
    if (!directed && u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return GraphSpec{vertex_count, std::move(edges), directed};
}

GraphSpec parse_edge_list(std::istream& in) {
  std::optional<std::size_t> vertex_count;
  EdgeList edges;
  std::string raw;
  for (std::size_t line_no = 1; std::getline(in, raw); ++line_no) {
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = split(line);
    if (!vertex_count) {
      if (tokens.size() != 1) throw ParseError("expected the vertex count on its own line", line_no);
      vertex_count = parse_index(tokens[0], line_no, "vertex count");
      if (*vertex_count == 0) throw ValidationError("graph needs at least one vertex");
      continue;
    }
    if (tokens.size() != 2) throw ParseError("expected an edge 'u v'", line_no);
    const std::size_t u = parse_index(tokens[0], line_no, "endpoint");
    const std::size_t v = parse_index(tokens[1], line_no, "endpoint");
    if (u < 1 || u > *vertex_count || v < 1 || v > *vertex_count) {
      throw ValidationError("line " + std::to_string(line_no) + ": endpoint out of range 1.." +
                            std::to_string(*vertex_count));
    }
    edges.emplace_back(u, v);
  }
  if (!vertex_count) throw ParseError("missing vertex count");
  return make_graph(*vertex_count, std::move(edges), false);
}

GraphSpec parse_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  return parse_edge_list(is);
}

MatrixMarketContent parse_matrix_market(std::istream& in) {
  std::string raw;
  std::size_t line_no = 1;
  if (!std::getline(in, raw)) throw ParseError("empty Matrix Market input", 1);
  const auto header = split(lower(raw));
  if (header.size() != 5 || header[0] != "%%matrixmarket" || header[1] != "matrix") {
    throw ParseError("missing '%%MatrixMarket matrix ...' header", 1);
  }
  const std::string& layout = header[2];
  const std::string& field = header[3];
  const std::string& symmetry = header[4];
  const bool pattern_symmetric = field == "pattern" && symmetry == "symmetric";
  const bool integer_matrix = field == "integer" && (symmetry == "general" || symmetry == "symmetric");
  if (layout != "coordinate" || !(pattern_symmetric || integer_matrix)) {
    throw UnsupportedFormatError("unsupported Matrix Market variant '" + layout + " " + field + " " + symmetry +
                                 "' (supported: coordinate pattern symmetric, coordinate integer "
                                 "general|symmetric)");
  }

  std::optional<std::size_t> nnz;
  std::size_t order = 0;
  std::size_t seen = 0;
  EdgeList edges;
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '%') continue;
    const auto tokens = split(line);
    if (!nnz) {
      if (tokens.size() != 3) throw ParseError("expected size line 'rows cols nnz'", line_no);
      const std::size_t rows = parse_index(tokens[0], line_no, "row count");
      const std::size_t cols = parse_index(tokens[1], line_no, "column count");
      nnz = parse_index(tokens[2], line_no, "entry count");
      if (rows != cols) throw ValidationError("matrix is " + std::to_string(rows) + "x" + std::to_string(cols) +
                                              ", expected square");
      if (rows == 0) throw ValidationError("matrix order must be positive");
      order = rows;
      continue;
    }
    const std::size_t expected_tokens = pattern_symmetric ? 2 : 3;
    if (tokens.size() != expected_tokens) {
      throw ParseError("expected " + std::to_string(expected_tokens) + " fields per entry", line_no);
    }
    if (seen == *nnz) throw ParseError("more entries than the declared " + std::to_string(*nnz), line_no);
    ++seen;
    const std::size_t i = parse_index(tokens[0], line_no, "row index");
    const std::size_t j = parse_index(tokens[1], line_no, "column index");
    if (i < 1 || i > order || j < 1 || j > order) {
      throw ValidationError("line " + std::to_string(line_no) + ": index out of range 1.." + std::to_string(order));
    }
    if (pattern_symmetric) {
      edges.emplace_back(i, j);
      continue;
    }
    const Rational value = Rational::parse(tokens[2]);
    if (!value.is_integer()) throw ParseError("integer field holds '" + tokens[2] + "'", line_no);
    if (!entries.emplace(std::make_pair(i, j), value).second) {
      throw ParseError("duplicate entry (" + std::to_string(i) + ", " + std::to_string(j) + ")", line_no);
    }
  }
  if (!nnz) throw ParseError("missing size line", line_no);
  if (seen != *nnz) {
    throw ParseError("declared " + std::to_string(*nnz) + " entries but found " + std::to_string(seen), line_no);
  }

  if (pattern_symmetric) return make_graph(order, std::move(edges), false);

  Matrix<Rational> m(order, Rational(0));
  for (const auto& [ij, value] : entries) {
    const auto [i, j] = ij;
    m(i - 1, j - 1) = value;
  }
  if (symmetry == "symmetric") {
    for (const auto& [ij, value] : entries) {
      const auto [i, j] = ij;
      if (i == j) continue;
      if (entries.count({j, i}) && !(entries.at({j, i}) == value)) {
        throw ValidationError("symmetric file has conflicting entries at (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
      }
      m(j - 1, i - 1) = value;
    }
  }
  return m;
}

MatrixMarketContent parse_matrix_market(std::string_view text) {
  std::istringstream is{std::string(text)};
  return parse_matrix_market(is);
}

}  // namespace hankel
