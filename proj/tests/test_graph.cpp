#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hankel/graph.hpp"
#include "hankel/io.hpp"
#include "hankel/spectral.hpp"

using namespace hankel;

namespace {

using QMatrix = Matrix<Rational>;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("parse_edge_list examples") {
  const GraphSpec k2 = parse_edge_list("2\n1 2\n");
  CHECK(k2.vertex_count == 2);
  CHECK(k2.edges.size() == 1);
  CHECK_FALSE(k2.directed);

  const GraphSpec triangle = parse_edge_list("3\n1 2\n2 3\n1 3\n");
  CHECK(triangle.vertex_count == 3);
  CHECK(triangle.edges == std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {1, 3}, {2, 3}});

  CHECK_THROWS_AS(parse_edge_list("2\n1 3\n"), ValidationError);
}

TEST_CASE("edge lists skip comments and normalize edges") {
  const GraphSpec g = parse_edge_list("# a path\n\n3\n# edges follow\n2 1\n3 2\n1 2\n");
  CHECK(g.edges == std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 3}});
}

TEST_CASE("edge list errors carry line numbers") {
  try {
    parse_edge_list("3\n1 2\n2 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_edge_list("3\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("# only a comment\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n2 2\n"), ValidationError);
  CHECK_THROWS_AS(parse_edge_list("0\n"), ValidationError);
  CHECK_THROWS_AS(parse_edge_list("2\n0 1\n"), ValidationError);
}

TEST_CASE("parse_matrix_market examples") {
  const auto tri = parse_matrix_market(
      "%%MatrixMarket matrix coordinate pattern symmetric\n% triangle\n3 3 3\n2 1\n3 2\n3 1\n");
  REQUIRE(std::holds_alternative<GraphSpec>(tri));
  CHECK(std::get<GraphSpec>(tri) == parse_edge_list("3\n1 2\n2 3\n1 3\n"));

  const auto diag = parse_matrix_market("%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 1 1\n2 2 2\n");
  REQUIRE(std::holds_alternative<QMatrix>(diag));
  CHECK(std::get<QMatrix>(diag) == diagonal_matrix(std::vector<Rational>{1, 2}));

  CHECK_THROWS_AS(parse_matrix_market("%%MatrixMarket matrix array real general\n2 2\n1\n0\n0\n1\n"),
                  UnsupportedFormatError);
}

TEST_CASE("Matrix Market integer symmetric mirrors off-diagonal entries") {
  const auto m = parse_matrix_market("%%MatrixMarket matrix coordinate integer symmetric\n3 3 3\n1 1 4\n3 1 -7\n3 2 2\n");
  REQUIRE(std::holds_alternative<QMatrix>(m));
  CHECK(std::get<QMatrix>(m) == QMatrix::from_rows({{4, 0, -7}, {0, 0, 2}, {-7, 2, 0}}));
}

TEST_CASE("Matrix Market errors") {
  CHECK_THROWS_AS(parse_matrix_market("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 2\n2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix_market("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 1\n2 1\n3 1\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_matrix_market("%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 0.5\n"),
                  UnsupportedFormatError);
  CHECK_THROWS_AS(parse_matrix_market("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n2 1\n"),
                  UnsupportedFormatError);
  CHECK_THROWS_AS(parse_matrix_market("not a header\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix_market("%%MatrixMarket matrix coordinate integer general\n2 3 0\n"), ValidationError);
  CHECK_THROWS_AS(parse_matrix_market("%%MatrixMarket matrix coordinate integer general\n2 2 1\n3 1 1\n"),
                  ValidationError);
  CHECK_THROWS_AS(parse_matrix_market("%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 1 1\n1 1 2\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_matrix_market("%%MatrixMarket matrix coordinate pattern symmetric\n2 2 1\n1 1\n"),
                  ValidationError);
}

TEST_CASE("adjacency_matrix examples") {
  CHECK(adjacency_matrix(parse_edge_list("2\n1 2\n")) == QMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(adjacency_matrix(parse_edge_list("3\n1 2\n2 3\n1 3\n")) == QMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  for (std::size_t n = 1; n <= 6; ++n) {
    const QMatrix a = adjacency_matrix(parse_edge_list(std::to_string(n) + "\n"));
    CHECK(a == zero_matrix(n, Rational(0)));
    CHECK(spectral_size(a) == 1);
  }
  const GraphSpec directed = make_graph(3, {{1, 2}, {2, 3}}, true);
  const QMatrix d = adjacency_matrix(directed);
  CHECK(d == QMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
  CHECK_FALSE(d.is_symmetric());
}

TEST_CASE("undirected graphs give symmetric adjacency matrices with the expected spectral size") {
  for (std::size_t n = 2; n <= 6; ++n) {
    std::string text = std::to_string(n) + "\n";
    for (std::size_t u = 1; u <= n; ++u) {
      for (std::size_t v = u + 1; v <= n; ++v) text += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    const QMatrix kn = adjacency_matrix(parse_edge_list(text));
    REQUIRE(kn.is_symmetric());
    CHECK(spectral_size_symmetric(kn) == 2);
    CHECK(oracle_spectral_size(kn) == 2);
  }
}

TEST_CASE("Petersen graph file") {
  const auto content = parse_matrix_market(read_file(std::string(HANKEL_TEST_DATA) + "/petersen.mtx"));
  REQUIRE(std::holds_alternative<GraphSpec>(content));
  const GraphSpec& g = std::get<GraphSpec>(content);
  CHECK(g.vertex_count == 10);
  CHECK(g.edges.size() == 15);
  const QMatrix a = adjacency_matrix(g);
  for (std::size_t i = 0; i < 10; ++i) {
    Rational degree(0);
    for (std::size_t j = 0; j < 10; ++j) degree += a(i, j);
    CHECK(degree == Rational(3));
  }
}

TEST_CASE("dense matrix text format") {
  const QMatrix m = parse_dense_matrix("2\n1 -1/2\n\n3/6 4\n");
  CHECK(m == QMatrix::from_rows({{1, Rational(mpz_class(-1), mpz_class(2))}, {Rational(mpz_class(1), mpz_class(2)), 4}}));
  std::ostringstream os;
  write_dense_matrix(os, m);
  CHECK(os.str() == "2\n1 -1/2\n1/2 4\n");
  CHECK(parse_dense_matrix(os.str()) == m);

  CHECK_THROWS_AS(parse_dense_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_dense_matrix("2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_dense_matrix("2\n1 2 3\n4 5\n"), ParseError);
  CHECK_THROWS_AS(parse_dense_matrix("0\n"), ParseError);
  CHECK_THROWS_AS(parse_dense_matrix("1\n1\n2\n"), ParseError);
  try {
    parse_dense_matrix("2\n1 2\n3 z\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}
