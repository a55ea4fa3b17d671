#include "hankel/io.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

bool blank(const std::string& line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Matrix<Rational> parse_dense_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!blank(line)) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError("empty dense matrix input");
  std::istringstream header(line);
  long long n = 0;
  std::string extra;
  if (!(header >> n) || (header >> extra)) throw ParseError("expected the matrix order on its own line", line_no);
  if (n <= 0) throw ParseError("matrix order must be positive", line_no);

  const auto order = static_cast<std::size_t>(n);
  Matrix<Rational> m(order, Rational(0));
  for (std::size_t i = 0; i < order; ++i) {
    if (!next_line()) {
      throw ParseError("expected " + std::to_string(order) + " rows, found " + std::to_string(i), line_no);
    }
    std::istringstream row(line);
    std::vector<std::string> tokens;
    for (std::string tok; row >> tok;) tokens.push_back(tok);
    if (tokens.size() != order) {
      throw ParseError("row has " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(order),
                       line_no);
    }
    for (std::size_t j = 0; j < order; ++j) {
      try {
        m(i, j) = Rational::parse(tokens[j]);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
    }
  }
  if (next_line()) throw ParseError("trailing content after the last row", line_no);
  return m;
}

Matrix<Rational> parse_dense_matrix(std::string_view text) {
  std::istringstream is{std::string(text)};
  return parse_dense_matrix(is);
}

}  // namespace hankel
