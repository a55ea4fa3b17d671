#pragma once

#include <istream>
#include <ostream>
#include <string_view>

#include "hankel/field.hpp"
#include "hankel/matrix.hpp"
#include "hankel/rational.hpp"

namespace hankel {

/// Dense format: first line n, then n lines of n whitespace-separated scalars
/// ("a" or "a/b"). Blank lines are skipped. Throws ParseError.
Matrix<Rational> parse_dense_matrix(std::istream& in);
Matrix<Rational> parse_dense_matrix(std::string_view text);

template <Field F>
void write_dense_matrix(std::ostream& os, const Matrix<F>& m) {
  os << m.order() << '\n';
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) os << (j ? " " : "") << m(i, j).str();
    os << '\n';
  }
}

}  // namespace hankel
