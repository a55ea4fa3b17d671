#pragma once

// Brute-force reference computations for the unit and acceptance tests. They
// share no code path with the elimination/recurrence routines they check.

#include <algorithm>
#include <numeric>
#include <vector>

#include "hankel/matrix.hpp"
#include "hankel/polynomial.hpp"

namespace hankel::oracle {

/// Sign of a permutation given as an index vector, by counting inversions.
inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) sign = -sign;
    }
  }
  return sign;
}

/// Leibniz expansion: sum over all n! permutations. Works over any commutative
/// ring whose elements support +, -, *, and a zero taken from `zero`.
template <class R>
R leibniz_det(const Matrix<R>& a, const R& zero) {
  const std::size_t n = a.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  R total = zero;
  do {
    R term = a(0, perm[0]);
    for (std::size_t i = 1; i < n; ++i) term = term * a(i, perm[i]);
    total = permutation_sign(perm) > 0 ? total + term : total - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// The explicit Vandermonde matrix: row i holds z_j^i.
template <Field F>
Matrix<F> vandermonde_matrix(const std::vector<F>& z) {
  Matrix<F> v(z.size(), z.front().make(1));
  for (std::size_t j = 0; j < z.size(); ++j) {
    F p = z.front().make(1);
    for (std::size_t i = 0; i < z.size(); ++i) {
      v(i, j) = p;
      p = p * z[j];
    }
  }
  return v;
}

/// x I - G as a polynomial matrix.
template <Field F>
PolyMatrix<F> shifted_matrix(const Matrix<F>& g) {
  const F like = g(0, 0);
  PolyMatrix<F> out(g.order(), Polynomial<F>(like));
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) {
      Polynomial<F> entry = Polynomial<F>::constant(-g(i, j));
      if (i == j) entry += Polynomial<F>::variable(like);
      out(i, j) = entry;
    }
  }
  return out;
}

/// tr((xI - G)^k) by explicit powering of the polynomial matrix.
template <Field F>
Polynomial<F> shifted_trace_by_powering(const Matrix<F>& g, std::size_t k) {
  const F like = g(0, 0);
  const PolyMatrix<F> base = shifted_matrix(g);
  PolyMatrix<F> acc(g.order(), Polynomial<F>(like));
  for (std::size_t i = 0; i < g.order(); ++i) acc(i, i) = Polynomial<F>::constant(like.make(1));
  for (std::size_t r = 0; r < k; ++r) acc = acc * base;
  return trace(acc);
}

/// det(xI - G) by Leibniz expansion over F[x]; only sensible for small orders.
template <Field F>
Polynomial<F> char_poly_by_leibniz(const Matrix<F>& g) {
  return leibniz_det(shifted_matrix(g), Polynomial<F>(g(0, 0)));
}

template <Field F>
Polynomial<F> poly_power(const Polynomial<F>& p, std::size_t k) {
  Polynomial<F> acc = Polynomial<F>::constant(p.one_element());
  for (std::size_t r = 0; r < k; ++r) acc = acc * p;
  return acc;
}

/// x - c
template <Field F>
Polynomial<F> linear(const F& c) {
  return Polynomial<F>::from_coefficients({-c, c.make(1)});
}

}  // namespace hankel::oracle
