#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hankel/errors.hpp"
#include "hankel/field.hpp"
#include "hankel/matrix.hpp"
#include "hankel/polynomial.hpp"

namespace hankel {

/**
 * tr G^0, tr G^1, ..., tr G^max_power by a running power of G.
 *
 * Uses max_power matrix products and never touches the characteristic
 * polynomial, so it can be checked against it.
 */
template <Field F>
std::vector<F> power_traces(const Matrix<F>& g, std::size_t max_power) {
  const F like = g(0, 0);
  std::vector<F> traces;
  traces.reserve(max_power + 1);
  traces.push_back(like.make(static_cast<long>(g.order())));
  if (max_power == 0) return traces;
  Matrix<F> running = g;
  traces.push_back(trace(running));
  for (std::size_t k = 2; k <= max_power; ++k) {
    running = running * g;
    traces.push_back(trace(running));
  }
  return traces;
}

/// Determinant by Gaussian elimination over the field.
template <Field F>
F determinant(Matrix<F> a) {
  const std::size_t n = a.order();
  F det = a(0, 0).make(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return a(0, 0).make(0);
    if (pivot != k) {
      a.swap_rows(pivot, k);
      det = -det;
    }
    const F pivot_inv = a(k, k).inverse();
    det = det * a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const F factor = a(i, k) * pivot_inv;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = a(i, j) - factor * a(k, j);
    }
  }
  return det;
}

/**
 * Determinant of a matrix with polynomial entries by fraction-free Bareiss
 * elimination. Each step divides by the previous pivot, which is exact in
 * F[x]; a nonzero remainder means the input violated the ring assumptions.
 */
template <Field F>
Polynomial<F> det_poly_matrix(PolyMatrix<F> a) {
  const std::size_t n = a.order();
  const F like = a(0, 0).zero_element();
  Polynomial<F> previous = Polynomial<F>::constant(like.make(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Polynomial<F>(like);
    if (pivot != k) {
      a.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const Polynomial<F> numer = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        auto [q, r] = divrem(numer, previous);
        if (!r.is_zero()) throw InvariantViolation("inexact Bareiss division");
        a(i, j) = std::move(q);
      }
    }
    previous = a(k, k);
  }
  Polynomial<F> det = a(n - 1, n - 1);
  return negate ? -det : det;
}

/**
 * Characteristic polynomial det(xI - G) by the Faddeev-LeVerrier recurrence
 *
 *   M_1 = I,  M_k = G M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(G M_k) / k.
 *
 * The division by k needs characteristic 0 or above n.
 */
template <Field F>
Polynomial<F> char_poly(const Matrix<F>& g) {
  const std::size_t n = g.order();
  const F like = g(0, 0);
  const std::uint64_t p = like.characteristic();
  if (p != 0 && p <= n) {
    throw UnsupportedFieldError("characteristic polynomial over GF(" + std::to_string(p) +
                                ") needs order below the characteristic (order " +
                                std::to_string(n) + ")");
  }
  std::vector<F> c(n + 1, like.make(0));
  c[n] = like.make(1);
  const Matrix<F> id = identity_matrix(n, like);
  Matrix<F> m = zero_matrix(n, like);
  for (std::size_t k = 1; k <= n; ++k) {
    m = g * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m(i, i) + c[n - k + 1];
    const F tr = trace(g * m);
    c[n - k] = -tr / like.make(static_cast<long>(k));
  }
  return Polynomial<F>(std::move(c), like);
}

}  // namespace hankel
