#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hankel/errors.hpp"
#include "hankel/field.hpp"
#include "hankel/polynomial.hpp"

namespace hankel {

/**
 * Dense square matrix over a commutative ring R (a Field, or Polynomial<F>).
 *
 * Storage is row-major and indices are 0-based: entry (i, j) is the paper-style
 * [A]_{i+1}^{j+1}. The order is always at least one.
 */
template <class R>
class Matrix {
 public:
  Matrix(std::size_t order, const R& fill) : order_(order), entries_(order * order, fill) {
    if (order == 0) throw PreconditionError("matrix order must be positive");
  }

  /// Throws PreconditionError unless `rows` is a nonempty square array.
  static Matrix from_rows(const std::vector<std::vector<R>>& rows) {
    if (rows.empty() || rows.front().empty()) throw PreconditionError("matrix order must be positive");
    Matrix m(rows.size(), rows.front().front());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw PreconditionError("matrix rows must form a square");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t order() const { return order_; }

  R& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < order_; ++i) {
      for (std::size_t j = i + 1; j < order_; ++j) {
        if (!((*this)(i, j) == (*this)(j, i))) return false;
      }
    }
    return true;
  }

  Matrix transpose() const {
    Matrix out = *this;
    for (std::size_t i = 0; i < order_; ++i) {
      for (std::size_t j = 0; j < order_; ++j) out(i, j) = (*this)(j, i);
    }
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < order_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_order(a, b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] = a.entries_[k] + b.entries_[k];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_order(a, b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] = a.entries_[k] - b.entries_[k];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_order(a, b);
    const std::size_t n = a.order_;
    Matrix out = a;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        R acc = a(i, 0) * b(0, j);
        for (std::size_t k = 1; k < n; ++k) acc = acc + a(i, k) * b(k, j);
        out(i, j) = std::move(acc);
      }
    }
    return out;
  }

  /// Entrywise scaling.
  friend Matrix operator*(const R& c, Matrix a) {
    for (R& x : a.entries_) x = c * x;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.order_ == b.order_ && a.entries_ == b.entries_;
  }

 private:
  static void require_same_order(const Matrix& a, const Matrix& b) {
    if (a.order_ != b.order_) throw PreconditionError("matrix orders differ");
  }

  std::size_t order_;
  std::vector<R> entries_;
};

template <Field F>
using PolyMatrix = Matrix<Polynomial<F>>;

template <Field F>
Matrix<F> zero_matrix(std::size_t n, const F& like) {
  return Matrix<F>(n, like.make(0));
}

template <Field F>
Matrix<F> identity_matrix(std::size_t n, const F& like) {
  Matrix<F> out(n, like.make(0));
  for (std::size_t i = 0; i < n; ++i) out(i, i) = like.make(1);
  return out;
}

template <Field F>
Matrix<F> diagonal_matrix(const std::vector<F>& diagonal) {
  if (diagonal.empty()) throw PreconditionError("matrix order must be positive");
  Matrix<F> out(diagonal.size(), diagonal.front().make(0));
  for (std::size_t i = 0; i < diagonal.size(); ++i) out(i, i) = diagonal[i];
  return out;
}

template <class R>
R trace(const Matrix<R>& a) {
  R acc = a(0, 0);
  for (std::size_t i = 1; i < a.order(); ++i) acc = acc + a(i, i);
  return acc;
}

/// Applies `fn` to every entry, e.g. to move a rational matrix into GF(p).
template <class To, class From, class Fn>
Matrix<To> map_entries(const Matrix<From>& a, Fn fn) {
  Matrix<To> out(a.order(), fn(a(0, 0)));
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) out(i, j) = fn(a(i, j));
  }
  return out;
}

/// p(G) by Horner's scheme.
template <Field F>
Matrix<F> evaluate_at_matrix(const Polynomial<F>& p, const Matrix<F>& g) {
  const F like = g(0, 0);
  Matrix<F> acc = zero_matrix(g.order(), like);
  const auto& coeffs = p.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * g;
    for (std::size_t i = 0; i < g.order(); ++i) acc(i, i) = acc(i, i) + *it;
  }
  return acc;
}

}  // namespace hankel
