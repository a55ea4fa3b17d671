#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hankel/errors.hpp"
#include "hankel/field.hpp"

namespace hankel {

/**
 * Dense univariate polynomial over a field, coefficients stored from the
 * constant term upward.
 *
 * The coefficient list is always trimmed so the leading coefficient is
 * nonzero; the zero polynomial has an empty list and no degree. Because GF(p)
 * elements carry their modulus, every polynomial also keeps a zero of its
 * coefficient field, so the zero polynomial still knows where it lives.
 */
template <Field F>
class Polynomial {
 public:
  Polynomial()
    requires std::default_initializable<F>
      : zero_{} {}

  /// Zero polynomial over the field of `like`.
  explicit Polynomial(const F& like) : zero_(like.make(0)) {}

  Polynomial(std::vector<F> coefficients, const F& like)
      : coeffs_(std::move(coefficients)), zero_(like.make(0)) {
    trim();
  }

  /// Builds from a nonempty coefficient list (constant term first).
  static Polynomial from_coefficients(std::vector<F> coefficients) {
    if (coefficients.empty()) {
      throw PreconditionError("from_coefficients needs at least one coefficient");
    }
    const F like = coefficients.front();
    return Polynomial(std::move(coefficients), like);
  }

  static Polynomial constant(const F& c) { return Polynomial(std::vector<F>{c}, c); }

  /// c * x^k
  static Polynomial monomial(const F& c, std::size_t k) {
    std::vector<F> coeffs(k + 1, c.make(0));
    coeffs[k] = c;
    return Polynomial(std::move(coeffs), c);
  }

  /// The indeterminate x over the field of `like`.
  static Polynomial variable(const F& like) { return monomial(like.make(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree of a nonzero polynomial. The zero polynomial has no degree;
  /// asking for it throws std::domain_error.
  std::size_t degree() const {
    if (is_zero()) throw std::domain_error("degree of the zero polynomial");
    return coeffs_.size() - 1;
  }

  const std::vector<F>& coefficients() const { return coeffs_; }

  F coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : zero_; }

  F leading_coefficient() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  F zero_element() const { return zero_; }
  F one_element() const { return zero_.make(1); }

  bool is_monic() const { return !is_zero() && coeffs_.back() == one_element(); }

  Polynomial monic() const {
    const F inv = leading_coefficient().inverse();
    return *this * inv;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial(zero_);
    std::vector<F> out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
      out.push_back(coeffs_[k] * zero_.make(static_cast<long>(k)));
    }
    return Polynomial(std::move(out), zero_);
  }

  /// Horner evaluation at a scalar.
  F evaluate(const F& x) const {
    F acc = zero_;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Human-readable form, e.g. "x^2 - 3*x + 2".
  std::string str(std::string_view var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const F& c = coeffs_[k];
      if (c.is_zero()) continue;
      std::string s = c.str();
      bool negative = !s.empty() && s.front() == '-';
      if (negative) s.erase(0, 1);
      if (first) {
        if (negative) os << '-';
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      const bool unit = s == "1";
      if (k == 0) {
        os << s;
      } else {
        if (!unit) os << s << '*';
        os << var;
        if (k > 1) os << '^' << k;
      }
    }
    return os.str();
  }

  Polynomial operator-() const {
    std::vector<F> out;
    out.reserve(coeffs_.size());
    for (const F& c : coeffs_) out.push_back(-c);
    return Polynomial(std::move(out), zero_);
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), zero_);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] + rhs.coeffs_[k];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), zero_);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] - rhs.coeffs_[k];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.zero_);
    std::vector<F> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(std::move(out), a.zero_);
  }

  friend Polynomial operator*(Polynomial a, const F& c) {
    for (F& x : a.coeffs_) x = x * c;
    a.trim();
    return a;
  }
  friend Polynomial operator*(const F& c, Polynomial a) { return std::move(a) * c; }

  /// Exact division by a nonzero scalar.
  friend Polynomial operator/(Polynomial a, const F& c) { return std::move(a) * c.inverse(); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
  F zero_;
};

template <Field F>
struct DivRem {
  Polynomial<F> quotient;
  Polynomial<F> remainder;
};

/// Euclidean division a = q*b + r with deg r < deg b (or r = 0).
/// Throws std::domain_error when b is the zero polynomial.
template <Field F>
DivRem<F> divrem(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const F zero = b.zero_element();
  const std::size_t db = b.degree();
  const F lead_inv = b.leading_coefficient().inverse();
  if (a.is_zero() || a.degree() < db) return {Polynomial<F>(zero), a};

  std::vector<F> rem = a.coefficients();
  std::vector<F> quot(rem.size() - db, zero);
  const auto& bc = b.coefficients();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const F factor = rem[k] * lead_inv;
    quot[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = rem[k - db + j] - factor * bc[j];
  }
  rem.resize(db, zero);
  return {Polynomial<F>(std::move(quot), zero), Polynomial<F>(std::move(rem), zero)};
}

/// Monic greatest common divisor. Throws std::domain_error when both are zero.
template <Field F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Polynomial<F> r = divrem(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/**
 * Largest squarefree divisor of a monic polynomial, f / gcd(f, f').
 *
 * In characteristic p the gcd(f, f') route is only sound for separable f;
 * this is guaranteed when deg f < p, which is required here.
 */
template <Field F>
Polynomial<F> squarefree_part(const Polynomial<F>& f) {
  if (f.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  if (!f.is_monic()) throw PreconditionError("squarefree part expects a monic polynomial");
  const std::uint64_t p = f.zero_element().characteristic();
  if (p != 0 && f.degree() >= p) {
    throw UnsupportedFieldError("squarefree part over GF(" + std::to_string(p) +
                                ") requires degree below the characteristic (degree " +
                                std::to_string(f.degree()) + ")");
  }
  if (f.degree() == 0) return f;
  const Polynomial<F> g = gcd(f, f.derivative());
  auto [q, r] = divrem(f, g);
  if (!r.is_zero()) throw InvariantViolation("gcd(f, f') does not divide f");
  return q;
}

/// Coefficients, constant term first, in textual scalar form.
template <Field F>
std::vector<std::string> coefficient_strings(const Polynomial<F>& p) {
  std::vector<std::string> out;
  out.reserve(p.coefficients().size());
  for (const F& c : p.coefficients()) out.push_back(c.str());
  return out;
}

}  // namespace hankel
