#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hankel/errors.hpp"
#include "hankel/field.hpp"
#include "hankel/linalg.hpp"
#include "hankel/matrix.hpp"
#include "hankel/polynomial.hpp"
#include "hankel/rational.hpp"
#include "hankel/trace_hankel.hpp"

namespace hankel {

/**
 * Number of distinct eigenvalues of G: the largest t in 1..n with
 * det M_{t,0}(G) != 0.
 *
 * The full range is scanned because intermediate determinants may vanish
 * (the companion matrix of x^3 - 1 has det M_2 = 0 but spectral size 3).
 * In characteristic p the count only sees eigenvalues whose multiplicity is
 * nonzero mod p; if none survives, UnsupportedFieldError is thrown.
 */
template <Field F>
std::size_t spectral_size(const Matrix<F>& g) {
  const std::size_t n = g.order();
  const std::vector<F> traces = power_traces(g, 2 * n - 2);
  const std::span<const F> view(traces);
  for (std::size_t t = n; t >= 1; --t) {
    if (!hankel_det_from_traces(view, HankelSpec(t, 0)).is_zero()) return t;
  }
  throw UnsupportedFieldError("every det M_t vanishes over GF(" +
                              std::to_string(g(0, 0).characteristic()) +
                              "); all eigenvalue multiplicities are divisible by the characteristic");
}

/// Spectral size of a rational symmetric matrix. Stops at the first vanishing
/// det M_{t+1,0}, which is valid because det M_t > 0 for every t up to m.
inline std::size_t spectral_size_symmetric(const Matrix<Rational>& g) {
  if (!g.is_symmetric()) throw PreconditionError("spectral_size_symmetric needs a symmetric matrix");
  const std::size_t n = g.order();
  // M_{n+1} vanishes for every order-n matrix, so traces up to 2n - 2 suffice.
  const std::vector<Rational> traces = power_traces(g, 2 * n - 2);
  const std::span<const Rational> view(traces);
  std::size_t t = 1;
  while (t < n && !hankel_det_from_traces(view, HankelSpec(t + 1, 0)).is_zero()) ++t;
  return t;
}

/// tr((xI - G)^k) = sum_j binom(k, j) (-1)^j tr(G^j) x^(k-j), a degree-k polynomial with leading coefficient n.
template <Field F>
Polynomial<F> shifted_power_trace(std::span<const F> traces, std::size_t k, std::size_t n) {
  if (traces.size() <= k) {
    throw PreconditionError("tr((xI - G)^" + std::to_string(k) + ") needs traces of powers 0.." +
                            std::to_string(k) + ", got " + std::to_string(traces.size()) + " values");
  }
  const F like = traces[0];
  // Row k of Pascal's triangle, built in the field.
  std::vector<F> binom(k + 1, like.make(0));
  binom[0] = like.make(1);
  for (std::size_t r = 1; r <= k; ++r) {
    for (std::size_t j = r; j >= 1; --j) binom[j] = binom[j] + binom[j - 1];
  }
  std::vector<F> coeffs(k + 1, like.make(0));
  for (std::size_t j = 0; j <= k; ++j) {
    // tr(G^0) is taken as n, regardless of the caller's traces[0].
    const F tr = j == 0 ? like.make(static_cast<long>(n)) : traces[j];
    F term = binom[j] * tr;
    if (j % 2 == 1) term = -term;
    coeffs[k - j] = term;
  }
  return Polynomial<F>(std::move(coeffs), like);
}

/**
 * Monic polynomial whose roots are the distinct eigenvalues of G, each
 * simple, computed as det M_{m,1}(xI - G) / det M_m(G) with m the spectral
 * size. Entry (i, j) of the numerator matrix (1-based) is tr((xI - G)^{i+j-1}).
 */
template <Field F>
Polynomial<F> spectral_polynomial(const Matrix<F>& g) {
  const std::size_t n = g.order();
  const std::size_t m = spectral_size(g);
  const std::vector<F> traces = power_traces(g, 2 * m - 1);
  const std::span<const F> view(traces);
  const F like = g(0, 0);

  PolyMatrix<F> shifted(m, Polynomial<F>(like));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) shifted(i, j) = shifted_power_trace(view, i + j + 1, n);
  }
  const F denominator = hankel_det_from_traces(view, HankelSpec(m, 0));
  if (denominator.is_zero()) throw InvariantViolation("det M_m(G) vanished at the detected spectral size");
  Polynomial<F> result = det_poly_matrix(std::move(shifted)) / denominator;
  if (result.is_zero() || result.degree() != m || !result.is_monic()) {
    throw InvariantViolation("spectral polynomial is not monic of degree " + std::to_string(m) +
                             ": " + result.str());
  }
  return result;
}

/**
 * True iff G is singular, decided as det M_{m,1}(G) == 0 with m the spectral
 * size. The answer is checked against det G == 0 and a disagreement throws
 * InvariantViolation (possible over GF(p) when the multiplicity of the zero
 * eigenvalue is divisible by p).
 */
template <Field F>
bool degeneracy_test(const Matrix<F>& g) {
  const std::size_t m = spectral_size(g);
  const bool from_hankel = hankel_det(g, HankelSpec(m, 1)).is_zero();
  const bool from_det = determinant(g).is_zero();
  if (from_hankel != from_det) {
    throw InvariantViolation(std::string("degeneracy via det M_{m,1} = ") + (from_hankel ? "true" : "false") +
                             " disagrees with det G == 0 = " + (from_det ? "true" : "false"));
  }
  return from_hankel;
}

/// Independent count of distinct eigenvalues: degree of the squarefree part of the characteristic polynomial.
template <Field F>
std::size_t oracle_spectral_size(const Matrix<F>& g) {
  return squarefree_part(char_poly(g)).degree();
}

template <Field F>
struct ScalingWitness {
  std::size_t t;
  std::size_t l;
  F c;
  std::size_t exponent;  // t*l + t*(t-1)
  F scaled;              // det M_{t,l}(cG)
  F predicted;           // c^exponent * det M_{t,l}(G)
  bool equal;
};

/// Checks det M_{t,l}(cG) = c^{tl + t(t-1)} det M_{t,l}(G).
template <Field F>
ScalingWitness<F> verify_scaling(const Matrix<F>& g, const F& c, const HankelSpec& spec) {
  if (c.is_zero()) throw PreconditionError("scaling factor must be nonzero");
  const std::size_t exponent = spec.t() * spec.l() + spec.t() * (spec.t() - 1);
  F scaled = hankel_det(c * g, spec);
  F predicted = power(c, exponent) * hankel_det(g, spec);
  const bool equal = scaled == predicted;
  return {spec.t(), spec.l(), c, exponent, std::move(scaled), std::move(predicted), equal};
}

}  // namespace hankel
