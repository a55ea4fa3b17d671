#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hankel/errors.hpp"
#include "hankel/field.hpp"
#include "hankel/linalg.hpp"
#include "hankel/matrix.hpp"

namespace hankel {

/// Selects the member M_{t,l} of the trace-power Hankel family: order t >= 1, power offset l >= 0.
class HankelSpec {
 public:
  HankelSpec(std::size_t t, std::size_t l) : t_(t), l_(l) {
    if (t == 0) throw PreconditionError("Hankel order t must be at least 1");
  }

  std::size_t t() const { return t_; }
  std::size_t l() const { return l_; }

  /// Highest trace power the matrix touches, l + 2t - 2.
  std::size_t max_power() const { return l_ + 2 * t_ - 2; }

  friend bool operator==(const HankelSpec&, const HankelSpec&) = default;

 private:
  std::size_t t_;
  std::size_t l_;
};

/// Distinct eigenvalues with their algebraic multiplicities.
template <Field F>
class Spectrum {
 public:
  Spectrum(std::vector<F> eigenvalues, std::vector<std::size_t> multiplicities)
      : eigenvalues_(std::move(eigenvalues)), multiplicities_(std::move(multiplicities)) {
    if (eigenvalues_.empty()) throw PreconditionError("spectrum needs at least one eigenvalue");
    if (eigenvalues_.size() != multiplicities_.size()) {
      throw PreconditionError("spectrum needs one multiplicity per eigenvalue");
    }
    for (std::size_t i = 0; i < eigenvalues_.size(); ++i) {
      if (multiplicities_[i] == 0) throw PreconditionError("multiplicities must be positive");
      for (std::size_t j = 0; j < i; ++j) {
        if (eigenvalues_[i] == eigenvalues_[j]) {
          throw PreconditionError("eigenvalue " + eigenvalues_[i].str() + " listed twice");
        }
      }
    }
  }

  /// Number of distinct eigenvalues m.
  std::size_t size() const { return eigenvalues_.size(); }

  /// Sum of the multiplicities, i.e. the order of the matrix described.
  std::size_t order() const {
    std::size_t n = 0;
    for (std::size_t p : multiplicities_) n += p;
    return n;
  }

  const std::vector<F>& eigenvalues() const { return eigenvalues_; }
  const std::vector<std::size_t>& multiplicities() const { return multiplicities_; }

 private:
  std::vector<F> eigenvalues_;
  std::vector<std::size_t> multiplicities_;
};

/// diag(λ_1 I_{p_1}, ..., λ_m I_{p_m})
template <Field F>
Matrix<F> block_diagonal(const Spectrum<F>& spectrum) {
  std::vector<F> diagonal;
  diagonal.reserve(spectrum.order());
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    diagonal.insert(diagonal.end(), spectrum.multiplicities()[i], spectrum.eigenvalues()[i]);
  }
  return diagonal_matrix(diagonal);
}

/// The t x t Hankel matrix with (i, j) entry traces[i + j + l] (0-based).
template <Field F>
Matrix<F> build_hankel(std::span<const F> traces, const HankelSpec& spec) {
  if (traces.size() <= spec.max_power()) {
    throw PreconditionError("M_{" + std::to_string(spec.t()) + "," + std::to_string(spec.l()) +
                            "} needs traces of powers 0.." + std::to_string(spec.max_power()) +
                            " (" + std::to_string(spec.max_power() + 1) + " values), got " +
                            std::to_string(traces.size()));
  }
  Matrix<F> m(spec.t(), traces[0]);
  for (std::size_t i = 0; i < spec.t(); ++i) {
    for (std::size_t j = 0; j < spec.t(); ++j) m(i, j) = traces[i + j + spec.l()];
  }
  return m;
}

/// det M_{t,l} from precomputed power traces; lets a sweep over (t, l) share one trace table.
template <Field F>
F hankel_det_from_traces(std::span<const F> traces, const HankelSpec& spec) {
  return determinant(build_hankel(traces, spec));
}

/// det M_{t,l}(G).
template <Field F>
F hankel_det(const Matrix<F>& g, const HankelSpec& spec) {
  const std::vector<F> traces = power_traces(g, spec.max_power());
  return hankel_det_from_traces(std::span<const F>(traces), spec);
}

/// Vandermonde determinant via the product formula prod_{i<j} (z_j - z_i).
template <Field F>
F vandermonde_det(std::span<const F> z) {
  if (z.empty()) throw PreconditionError("Vandermonde determinant needs at least one node");
  F acc = z[0].make(1);
  for (std::size_t j = 1; j < z.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) acc = acc * (z[j] - z[i]);
  }
  return acc;
}

/**
 * Closed form of det M_{t,l}(G) from the spectrum of G:
 *
 *   sum over t-subsets T of {1..m} of p(T) * λ(T)^l * V(λ_T)^2
 *
 * and zero when t > m. Subsets are visited in increasing lexicographic order
 * and multiplicities enter the field as integers (so they can vanish mod p).
 */
template <Field F>
F rhs_closed_form(const Spectrum<F>& spectrum, const HankelSpec& spec) {
  const std::size_t m = spectrum.size();
  const std::size_t t = spec.t();
  const F like = spectrum.eigenvalues().front();
  F total = like.make(0);
  if (t > m) return total;

  std::vector<std::size_t> subset(t);
  for (std::size_t k = 0; k < t; ++k) subset[k] = k;
  std::vector<F> nodes;
  nodes.reserve(t);
  while (true) {
    F mult = like.make(1);
    F prod = like.make(1);
    nodes.clear();
    for (std::size_t idx : subset) {
      mult = mult * like.make(static_cast<long>(spectrum.multiplicities()[idx]));
      prod = prod * spectrum.eigenvalues()[idx];
      nodes.push_back(spectrum.eigenvalues()[idx]);
    }
    const F v = vandermonde_det(std::span<const F>(nodes));
    total = total + mult * power(prod, spec.l()) * v * v;

    // Next subset in lexicographic order.
    std::size_t k = t;
    while (k > 0 && subset[k - 1] == m - t + (k - 1)) --k;
    if (k == 0) break;
    ++subset[k - 1];
    for (std::size_t r = k; r < t; ++r) subset[r] = subset[r - 1] + 1;
  }
  return total;
}

/// Both sides of the determinant identity for one (t, l).
template <Field F>
struct TheoremWitness {
  std::size_t t;
  std::size_t l;
  F lhs;
  F rhs;
  bool equal;
};

/// Compares det M_{t,l}(G) with the closed form for the caller-supplied spectrum of G.
template <Field F>
TheoremWitness<F> verify_theorem(const Matrix<F>& g, const Spectrum<F>& spectrum, const HankelSpec& spec) {
  F lhs = hankel_det(g, spec);
  F rhs = rhs_closed_form(spectrum, spec);
  const bool equal = lhs == rhs;
  return {spec.t(), spec.l(), std::move(lhs), std::move(rhs), equal};
}

}  // namespace hankel
