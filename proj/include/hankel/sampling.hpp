#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "hankel/matrix.hpp"
#include "hankel/rational.hpp"
#include "hankel/trace_hankel.hpp"

namespace hankel {

/// Seeded generator with a platform-independent integer draw, so that a
/// given seed reproduces the same samples everywhere.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform over [lo, hi].
  long uniform(long lo, long hi);

  /// True with probability num/den.
  bool chance(long num, long den) { return uniform(1, den) <= num; }

 private:
  std::mt19937_64 engine_;
};

/// m in 1..max_m distinct eigenvalues a/b with b in {1, 2, 3} and |a/b| <= bound,
/// multiplicities in 1..max_multiplicity.
Spectrum<Rational> random_rational_spectrum(SampleRng& rng, std::size_t max_m, std::size_t max_multiplicity,
                                            long bound);

/// Similarity by `steps` random elementary integer matrices I +- e_ij (determinant 1).
Matrix<Rational> conjugate_unimodular(Matrix<Rational> g, SampleRng& rng, std::size_t steps);

/// Entries uniform in [-bound, bound].
Matrix<Rational> random_integer_matrix(SampleRng& rng, std::size_t n, long bound);

/// Entries still in [-bound, bound] but shaped to hit repeated eigenvalues,
/// Jordan blocks and singular matrices: upper-triangular with a diagonal drawn
/// from {-1, 0, 1}, sparse, or rank-deficient (repeated rows).
Matrix<Rational> random_structured_integer_matrix(SampleRng& rng, std::size_t n, long bound);

/// Mix of random rational symmetric matrices and Householder conjugates
/// H D H of diagonal matrices with repeated entries (so spectral sizes below n occur).
Matrix<Rational> random_symmetric_rational(SampleRng& rng, std::size_t n);

/// Companion matrix of x^3 - 1, whose det M_2 vanishes although m = 3.
Matrix<Rational> cube_root_of_unity_companion();

}  // namespace hankel
