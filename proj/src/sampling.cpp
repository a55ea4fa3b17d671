#include "hankel/sampling.hpp"

#include <limits>
#include <vector>

#include "hankel/errors.hpp"

namespace hankel {

long SampleRng::uniform(long lo, long hi) {
  if (hi < lo) throw PreconditionError("empty sampling range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the draw unbiased and independent of std:: distribution details.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<long>(x % span);
}

Spectrum<Rational> random_rational_spectrum(SampleRng& rng, std::size_t max_m, std::size_t max_multiplicity,
                                            long bound) {
  const auto m = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_m)));
  std::vector<Rational> eigenvalues;
  std::vector<std::size_t> multiplicities;
  while (eigenvalues.size() < m) {
    const long den = rng.uniform(1, 3);
    const Rational candidate(mpz_class(rng.uniform(-bound * den, bound * den)), mpz_class(den));
    bool fresh = true;
    for (const auto& e : eigenvalues) fresh = fresh && !(e == candidate);
    if (!fresh) continue;
    eigenvalues.push_back(candidate);
    multiplicities.push_back(static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_multiplicity))));
  }
  return Spectrum<Rational>(std::move(eigenvalues), std::move(multiplicities));
}

Matrix<Rational> conjugate_unimodular(Matrix<Rational> g, SampleRng& rng, std::size_t steps) {
  const std::size_t n = g.order();
  if (n < 2) return g;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    const Rational a(rng.chance(1, 2) ? 1 : -1);
    // E = I + a e_i e_j^T, E^{-1} = I - a e_i e_j^T.
    for (std::size_t c = 0; c < n; ++c) g(i, c) += a * g(j, c);
    for (std::size_t r = 0; r < n; ++r) g(r, j) -= a * g(r, i);
  }
  return g;
}

Matrix<Rational> random_integer_matrix(SampleRng& rng, std::size_t n, long bound) {
  Matrix<Rational> g(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = Rational(rng.uniform(-bound, bound));
  }
  return g;
}

Matrix<Rational> random_structured_integer_matrix(SampleRng& rng, std::size_t n, long bound) {
  Matrix<Rational> g(n, Rational(0));
  switch (rng.uniform(0, 2)) {
    case 0:
      for (std::size_t i = 0; i < n; ++i) {
        g(i, i) = Rational(rng.uniform(-1, 1));
        for (std::size_t j = i + 1; j < n; ++j) g(i, j) = Rational(rng.chance(1, 2) ? 0 : rng.uniform(-bound, bound));
      }
      break;
    case 1:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (rng.chance(1, 4)) g(i, j) = Rational(rng.uniform(-bound, bound));
        }
      }
      break;
    default: {
      g = random_integer_matrix(rng, n, bound);
      if (n >= 2) {
        const auto src = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        const auto dst = static_cast<std::size_t>((src + 1 + rng.uniform(0, static_cast<long>(n) - 2)) % n);
        for (std::size_t j = 0; j < n; ++j) g(dst, j) = g(src, j);
      }
      break;
    }
  }
  return g;
}

namespace {

Matrix<Rational> householder(SampleRng& rng, std::size_t n) {
  std::vector<Rational> v(n, Rational(0));
  Rational norm2(0);
  while (norm2.is_zero()) {
    norm2 = Rational(0);
    for (auto& x : v) {
      x = Rational(rng.uniform(-3, 3));
      norm2 += x * x;
    }
  }
  Matrix<Rational> h(n, Rational(0));
  const Rational scale = Rational(2) / norm2;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h(i, j) = Rational(i == j ? 1 : 0) - scale * v[i] * v[j];
  }
  return h;
}

}  // namespace

Matrix<Rational> random_symmetric_rational(SampleRng& rng, std::size_t n) {
  if (rng.chance(1, 2)) {
    Matrix<Rational> g(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        g(i, j) = Rational(mpz_class(rng.uniform(-5, 5)), mpz_class(rng.uniform(1, 2)));
        g(j, i) = g(i, j);
      }
    }
    return g;
  }
  // H D H with a diagonal D over a small palette of values.
  const long palette = rng.uniform(1, static_cast<long>(n));
  std::vector<Rational> values;
  for (long k = 0; k < palette; ++k) values.emplace_back(mpz_class(rng.uniform(-6, 6)), mpz_class(rng.uniform(1, 2)));
  std::vector<Rational> diagonal;
  for (std::size_t i = 0; i < n; ++i) diagonal.push_back(values[static_cast<std::size_t>(rng.uniform(0, palette - 1))]);
  const Matrix<Rational> h = householder(rng, n);
  return h * diagonal_matrix(diagonal) * h;
}

Matrix<Rational> cube_root_of_unity_companion() {
  return Matrix<Rational>::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
}

}  // namespace hankel
