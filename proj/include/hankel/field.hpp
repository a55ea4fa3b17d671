#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "hankel/modular.hpp"
#include "hankel/rational.hpp"

namespace hankel {

/**
 * Exact field scalar.
 *
 * Elements carry whatever context they need (the modulus for GF(p)), so
 * constants are produced from an existing element with `x.make(k)`, which
 * is the image of the integer k in x's field.
 */
template <class F>
concept Field = std::copyable<F> && std::equality_comparable<F> &&
                requires(const F a, const F b, long k) {
                  { a + b } -> std::convertible_to<F>;
                  { a - b } -> std::convertible_to<F>;
                  { a * b } -> std::convertible_to<F>;
                  { a / b } -> std::convertible_to<F>;
                  { -a } -> std::convertible_to<F>;
                  { a.inverse() } -> std::convertible_to<F>;
                  { a.make(k) } -> std::same_as<F>;
                  { a.is_zero() } -> std::same_as<bool>;
                  { a.characteristic() } -> std::same_as<std::uint64_t>;
                  { a.str() } -> std::same_as<std::string>;
                };

static_assert(Field<Rational>);
static_assert(Field<ModP>);

/// base^exp by repeated squaring; base^0 is one.
template <Field F>
F power(F base, std::uint64_t exp) {
  F result = base.make(1);
  while (exp > 0) {
    if (exp & 1U) result = result * base;
    exp >>= 1U;
    if (exp > 0) base = base * base;
  }
  return result;
}

}  // namespace hankel
