#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "hankel/rational.hpp"

namespace hankel {

/// Deterministic primality test valid for every 64-bit input.
bool is_prime(std::uint64_t n);

/**
 * Element of the prime field GF(p).
 *
 * Each element carries its modulus; mixing elements of different fields
 * throws std::domain_error. The residue is always kept in [0, p).
 * Moduli are restricted to primes below 2^63 so sums never overflow.
 */
class ModP {
 public:
  /// Reduces `value` into [0, modulus). The caller guarantees `modulus` is prime
  /// (use `ModP::checked` at trust boundaries).
  ModP(std::int64_t value, std::uint64_t modulus);

  /// Like the constructor but verifies that `modulus` is a prime below 2^63.
  /// Throws PreconditionError otherwise.
  static ModP checked(std::int64_t value, std::uint64_t modulus);

  /// Image of a rational under Z_(p) -> GF(p). Throws std::domain_error when
  /// the denominator is divisible by p.
  static ModP from_rational(const Rational& q, std::uint64_t modulus);

  std::uint64_t residue() const { return residue_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t characteristic() const { return modulus_; }

  bool is_zero() const { return residue_ == 0; }
  bool is_one() const { return residue_ == 1; }

  ModP make(long k) const { return ModP(k, modulus_); }

  /// Throws std::domain_error for zero.
  ModP inverse() const;

  std::string str() const { return std::to_string(residue_); }

  ModP operator-() const { return ModP(residue_ == 0 ? 0 : modulus_ - residue_, modulus_, Raw{}); }

  ModP& operator+=(const ModP& rhs);
  ModP& operator-=(const ModP& rhs);
  ModP& operator*=(const ModP& rhs);
  ModP& operator/=(const ModP& rhs) { return *this *= rhs.inverse(); }

  friend ModP operator+(ModP lhs, const ModP& rhs) { return lhs += rhs; }
  friend ModP operator-(ModP lhs, const ModP& rhs) { return lhs -= rhs; }
  friend ModP operator*(ModP lhs, const ModP& rhs) { return lhs *= rhs; }
  friend ModP operator/(ModP lhs, const ModP& rhs) { return lhs /= rhs; }

  friend bool operator==(const ModP& a, const ModP& b) {
    return a.residue_ == b.residue_ && a.modulus_ == b.modulus_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.residue_; }

 private:
  struct Raw {};
  ModP(std::uint64_t residue, std::uint64_t modulus, Raw) : residue_(residue), modulus_(modulus) {}
  void require_same_field(const ModP& rhs) const;

  std::uint64_t residue_;
  std::uint64_t modulus_;
};

}  // namespace hankel
