#include "hankel/modular.hpp"

#include <array>
#include <stdexcept>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 63;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These bases make Miller-Rabin deterministic below 3.3e24.
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

ModP::ModP(std::int64_t value, std::uint64_t modulus) : residue_(0), modulus_(modulus) {
  if (modulus == 0) throw std::domain_error("GF(p) element with zero modulus");
  if (value >= 0) {
    residue_ = static_cast<std::uint64_t>(value) % modulus;
  } else {
    // -(value + 1) avoids overflow at INT64_MIN.
    const std::uint64_t mag = static_cast<std::uint64_t>(-(value + 1)) + 1;
    const std::uint64_t r = mag % modulus;
    residue_ = r == 0 ? 0 : modulus - r;
  }
}

ModP ModP::checked(std::int64_t value, std::uint64_t modulus) {
  if (modulus >= kMaxModulus || !is_prime(modulus)) {
    throw PreconditionError("modulus " + std::to_string(modulus) + " is not a prime below 2^63");
  }
  return ModP(value, modulus);
}

ModP ModP::from_rational(const Rational& q, std::uint64_t modulus) {
  const mpz_class p(std::to_string(modulus), 10);
  mpz_class num = q.numerator() % p;
  if (num < 0) num += p;
  mpz_class den = q.denominator() % p;
  if (den == 0) {
    throw std::domain_error("denominator of " + q.str() + " is not invertible mod " +
                            std::to_string(modulus));
  }
  const ModP n(std::stoull(num.get_str()), modulus, Raw{});
  const ModP d(std::stoull(den.get_str()), modulus, Raw{});
  return n / d;
}

void ModP::require_same_field(const ModP& rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw std::domain_error("mixing GF(" + std::to_string(modulus_) + ") and GF(" +
                            std::to_string(rhs.modulus_) + ") elements");
  }
}

ModP ModP::inverse() const {
  if (residue_ == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(modulus_) + ")");
  return ModP(pow_mod(residue_, modulus_ - 2, modulus_), modulus_, Raw{});
}

ModP& ModP::operator+=(const ModP& rhs) {
  require_same_field(rhs);
  residue_ += rhs.residue_;
  if (residue_ >= modulus_) residue_ -= modulus_;
  return *this;
}

ModP& ModP::operator-=(const ModP& rhs) {
  require_same_field(rhs);
  residue_ = residue_ >= rhs.residue_ ? residue_ - rhs.residue_ : residue_ + (modulus_ - rhs.residue_);
  return *this;
}

ModP& ModP::operator*=(const ModP& rhs) {
  require_same_field(rhs);
  residue_ = mul_mod(residue_, rhs.residue_, modulus_);
  return *this;
}

}  // namespace hankel
