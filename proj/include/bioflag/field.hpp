#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bioflag {

using Elem = std::uint8_t;
using Vec = std::vector<Elem>;

/// Raised when operands live in different ambient spaces, over different
/// fields, or otherwise violate a shape precondition.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// GF(p) for a prime p <= 251, so every element fits in one byte and every
/// product fits in 16 bits.
class PrimeField {
 public:
  static constexpr unsigned kMaxPrime = 251;

  explicit PrimeField(unsigned p);

  unsigned modulus() const { return p_; }

  Elem add(Elem a, Elem b) const {
    unsigned s = unsigned{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const {
    return static_cast<Elem>(a >= b ? a - b : a + p_ - b);
  }
  Elem neg(Elem a) const { return static_cast<Elem>(a == 0 ? 0 : p_ - a); }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((unsigned{a} * b) % p_);
  }
  /// Multiplicative inverse; throws std::domain_error on zero.
  Elem inv(Elem a) const;

  Elem reduce(long long v) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;
  friend auto operator<=>(const PrimeField&, const PrimeField&) = default;

 private:
  unsigned p_;
};

bool is_prime(unsigned p);

}  // namespace bioflag
