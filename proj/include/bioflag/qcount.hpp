#pragma once

#include <cstdint>
#include <vector>

namespace bioflag {

/// Number of k-dimensional subspaces of an n-dimensional space over GF(q).
std::uint64_t gaussian_binomial(unsigned n, unsigned k, std::uint64_t q);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Integer polynomial in q, coefficients from degree 0 upward.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<long long> coeffs);

  static QPoly constant(long long c);
  static QPoly monomial(unsigned degree);
  /// [m]_q = 1 + q + ... + q^{m-1}.
  static QPoly q_integer(unsigned m);
  static QPoly gaussian(unsigned n, unsigned k);

  const std::vector<long long>& coeffs() const { return c_; }
  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  long long evaluate(long long q) const;

  QPoly pow(unsigned e) const;
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim();
  std::vector<long long> c_;
};

}  // namespace bioflag
