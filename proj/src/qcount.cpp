#include "bioflag/qcount.hpp"

#include <algorithm>
#include <stdexcept>

namespace bioflag {

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t gaussian_binomial(unsigned n, unsigned k, std::uint64_t q) {
  if (k > n) return 0;
  // Pascal recursion [n,k] = [n-1,k-1] + q^k [n-1,k] keeps every term exact.
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (unsigned m = 1; m <= n; ++m)
    for (unsigned j = std::min(m, k); j >= 1; --j) row[j] = row[j - 1] + ipow(q, j) * row[j];
  return row[k];
}

QPoly::QPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::constant(long long c) { return QPoly({c}); }

QPoly QPoly::monomial(unsigned degree) {
  std::vector<long long> c(degree + 1, 0);
  c[degree] = 1;
  return QPoly(std::move(c));
}

QPoly QPoly::q_integer(unsigned m) { return QPoly(std::vector<long long>(m, 1)); }

QPoly QPoly::gaussian(unsigned n, unsigned k) {
  if (k > n) return QPoly();
  std::vector<QPoly> row(k + 1);
  row[0] = constant(1);
  for (unsigned m = 1; m <= n; ++m)
    for (unsigned j = std::min(m, k); j >= 1; --j) row[j] = row[j - 1] + monomial(j) * row[j];
  return row[k];
}

long long QPoly::evaluate(long long q) const {
  long long r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + *it;
  return r;
}

QPoly QPoly::pow(unsigned e) const {
  QPoly r = constant(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return QPoly();
  std::vector<long long> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(c));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<long long> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return QPoly(std::move(c));
}

}  // namespace bioflag
