#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bioflag/matrix.hpp"

namespace bioflag {

/// A linear subspace of GF(p)^n held in canonical form: its basis is the
/// reduced row echelon matrix of any spanning set, with zero rows removed.
/// Equality and ordering are structural on that matrix.
class Subspace {
 public:
  static Subspace zero(PrimeField f, std::size_t n);
  static Subspace whole(PrimeField f, std::size_t n);
  static Subspace span(PrimeField f, std::size_t n, const std::vector<Vec>& vectors);
  /// Span of the standard basis vectors e_i for the given 0-based axes.
  static Subspace coordinate(PrimeField f, std::size_t n,
                             const std::vector<std::size_t>& axes);
  static Subspace row_space(const Matrix& m);

  PrimeField field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }

  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec basis_vector(std::size_t r) const { return basis_.row_vector(r); }

  bool contains(std::span<const Elem> v) const;
  /// True when `other` is a subspace of *this.
  bool contains(const Subspace& other) const;

  /// Coefficients of v in the canonical basis, or nullopt when v is outside.
  std::optional<Vec> coordinates(std::span<const Elem> v) const;
  /// Linear combination of the canonical basis rows.
  Vec combine(std::span<const Elem> coeffs) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    return a.basis_ <=> b.basis_;
  }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  /// Reduces v against the basis in place; leaves the residual.
  void reduce(std::span<Elem> v) const;

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
/// Zassenhaus intersection.
Subspace intersect(const Subspace& a, const Subspace& b);

/// Complement of `inner` inside `outer`: the canonical basis rows of `outer`
/// whose indices are not pivots of `inner` written in `outer`-coordinates.
/// Throws DimensionMismatch when inner is not contained in outer.
Subspace canonical_complement(const Subspace& inner, const Subspace& outer);

/// Component of v in `onto` for the decomposition onto (+) along.
/// Throws NotDirect when the sum is not direct, DimensionMismatch when v is
/// outside onto + along.
Vec project(std::span<const Elem> v, const Subspace& onto, const Subspace& along);
/// Image of a whole subspace under the projection above.
Subspace project(const Subspace& s, const Subspace& onto, const Subspace& along);

class NotDirect : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All vectors of V, ordered lexicographically by canonical coordinates.
std::vector<Vec> enumerate_vectors(const Subspace& v);

/// Every j-dimensional subspace of V exactly once, sorted by canonical
/// basis matrix. Empty when j > dim V.
std::vector<Subspace> enumerate_subspaces(const Subspace& v, std::size_t j);

/// Every j-dimensional S with lower <= S <= upper, sorted. Empty when lower is
/// not contained in upper or the dimension is out of range.
std::vector<Subspace> subspaces_between(const Subspace& lower, const Subspace& upper,
                                        std::size_t j);

/// Sum of an arbitrary list (zero subspace of the given ambient when empty).
Subspace sum_all(PrimeField f, std::size_t n, std::span<const Subspace> parts);

}  // namespace bioflag
