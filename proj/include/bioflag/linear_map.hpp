#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bioflag/subspace.hpp"

namespace bioflag {

/// A linear map between two subspaces of the same ambient space. The matrix
/// has shape (dim target) x (dim domain): column c holds the target
/// coordinates of the image of the c-th canonical domain basis vector.
class LinearMap {
 public:
  LinearMap(Subspace domain, Subspace target, Matrix matrix);

  static LinearMap zero(const Subspace& domain, const Subspace& target);
  /// Map determined by images of independent source vectors spanning domain.
  static LinearMap from_pairs(const Subspace& domain, const Subspace& target,
                              const std::vector<std::pair<Vec, Vec>>& pairs);

  const Subspace& domain() const { return domain_; }
  const Subspace& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  /// Image of v; throws DimensionMismatch when v is outside the domain.
  Vec apply(std::span<const Elem> v) const;
  bool is_zero() const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  Subspace domain_;
  Subspace target_;
  Matrix matrix_;
};

/// Graph {v + A v : v in domain}; throws NotDirect when domain and target meet.
Subspace graph(const LinearMap& a);

/// Every linear map domain -> target, in lexicographic order of matrix entries.
std::vector<LinearMap> enumerate_maps(const Subspace& domain, const Subspace& target);

}  // namespace bioflag
