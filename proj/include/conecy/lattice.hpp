#pragma once

// Integer lattice vectors and simplicial cones, all arithmetic exact.

#include "conecy/exact.hpp"

#include <utility>
#include <vector>

namespace conecy {

/// Fraction-free Gaussian elimination (Bareiss). Every division is exact, so
/// any integral-domain scalar works; intermediate entries stay bounded by
/// minors of the input.
template <typename Derived>
typename Derived::Scalar bareiss_det(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw ArgumentError("det: matrix is not square");
  Matrix<Scalar> m = input;
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar sign = 1;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Determinant of the square matrix whose rows are `rows`.
Integer det(const std::vector<IntVector>& rows);

IntVector make_primitive(const IntVector& v);
bool is_primitive(const IntVector& v);

/// Simplicial cone spanned by `dim` primitive, linearly independent integer vectors.
class LatticeCone {
 public:
  explicit LatticeCone(std::vector<IntVector> generators);

  Eigen::Index dim() const { return dim_; }
  const std::vector<IntVector>& generators() const { return generators_; }
  const IntVector& generator(std::size_t i) const { return generators_.at(i); }
  /// Signed determinant with the generators as rows.
  const Integer& determinant() const { return det_; }

  bool has_generator(const IntVector& v) const;

 private:
  Eigen::Index dim_;
  std::vector<IntVector> generators_;
  Integer det_;
};

/// The unique rationals with w = Σ coords[i] · generator(i).
RatVector cone_coordinates(const IntVector& w, const LatticeCone& cone);

bool contains_in_interior(const IntVector& w, const LatticeCone& cone);
bool contains(const IntVector& w, const LatticeCone& cone);

bool is_unimodular(const LatticeCone& cone);

}  // namespace conecy
