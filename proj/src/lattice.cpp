#include "conecy/lattice.hpp"

namespace conecy {

namespace {

IntMatrix rows_to_matrix(const std::vector<IntVector>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (n == 0) throw ArgumentError("det: empty vector list");
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw ArgumentError("det: need " + std::to_string(n) + " vectors of dimension " +
                          std::to_string(n));
    m.row(i) = rows[i].transpose();
  }
  return m;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, abs(v(i)));
  return g;
}

}  // namespace

Integer det(const std::vector<IntVector>& rows) { return bareiss_det(rows_to_matrix(rows)); }

IntVector make_primitive(const IntVector& v) {
  const Integer g = content(v);
  if (g == 0) throw ArgumentError("make_primitive: zero vector");
  IntVector out = v;
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) /= g;
  return out;
}

bool is_primitive(const IntVector& v) { return content(v) == 1; }

LatticeCone::LatticeCone(std::vector<IntVector> generators)
    : dim_(static_cast<Eigen::Index>(generators.size())), generators_(std::move(generators)) {
  if (dim_ < 1) throw ArgumentError("LatticeCone: needs at least one generator");
  for (const auto& g : generators_) {
    if (g.size() != dim_)
      throw ArgumentError("LatticeCone: generator " + to_string(g) + " has wrong dimension");
    if (!is_primitive(g))
      throw ArgumentError("LatticeCone: generator " + to_string(g) + " is not primitive");
  }
  det_ = det(generators_);
  if (det_ == 0) throw ArgumentError("LatticeCone: generators are linearly dependent");
}

bool LatticeCone::has_generator(const IntVector& v) const {
  for (const auto& g : generators_)
    if (g == v) return true;
  return false;
}

// Cramer's rule; each numerator is again a Bareiss determinant.
RatVector cone_coordinates(const IntVector& w, const LatticeCone& cone) {
  if (w.size() != cone.dim()) throw ArgumentError("cone_coordinates: dimension mismatch");
  RatVector coords(cone.dim());
  std::vector<IntVector> rows = cone.generators();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    IntVector saved = rows[i];
    rows[i] = w;
    coords(static_cast<Eigen::Index>(i)) = ratio(det(rows), cone.determinant());
    rows[i] = std::move(saved);
  }
  return coords;
}

bool contains_in_interior(const IntVector& w, const LatticeCone& cone) {
  const RatVector c = cone_coordinates(w, cone);
  for (Eigen::Index i = 0; i < c.size(); ++i)
    if (c(i) <= 0) return false;
  return true;
}

bool contains(const IntVector& w, const LatticeCone& cone) {
  const RatVector c = cone_coordinates(w, cone);
  for (Eigen::Index i = 0; i < c.size(); ++i)
    if (c(i) < 0) return false;
  return true;
}

bool is_unimodular(const LatticeCone& cone) { return abs(cone.determinant()) == 1; }

}  // namespace conecy
