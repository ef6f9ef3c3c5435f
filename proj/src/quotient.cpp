#include "conecy/quotient.hpp"

#include <numeric>

namespace conecy {

CyclicQuotient::CyclicQuotient(long long r, std::vector<long long> weights)
    : r_(r), weights_(std::move(weights)) {
  if (r_ < 2) throw ArgumentError("quotient order r must be at least 2, got " + std::to_string(r_));
  if (weights_.empty()) throw ArgumentError("quotient needs dimension n >= 2 (at least one weight)");
  for (long long a : weights_) {
    if (a < 1 || a > r_ - 1)
      throw ArgumentError("weight " + std::to_string(a) + " outside [1, r-1] for r = " +
                          std::to_string(r_));
    if (std::gcd(a, r_) != 1)
      throw ArgumentError("gcd(" + std::to_string(a) + ", " + std::to_string(r_) +
                          ") != 1: action is not free on the sphere");
  }
}

std::string CyclicQuotient::label() const {
  std::string s = "1/" + std::to_string(r_) + "(1";
  for (long long a : weights_) s += "," + std::to_string(a);
  return s + ")";
}

LatticeCone sigma_cone(const CyclicQuotient& q) {
  const int n = q.dim();
  std::vector<IntVector> gens;
  IntVector v(n);
  v(0) = q.order();
  for (int i = 1; i < n; ++i) v(i) = q.order() - q.weights()[i - 1];
  gens.push_back(v);
  for (int i = 1; i < n; ++i) gens.push_back(unit_vector(n, i));
  return LatticeCone(std::move(gens));
}

RatVector gamma(const CyclicQuotient& q) {
  const int n = q.dim();
  Integer top = 1;
  for (long long a : q.weights()) top += a - q.order();
  RatVector g = RatVector::Constant(n, Rational(1));
  g(0) = Rational(top, q.order());

  const LatticeCone sigma = sigma_cone(q);
  for (const auto& gen : sigma.generators())
    if (dot(gen, g) != 1)
      throw ConsistencyError("gamma does not pair to 1 with generator " + to_string(gen) +
                             " of " + q.label());
  return g;
}

Integer gorenstein_index(const CyclicQuotient& q) {
  Integer l = 1;
  const RatVector g = gamma(q);
  for (Eigen::Index i = 0; i < g.size(); ++i) l = lcm(l, denominator(g(i)));
  return l;
}

Rational volume_density(const CyclicQuotient& q) { return Rational(1, q.order()); }

SingularityData singularity_data(const CyclicQuotient& q) {
  return SingularityData{q, sigma_cone(q), gamma(q), gorenstein_index(q), volume_density(q)};
}

}  // namespace conecy
