#include "conecy/surface.hpp"

namespace conecy {

IntersectionMatrix intersection_matrix(const ChainResolution& c) {
  const auto k = static_cast<Eigen::Index>(c.self_intersections.size());
  IntersectionMatrix out;
  out.entries = IntMatrix::Constant(k, k, Integer(0));
  for (Eigen::Index i = 0; i < k; ++i) {
    out.entries(i, i) = -c.self_intersections[i];
    if (i + 1 < k) out.entries(i, i + 1) = out.entries(i + 1, i) = 1;
  }

  // theta[i] = det of the leading i×i block of -M, phi[i] = det of the trailing
  // block starting at row i (0-based, phi[k] = 1).
  std::vector<Integer> theta(k + 1), phi(k + 2);
  theta[0] = 1;
  for (Eigen::Index i = 1; i <= k; ++i)
    theta[i] = Integer(c.self_intersections[i - 1]) * theta[i - 1] - (i >= 2 ? theta[i - 2] : Integer(0));
  phi[k + 1] = 0;
  phi[k] = 1;
  for (Eigen::Index i = k - 1; i >= 0; --i)
    phi[i] = Integer(c.self_intersections[i]) * phi[i + 1] - phi[i + 2];

  out.leading_minors.assign(theta.begin() + 1, theta.end());
  out.negative_definite = true;
  for (const auto& m : out.leading_minors) out.negative_definite = out.negative_definite && m > 0;

  out.inverse = RatMatrix(k, k);
  out.inverse_nonpositive = out.negative_definite;
  if (out.negative_definite) {
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = i; j < k; ++j) {
        const Rational entry = -Rational(theta[i] * phi[j + 1], theta[k]);
        out.inverse(i, j) = out.inverse(j, i) = entry;
        out.inverse_nonpositive = out.inverse_nonpositive && entry <= 0;
      }
  }
  return out;
}

std::vector<Rational> canonical_degrees(const ChainResolution& c) {
  const std::size_t k = c.rays.size();
  std::vector<Rational> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    Rational s = c.rays[i].discrepancy * Rational(-c.self_intersections[i]);
    if (i > 0) s += c.rays[i - 1].discrepancy;
    if (i + 1 < k) s += c.rays[i + 1].discrepancy;
    out[i] = s;
  }
  return out;
}

bool adjunction_check(const ChainResolution& c) {
  const auto degrees = canonical_degrees(c);
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i] != Rational(c.self_intersections[i] - 2)) return false;
  return true;
}

EnergyBreakdown energy(const ChainResolution& c) {
  const std::size_t k = c.rays.size();
  EnergyBreakdown e;
  e.chi_X = static_cast<long long>(k) + 1;
  for (std::size_t j = 0; j < k; ++j) {
    const long long nodes = (j > 0 ? 1 : 0) + (j + 1 < k ? 1 : 0);
    e.curve_terms.push_back(c.rays[j].discrepancy * Rational(2 - nodes));
  }
  for (std::size_t j = 0; j + 1 < k; ++j) e.node_terms.push_back(c.rays[j].beta * c.rays[j + 1].beta - 1);
  e.group_term = -Rational(1, c.quotient.order());

  e.total = Rational(e.chi_X) + e.group_term;
  for (const auto& t : e.curve_terms) e.total += t;
  for (const auto& t : e.node_terms) e.total += t;
  e.conditional = k >= 2;
  return e;
}

std::vector<Stratum> chain_strata(std::size_t k) {
  std::vector<Stratum> out;
  for (std::size_t j = 0; j < k; ++j) out.push_back({{j}});
  for (std::size_t j = 0; j + 1 < k; ++j) out.push_back({{j, j + 1}});
  return out;
}

std::vector<Stratum> family_strata() { return {{{0}}, {{1}}, {{0, 1}}}; }

StrataReport volume_density_inequality(const std::vector<ExceptionalRay>& rays,
                                       const std::vector<Stratum>& strata, const Rational& nu) {
  StrataReport rep{nu, {}, !strata.empty()};
  for (const auto& s : strata) {
    Rational product = 1;
    for (std::size_t j : s.components) product *= rays.at(j).beta;
    const bool exceeds = product > nu;
    rep.overall = rep.overall && exceeds;
    rep.strata.push_back({s.components, product, exceeds});
  }
  return rep;
}

}  // namespace conecy
