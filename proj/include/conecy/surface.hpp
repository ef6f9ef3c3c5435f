#pragma once

// Intersection theory and curvature energy for two-dimensional chain
// resolutions, plus the volume-density inequality over intersection strata.

#include "conecy/resolution.hpp"

#include <vector>

namespace conecy {

struct IntersectionMatrix {
  /// Tridiagonal: -b_j on the diagonal, 1 next to it.
  IntMatrix entries;
  /// Leading principal minors of -entries (the continuants of the chain).
  std::vector<Integer> leading_minors;
  RatMatrix inverse;
  bool negative_definite = false;
  bool inverse_nonpositive = false;
};

/// Builds the matrix and certifies negative definiteness and the sign of the
/// inverse. The inverse comes from the continuant formula
/// (-M)^{-1}_{ij} = θ_{i-1} φ_{j+1} / θ_k  (i <= j).
IntersectionMatrix intersection_matrix(const ChainResolution& c);

/// K_X · E_i = Σ_j (β_j - 1) E_j · E_i for every i.
std::vector<Rational> canonical_degrees(const ChainResolution& c);

/// Checks K_X · E_i = b_i - 2 (adjunction with K_{E_i} · E_i = -2) row by row.
bool adjunction_check(const ChainResolution& c);

struct EnergyBreakdown {
  long long chi_X = 0;
  /// (β_j - 1) χ(E_j^×), one per curve.
  std::vector<Rational> curve_terms;
  /// ν_x - 1 with ν_x = β_j β_{j+1}, one per node of the chain.
  std::vector<Rational> node_terms;
  Rational group_term;
  Rational total;
  /// True when the chain has normal-crossing points; the boundary limit behind
  /// the formula is then not established, so the value is conditional.
  bool conditional = false;
};

/// E = χ(X) + Σ_j (β_j - 1) χ(E_j^×) + Σ_x (ν_x - 1) - 1/|Γ|.
EnergyBreakdown energy(const ChainResolution& c);

/// A nonempty intersection E_{j_1} ∩ ... ∩ E_{j_d}, by indices into a ray list.
struct Stratum {
  std::vector<std::size_t> components;
};

std::vector<Stratum> chain_strata(std::size_t k);
/// E_1, E_2 and the curve E_1 ∩ E_2 of the three-dimensional family.
std::vector<Stratum> family_strata();

struct StratumCheck {
  std::vector<std::size_t> components;
  Rational product;
  bool exceeds = false;
};

struct StrataReport {
  Rational nu;
  std::vector<StratumCheck> strata;
  bool overall = false;
};

/// Π β over each stratum compared strictly against ν.
StrataReport volume_density_inequality(const std::vector<ExceptionalRay>& rays,
                                       const std::vector<Stratum>& strata, const Rational& nu);

}  // namespace conecy
