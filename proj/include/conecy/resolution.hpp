#pragma once

// Toric resolutions of cyclic quotients: Hirzebruch-Jung chains in dimension
// two, the explicit 1/r(1,1,a) family in dimension three, and certification of
// arbitrary fan subdivisions of sigma.

#include "conecy/quotient.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conecy {

enum class Verdict { pass, fail, not_applicable };
std::string to_string(Verdict v);
Verdict verdict_of(bool ok);

/// An interior ray of a subdivision together with its cone-angle parameter
/// beta = ⟨w, gamma⟩ and discrepancy beta - 1.
struct ExceptionalRay {
  IntVector w;
  Rational beta;
  Rational discrepancy;
};

ExceptionalRay make_ray(const IntVector& w, const RatVector& gamma);

struct FanSubdivision {
  SingularityData parent;
  std::vector<LatticeCone> cones;
  /// Distinct cone generators that are not generators of sigma, in first-seen order.
  std::vector<ExceptionalRay> rays;
};

/// Collects the rays from the cone generators. Does not validate anything.
FanSubdivision make_subdivision(SingularityData parent, std::vector<LatticeCone> cones);

struct ChainResolution {
  CyclicQuotient quotient;
  SingularityData data;
  /// w_1, ..., w_k ordered from the e_2 side towards v.
  std::vector<ExceptionalRay> rays;
  /// b_j with E_j^2 = -b_j; identical to the continued fraction of r/a.
  std::vector<long long> self_intersections;
};

/// r/a = b_1 - 1/(b_2 - 1/(...)) with every b_j >= 2.
std::vector<long long> hj_continued_fraction(long long r, long long a);

/// Folds [b_1, ..., b_k] back into b_1 - 1/(b_2 - ...).
Rational fold_continued_fraction(const std::vector<long long>& b);

/// Minimal resolution of a two-dimensional cyclic quotient via the ray
/// recurrence w_{j+1} = b_j w_j - w_{j-1}, seeded with w_0 = e_2, w_1 = (1,1).
ChainResolution hj_resolution(const CyclicQuotient& q);

/// True iff w_{j-1} + w_{j+1} = b_j w_j for all j with w_0 = e_2, w_{k+1} = v.
bool chain_recurrence_holds(const ChainResolution& c);

/// The fan of consecutive cones ⟨e_2,w_1⟩, ⟨w_1,w_2⟩, ..., ⟨w_k,v⟩.
FanSubdivision chain_subdivision(const ChainResolution& c);

class FamilyConditionError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// Smooth resolution of 1/r(1,1,a) for a >= 3, r > a + 2, a | r + 1: sigma is
/// split by w_1 = (1,1,1), then ⟨v, e_2, w_1⟩ by w_2 = (v + e_2 + w_1)/a.
/// Throws FamilyConditionError naming the first violated condition.
FanSubdivision three_dim_family(long long r, long long a);

struct ConeCheck {
  std::vector<IntVector> generators;
  Integer determinant;
  bool unimodular;
  /// |det| / Π⟨g, gamma⟩; absent when some generator pairs non-positively with gamma.
  std::optional<Rational> normalized_volume;
};

struct RayCheck {
  IntVector w;
  Rational beta;
  bool interior;
};

struct CertificateReport {
  std::vector<ConeCheck> cones;
  std::vector<RayCheck> rays;
  Verdict unimodularity = Verdict::not_applicable;
  Verdict covering = Verdict::not_applicable;
  Verdict interiority = Verdict::not_applicable;
  Verdict disjointness = Verdict::not_applicable;
  /// Σ|det| over the cones.
  Integer raw_volume_sum;
  /// Σ normalized_volume; equals r exactly for a subdivision of sigma.
  std::optional<Rational> volume_sum;
  Integer expected_volume;
  std::vector<std::string> notes;

  bool overall() const;
};

/// Per-cone unimodularity, exact covering count (gamma-normalized volumes sum
/// to r), ray interiority, and for n = 2 pairwise interior-disjointness.
CertificateReport validate_subdivision(const FanSubdivision& s);

enum class RayClass { theorem_applicable, crepant, positive_discrepancy, non_klt };
std::string to_string(RayClass c);

struct AngleVerdict {
  std::vector<Rational> betas;
  std::vector<RayClass> classes;
  /// "theorem-applicable", "crepant", "mixed", "positive-discrepancy",
  /// "non-klt" or "no-exceptional-rays".
  std::string overall;
  /// pass only when every beta lies strictly in (0, 1).
  Verdict certificate;
};

AngleVerdict angle_condition(const std::vector<ExceptionalRay>& rays);
AngleVerdict angle_condition(const FanSubdivision& s);
AngleVerdict angle_condition(const ChainResolution& c);

/// Sum of the coordinates of w in the basis of sigma's generators. Throws
/// ArgumentError when w is not interior to sigma.
Rational beta_as_coefficient_sum(const IntVector& w, const LatticeCone& sigma);

}  // namespace conecy
