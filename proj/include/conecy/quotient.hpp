#pragma once

#include "conecy/lattice.hpp"

#include <vector>

namespace conecy {

/// The cyclic quotient singularity 1/r(1, a_2, ..., a_n). The first weight is
/// fixed to 1; callers with another first weight must normalize beforehand.
class CyclicQuotient {
 public:
  CyclicQuotient(long long r, std::vector<long long> weights);

  long long order() const { return r_; }
  /// a_2, ..., a_n (the implicit leading 1 is not stored).
  const std::vector<long long>& weights() const { return weights_; }
  int dim() const { return static_cast<int>(weights_.size()) + 1; }

  std::string label() const;

 private:
  long long r_;
  std::vector<long long> weights_;
};

struct SingularityData {
  CyclicQuotient quotient;
  LatticeCone sigma;
  RatVector gamma;
  Integer gorenstein_index;
  Rational volume_density;
};

/// ⟨v, e_2, ..., e_n⟩ with v = (r, r - a_2, ..., r - a_n).
LatticeCone sigma_cone(const CyclicQuotient& q);

/// The rational vector pairing to 1 with every generator of sigma. Computed by
/// closed formula and re-checked by exact pairing; throws ConsistencyError if
/// the check fails.
RatVector gamma(const CyclicQuotient& q);

Integer gorenstein_index(const CyclicQuotient& q);

/// ν_Y of the flat cone over S^{2n-1}/μ_r, i.e. 1/r.
Rational volume_density(const CyclicQuotient& q);

SingularityData singularity_data(const CyclicQuotient& q);

}  // namespace conecy
