#include "conecy/resolution.hpp"

#include <numeric>

namespace conecy {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "unknown";
}

Verdict verdict_of(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

ExceptionalRay make_ray(const IntVector& w, const RatVector& gamma) {
  const Rational beta = dot(w, gamma);
  return ExceptionalRay{w, beta, beta - 1};
}

FanSubdivision make_subdivision(SingularityData parent, std::vector<LatticeCone> cones) {
  FanSubdivision s{std::move(parent), std::move(cones), {}};
  for (const auto& cone : s.cones) {
    for (const auto& g : cone.generators()) {
      if (s.parent.sigma.has_generator(g)) continue;
      bool seen = false;
      for (const auto& ray : s.rays) seen = seen || ray.w == g;
      if (!seen) s.rays.push_back(make_ray(g, s.parent.gamma));
    }
  }
  return s;
}

std::vector<long long> hj_continued_fraction(long long r, long long a) {
  if (r < 2 || a < 1 || a > r - 1 || std::gcd(r, a) != 1)
    throw ArgumentError("hj_continued_fraction: need r >= 2, 1 <= a <= r-1, gcd(a, r) = 1; got r = " +
                        std::to_string(r) + ", a = " + std::to_string(a));
  std::vector<long long> b;
  long long num = r, den = a;
  while (den != 0) {
    const long long q = (num + den - 1) / den;  // ceil
    b.push_back(q);
    const long long rem = q * den - num;
    num = den;
    den = rem;
  }
  return b;
}

Rational fold_continued_fraction(const std::vector<long long>& b) {
  if (b.empty()) throw ArgumentError("fold_continued_fraction: empty expansion");
  Rational x = b.back();
  for (auto it = b.rbegin() + 1; it != b.rend(); ++it) x = Rational(*it) - 1 / x;
  return x;
}

ChainResolution hj_resolution(const CyclicQuotient& q) {
  if (q.dim() != 2) throw ArgumentError("hj_resolution: needs a two-dimensional quotient, got " + q.label());
  SingularityData data = singularity_data(q);
  const auto b = hj_continued_fraction(q.order(), q.weights()[0]);

  ChainResolution c{q, data, {}, b};
  IntVector prev = unit_vector(2, 1);
  IntVector cur = int_vector({1, 1});
  for (long long bj : b) {
    c.rays.push_back(make_ray(cur, data.gamma));
    IntVector next = cur * Integer(bj) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (cur != data.sigma.generator(0))
    throw ConsistencyError("HJ recurrence for " + q.label() + " ended at " + to_string(cur) +
                           " instead of v");
  return c;
}

bool chain_recurrence_holds(const ChainResolution& c) {
  const std::size_t k = c.rays.size();
  if (k == 0 || c.self_intersections.size() != k) return false;
  auto w = [&](std::size_t j) -> IntVector {
    if (j == 0) return unit_vector(2, 1);
    if (j == k + 1) return c.data.sigma.generator(0);
    return c.rays[j - 1].w;
  };
  for (std::size_t j = 1; j <= k; ++j)
    if (w(j - 1) + w(j + 1) != w(j) * Integer(c.self_intersections[j - 1])) return false;
  return true;
}

FanSubdivision chain_subdivision(const ChainResolution& c) {
  std::vector<IntVector> chain{unit_vector(2, 1)};
  for (const auto& ray : c.rays) chain.push_back(ray.w);
  chain.push_back(c.data.sigma.generator(0));
  std::vector<LatticeCone> cones;
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) cones.emplace_back(std::vector{chain[j], chain[j + 1]});
  return make_subdivision(c.data, std::move(cones));
}

FanSubdivision three_dim_family(long long r, long long a) {
  if (a < 3) throw FamilyConditionError("condition a >= 3 fails: a = " + std::to_string(a));
  if (r <= a + 2)
    throw FamilyConditionError("condition r > a + 2 fails: r = " + std::to_string(r) +
                               ", a + 2 = " + std::to_string(a + 2));
  if ((r + 1) % a != 0)
    throw FamilyConditionError("condition a | r + 1 fails: " + std::to_string(a) +
                               " does not divide " + std::to_string(r + 1));
  if (std::gcd(a, r) != 1)
    throw FamilyConditionError("condition gcd(a, r) = 1 fails");

  SingularityData data = singularity_data(CyclicQuotient(r, {1, a}));
  const IntVector& v = data.sigma.generator(0);
  const IntVector e2 = unit_vector(3, 1);
  const IntVector e3 = unit_vector(3, 2);
  const IntVector w1 = int_vector({1, 1, 1});
  const IntVector w2_scaled = v + e2 + w1;
  IntVector w2 = w2_scaled;
  for (Eigen::Index i = 0; i < 3; ++i) w2(i) /= a;
  if (w2 * Integer(a) != w2_scaled)
    throw ConsistencyError("w_2 is not integral although a | r + 1");

  std::vector<LatticeCone> cones;
  cones.emplace_back(std::vector{w1, e2, e3});
  cones.emplace_back(std::vector{v, w1, e3});
  cones.emplace_back(std::vector{e2, w1, w2});
  cones.emplace_back(std::vector{v, w1, w2});
  cones.emplace_back(std::vector{v, e2, w2});
  return make_subdivision(std::move(data), std::move(cones));
}

namespace {

Integer cross(const IntVector& p, const IntVector& q) { return p(0) * q(1) - p(1) * q(0); }

// Direction d lies strictly inside the counterclockwise arc from s to e (< π).
bool strictly_inside(const IntVector& d, const IntVector& s, const IntVector& e) {
  return cross(s, d) > 0 && cross(d, e) > 0;
}

bool interiors_meet(const LatticeCone& a, const LatticeCone& b) {
  auto arc = [](const LatticeCone& c) {
    IntVector s = c.generator(0), e = c.generator(1);
    if (cross(s, e) < 0) std::swap(s, e);
    return std::pair{s, e};
  };
  const auto [sa, ea] = arc(a);
  const auto [sb, eb] = arc(b);
  const bool a_starts_in_b = sa == sb || strictly_inside(sa, sb, eb);
  const bool b_starts_in_a = strictly_inside(sb, sa, ea);
  return a_starts_in_b || b_starts_in_a;
}

}  // namespace

bool CertificateReport::overall() const {
  for (Verdict v : {unimodularity, covering, interiority, disjointness})
    if (v == Verdict::fail) return false;
  return true;
}

CertificateReport validate_subdivision(const FanSubdivision& s) {
  const auto& sigma = s.parent.sigma;
  const auto& gamma = s.parent.gamma;
  CertificateReport rep;
  rep.expected_volume = abs(sigma.determinant());
  rep.raw_volume_sum = 0;

  bool all_unimodular = true;
  bool volumes_defined = true;
  Rational volume_sum = 0;
  for (const auto& cone : s.cones) {
    ConeCheck cc{cone.generators(), cone.determinant(), is_unimodular(cone), std::nullopt};
    all_unimodular = all_unimodular && cc.unimodular;
    rep.raw_volume_sum += abs(cc.determinant);
    Rational denom = 1;
    bool positive = true;
    for (const auto& g : cone.generators()) {
      const Rational pairing = dot(g, gamma);
      positive = positive && pairing > 0;
      denom *= pairing;
    }
    if (positive) {
      cc.normalized_volume = Rational(abs(cc.determinant)) / denom;
      volume_sum += *cc.normalized_volume;
    } else {
      volumes_defined = false;
    }
    rep.cones.push_back(std::move(cc));
  }
  if (s.cones.empty()) rep.notes.push_back("subdivision has no cones");
  rep.unimodularity = verdict_of(all_unimodular && !s.cones.empty());

  bool all_interior = true;
  for (const auto& ray : s.rays) {
    const bool inside = ray.w.size() == sigma.dim() && contains_in_interior(ray.w, sigma);
    all_interior = all_interior && inside;
    rep.rays.push_back(RayCheck{ray.w, ray.beta, inside});
  }
  rep.interiority = s.rays.empty() ? Verdict::not_applicable : verdict_of(all_interior);

  if (volumes_defined && !s.cones.empty()) {
    rep.volume_sum = volume_sum;
    rep.covering = verdict_of(all_interior && volume_sum == Rational(rep.expected_volume));
  } else {
    rep.covering = Verdict::fail;
    if (!volumes_defined) rep.notes.push_back("a cone generator pairs non-positively with gamma");
  }

  if (sigma.dim() == 2) {
    bool disjoint = true;
    for (std::size_t i = 0; i < s.cones.size(); ++i)
      for (std::size_t j = i + 1; j < s.cones.size(); ++j)
        if (interiors_meet(s.cones[i], s.cones[j])) {
          disjoint = false;
          rep.notes.push_back("cones " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
        }
    rep.disjointness = verdict_of(disjoint);
  } else {
    rep.notes.push_back("pairwise disjointness is only checked for n = 2");
  }
  return rep;
}

std::string to_string(RayClass c) {
  switch (c) {
    case RayClass::theorem_applicable: return "theorem-applicable";
    case RayClass::crepant: return "crepant";
    case RayClass::positive_discrepancy: return "positive-discrepancy";
    case RayClass::non_klt: return "non-klt";
  }
  return "unknown";
}

AngleVerdict angle_condition(const std::vector<ExceptionalRay>& rays) {
  AngleVerdict out;
  bool any_applicable = false, any_crepant = false, any_positive = false, any_nonklt = false;
  for (const auto& ray : rays) {
    out.betas.push_back(ray.beta);
    RayClass c;
    if (ray.beta <= 0) {
      c = RayClass::non_klt;
      any_nonklt = true;
    } else if (ray.beta < 1) {
      c = RayClass::theorem_applicable;
      any_applicable = true;
    } else if (ray.beta == 1) {
      c = RayClass::crepant;
      any_crepant = true;
    } else {
      c = RayClass::positive_discrepancy;
      any_positive = true;
    }
    out.classes.push_back(c);
  }
  if (rays.empty()) {
    out.overall = "no-exceptional-rays";
    out.certificate = Verdict::not_applicable;
  } else if (any_nonklt) {
    out.overall = "non-klt";
    out.certificate = Verdict::fail;
  } else if (any_positive) {
    out.overall = "positive-discrepancy";
    out.certificate = Verdict::fail;
  } else if (any_crepant && any_applicable) {
    out.overall = "mixed";
    out.certificate = Verdict::fail;
  } else if (any_crepant) {
    out.overall = "crepant";
    out.certificate = Verdict::not_applicable;
  } else {
    out.overall = "theorem-applicable";
    out.certificate = Verdict::pass;
  }
  return out;
}

AngleVerdict angle_condition(const FanSubdivision& s) { return angle_condition(s.rays); }
AngleVerdict angle_condition(const ChainResolution& c) { return angle_condition(c.rays); }

Rational beta_as_coefficient_sum(const IntVector& w, const LatticeCone& sigma) {
  const RatVector coords = cone_coordinates(w, sigma);
  Rational sum = 0;
  for (Eigen::Index i = 0; i < coords.size(); ++i) {
    if (coords(i) <= 0)
      throw ArgumentError("beta_as_coefficient_sum: " + to_string(w) + " is not interior to sigma");
    sum += coords(i);
  }
  return sum;
}

}  // namespace conecy
