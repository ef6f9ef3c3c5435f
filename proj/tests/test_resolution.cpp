#include "conecy/resolution.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace conecy;

TEST_CASE("continued fractions") {
  CHECK(hj_continued_fraction(7, 3) == std::vector<long long>{3, 2, 2});
  CHECK(hj_continued_fraction(5, 4) == std::vector<long long>{2, 2, 2, 2});
  CHECK(hj_continued_fraction(5, 1) == std::vector<long long>{5});
  for (long long r = 2; r <= 200; ++r)
    for (long long a = 1; a < r; ++a) {
      if (std::gcd(r, a) != 1) continue;
      const auto b = hj_continued_fraction(r, a);
      for (long long x : b) REQUIRE(x >= 2);
      CHECK(fold_continued_fraction(b) == Rational(r, a));
    }
}

TEST_CASE("1/7(1,3) chain") {
  const auto c = hj_resolution(CyclicQuotient(7, {3}));
  REQUIRE(c.rays.size() == 3);
  CHECK(c.rays[0].w == int_vector({1, 1}));
  CHECK(c.rays[1].w == int_vector({3, 2}));
  CHECK(c.rays[2].w == int_vector({5, 3}));
  CHECK(c.rays[0].beta == Rational(4, 7));
  CHECK(c.rays[2].discrepancy == Rational(-1, 7));
  CHECK(chain_recurrence_holds(c));
  const auto v = angle_condition(c);
  CHECK(v.overall == "theorem-applicable");
  CHECK(v.certificate == Verdict::pass);
}

TEST_CASE("rays from the recurrence are the boundary points of the hull") {
  for (long long r = 2; r <= 60; ++r)
    for (long long a = 1; a < r; ++a) {
      if (std::gcd(r, a) != 1) continue;
      const auto c = hj_resolution(CyclicQuotient(r, {a}));
      const auto hull = oracle::hull_boundary_rays(r, a);
      REQUIRE(hull.size() == c.rays.size());
      for (std::size_t j = 0; j < hull.size(); ++j) CHECK(c.rays[j].w == int_vector({hull[j].first, hull[j].second}));
    }
}

TEST_CASE("beta from gamma equals the coefficient sum in sigma's basis") {
  for (long long r = 2; r <= 200; ++r)
    for (long long a = 1; a < r; ++a) {
      if (std::gcd(r, a) != 1) continue;
      const auto c = hj_resolution(CyclicQuotient(r, {a}));
      for (const auto& ray : c.rays) CHECK(ray.beta == beta_as_coefficient_sum(ray.w, c.data.sigma));
    }
  for (long long r = 6; r <= 500; ++r)
    for (long long a = 3; a + 2 < r; ++a) {
      if ((r + 1) % a != 0 || std::gcd(r, a) != 1) continue;
      const auto fan = three_dim_family(r, a);
      for (const auto& ray : fan.rays) CHECK(ray.beta == beta_as_coefficient_sum(ray.w, fan.parent.sigma));
    }
}

TEST_CASE("beta_as_coefficient_sum rejects boundary and exterior points") {
  const auto sigma = sigma_cone(CyclicQuotient(7, {3}));
  CHECK_THROWS_AS(beta_as_coefficient_sum(int_vector({0, 1}), sigma), ArgumentError);
  CHECK_THROWS_AS(beta_as_coefficient_sum(int_vector({7, 4}), sigma), ArgumentError);
  CHECK_THROWS_AS(beta_as_coefficient_sum(int_vector({2, 1}), sigma), ArgumentError);
}

TEST_CASE("chain subdivisions certify") {
  for (long long r = 2; r <= 80; ++r)
    for (long long a = 1; a < r; ++a) {
      if (std::gcd(r, a) != 1) continue;
      const auto rep = validate_subdivision(chain_subdivision(hj_resolution(CyclicQuotient(r, {a}))));
      CHECK(rep.overall());
      REQUIRE(rep.volume_sum);
      CHECK(*rep.volume_sum == r);
    }
}

TEST_CASE("three-dimensional family 1/7(1,1,4)") {
  const auto fan = three_dim_family(7, 4);
  REQUIRE(fan.rays.size() == 2);
  CHECK(fan.rays[0].w == int_vector({1, 1, 1}));
  CHECK(fan.rays[1].w == int_vector({2, 2, 1}));
  CHECK(fan.rays[0].beta == Rational(6, 7));
  CHECK(fan.rays[1].beta == Rational(5, 7));
  const auto rep = validate_subdivision(fan);
  CHECK(rep.overall());
  CHECK(rep.cones.size() == 5);
  CHECK(*rep.volume_sum == 7);
  // plain determinants undercount: the first split is not unimodular-normalized
  CHECK(rep.raw_volume_sum == 5);
  CHECK(angle_condition(fan).certificate == Verdict::pass);
}

TEST_CASE("family conditions") {
  CHECK_THROWS_AS(three_dim_family(7, 3), FamilyConditionError);   // 3 does not divide 8
  CHECK_THROWS_AS(three_dim_family(5, 3), FamilyConditionError);   // r <= a + 2
  CHECK_THROWS_AS(three_dim_family(11, 2), FamilyConditionError);  // a < 3
  CHECK_NOTHROW(three_dim_family(11, 3));
  CHECK_NOTHROW(three_dim_family(11, 4));
}

TEST_CASE("unsubdivided sigma and a bad fan") {
  const auto data = singularity_data(CyclicQuotient(7, {1, 4}));
  const auto whole = validate_subdivision(make_subdivision(data, {data.sigma}));
  CHECK(whole.unimodularity == Verdict::fail);
  CHECK(whole.covering == Verdict::pass);
  CHECK_FALSE(whole.overall());
  CHECK(angle_condition(make_subdivision(data, {data.sigma})).overall == "no-exceptional-rays");

  const auto d2 = singularity_data(CyclicQuotient(7, {3}));
  const LatticeCone left({int_vector({0, 1}), int_vector({2, 1})});
  const LatticeCone right({int_vector({2, 1}), int_vector({7, 4})});
  const auto rep = validate_subdivision(make_subdivision(d2, {left, right}));
  CHECK(rep.interiority == Verdict::fail);
  CHECK(rep.covering == Verdict::fail);

  // the same cone twice
  const LatticeCone a({int_vector({0, 1}), int_vector({1, 1})});
  const auto overlap = validate_subdivision(make_subdivision(d2, {a, a}));
  CHECK(overlap.disjointness == Verdict::fail);
}

TEST_CASE("angle classes") {
  const auto crepant = angle_condition(hj_resolution(CyclicQuotient(5, {4})));
  CHECK(crepant.overall == "crepant");
  CHECK(crepant.certificate == Verdict::not_applicable);

  const RatVector g = gamma(CyclicQuotient(7, {3}));
  const auto mixed = angle_condition({make_ray(int_vector({1, 1}), g), make_ray(int_vector({7, 5}), g)});
  CHECK(mixed.certificate == Verdict::fail);
}
