#include "conecy/quotient.hpp"

#include <doctest.h>

#include <numeric>

using namespace conecy;

TEST_CASE("gamma pairs to one with every generator of sigma") {
  for (long long r = 2; r <= 200; ++r)
    for (long long a = 1; a < r; ++a) {
      if (std::gcd(r, a) != 1) continue;
      const CyclicQuotient q(r, {a});
      const auto sigma = sigma_cone(q);
      const RatVector g = gamma(q);
      for (const auto& gen : sigma.generators()) CHECK(dot(gen, g) == 1);
      CHECK(abs(sigma.determinant()) == r);
      CHECK(r % gorenstein_index(q) == 0);
    }
}

TEST_CASE("three-dimensional quotients") {
  for (long long r = 2; r <= 40; ++r)
    for (long long a = 1; a < r; ++a)
      for (long long b = 1; b < r; ++b) {
        if (std::gcd(r, a) != 1 || std::gcd(r, b) != 1) continue;
        const CyclicQuotient q(r, {a, b});
        const auto sigma = sigma_cone(q);
        const RatVector g = gamma(q);
        for (const auto& gen : sigma.generators()) REQUIRE(dot(gen, g) == 1);
        CHECK(abs(sigma.determinant()) == r);
        CHECK(r % gorenstein_index(q) == 0);
      }
}

TEST_CASE("known singularity data") {
  const auto d = singularity_data(CyclicQuotient(7, {3}));
  CHECK(d.gamma(0) == Rational(-3, 7));
  CHECK(d.gamma(1) == 1);
  CHECK(d.gorenstein_index == 7);
  CHECK(d.volume_density == Rational(1, 7));
  CHECK(d.quotient.label() == "1/7(1,3)");

  // 1/r(1,r-1) is Gorenstein
  for (long long r = 2; r <= 30; ++r) CHECK(gorenstein_index(CyclicQuotient(r, {r - 1})) == 1);
  // 1/3(1,1,1) as well
  CHECK(gorenstein_index(CyclicQuotient(3, {1, 1})) == 1);
}

TEST_CASE("constructor rejects bad input") {
  CHECK_THROWS_AS(CyclicQuotient(1, {1}), ArgumentError);
  CHECK_THROWS_AS(CyclicQuotient(4, {2}), ArgumentError);
  CHECK_THROWS_AS(CyclicQuotient(5, {0}), ArgumentError);
  CHECK_THROWS_AS(CyclicQuotient(5, {5}), ArgumentError);
  CHECK_THROWS_AS(CyclicQuotient(5, {}), ArgumentError);
  CHECK_THROWS_AS(CyclicQuotient(6, {1, 3}), ArgumentError);
}
