// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "conecy/radial.hpp"
#include "conecy/resolution.hpp"
#include "conecy/surface.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace conecy;
namespace rd = conecy::radial;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

Rational Q(long long p, long long q = 1) { return Rational(p, q); }

std::vector<Rational> betas_of(const ChainResolution& c) {
  std::vector<Rational> b;
  for (const auto& ray : c.rays) b.push_back(ray.beta);
  return b;
}

Outcome example_2d() {
  const auto c = hj_resolution(CyclicQuotient(7, {3}));
  std::vector<IntVector> rays;
  for (const auto& ray : c.rays) rays.push_back(ray.w);
  const bool b_ok = c.self_intersections == std::vector<long long>{3, 2, 2};
  const bool w_ok = rays == std::vector<IntVector>{int_vector({1, 1}), int_vector({3, 2}), int_vector({5, 3})};
  const bool beta_ok = betas_of(c) == std::vector<Rational>{Q(4, 7), Q(5, 7), Q(6, 7)};
  std::ostringstream os;
  os << "b=" << (b_ok ? "ok" : "MISMATCH") << " rays=" << (w_ok ? "ok" : "MISMATCH") << " beta=";
  for (const auto& b : betas_of(c)) os << to_string(b) << ' ';
  return {b_ok && w_ok && beta_ok, os.str()};
}

Outcome example_3d() {
  const auto fan = three_dim_family(7, 4);
  const auto report = validate_subdivision(fan);
  bool betas = fan.rays.size() == 2 && fan.rays[0].beta == Q(6, 7) && fan.rays[1].beta == Q(5, 7);
  bool unimodular = fan.cones.size() == 5;
  for (const auto& c : report.cones) unimodular = unimodular && c.unimodular;
  const bool volume = report.volume_sum && *report.volume_sum == 7 && report.covering == Verdict::pass;
  std::ostringstream os;
  os << "beta=";
  for (const auto& r : fan.rays) os << to_string(r.beta) << ' ';
  os << "cones=" << fan.cones.size() << " volume_sum=" << (report.volume_sum ? to_string(*report.volume_sum) : "n/a");
  return {betas && unimodular && volume, os.str()};
}

Outcome calabi_series() {
  int bad = 0;
  for (long long r = 2; r <= 50; ++r) {
    const auto c = hj_resolution(CyclicQuotient(r, {1}));
    if (c.rays.size() != 1 || c.rays[0].w != int_vector({1, 1}) || c.rays[0].beta != Q(2, r)) ++bad;
  }
  return {bad == 0, "49 quotients, " + std::to_string(bad) + " mismatches"};
}

Outcome structural_sweep() {
  long long chains = 0, failures = 0;
  std::string first;
  for (long long r = 2; r <= 200; ++r)
    for (long long a = 1; a < r; ++a) {
      if (std::gcd(r, a) != 1) continue;
      ++chains;
      const auto c = hj_resolution(CyclicQuotient(r, {a}));
      const auto m = intersection_matrix(c);
      bool klt = true, any_below_one = false;
      for (const auto& ray : c.rays) {
        klt = klt && ray.beta > 0 && ray.beta <= 1;
        any_below_one = any_below_one || ray.beta < 1;
      }
      bool density = true;
      if (any_below_one)
        density = volume_density_inequality(c.rays, chain_strata(c.rays.size()), Q(1, r)).overall;
      const bool ok = chain_recurrence_holds(c) && fold_continued_fraction(c.self_intersections) == Q(r, a) &&
                      m.negative_definite && m.inverse_nonpositive && adjunction_check(c) && klt && density;
      if (!ok) {
        ++failures;
        if (first.empty()) first = " first=" + c.quotient.label();
      }
    }
  return {failures == 0, std::to_string(chains) + " chains, " + std::to_string(failures) + " failures" + first};
}

Outcome hull_equivalence() {
  long long checked = 0, bad = 0;
  for (long long r = 2; r <= 60; ++r)
    for (long long a = 1; a < r; ++a) {
      if (std::gcd(r, a) != 1) continue;
      ++checked;
      const auto c = hj_resolution(CyclicQuotient(r, {a}));
      const auto hull = oracle::hull_boundary_rays(r, a);
      bool same = hull.size() == c.rays.size();
      for (std::size_t j = 0; same && j < hull.size(); ++j)
        same = c.rays[j].w == int_vector({hull[j].first, hull[j].second});
      if (!same) ++bad;
    }
  return {bad == 0, std::to_string(checked) + " quotients, " + std::to_string(bad) + " mismatches"};
}

// Term-by-term evaluation with betas from the pairing against gamma = ((1 + a - r)/r, 1).
Rational energy_by_hand(long long r, long long a, const std::vector<IntVector>& rays) {
  std::vector<Rational> beta;
  for (const auto& w : rays) beta.push_back(Rational(Integer(w(0)) * (1 + a - r), r) + Rational(w(1)));
  const std::size_t k = beta.size();
  Rational e = Rational(static_cast<long long>(k + 1));
  for (std::size_t j = 0; j < k; ++j) {
    const long long punctures = k == 1 ? 0 : (j == 0 || j + 1 == k ? 1 : 2);
    e += (beta[j] - 1) * (2 - punctures);
  }
  for (std::size_t j = 0; j + 1 < k; ++j) e += beta[j] * beta[j + 1] - 1;
  return e - Q(1, r);
}

Outcome energy_values() {
  bool ok = energy(hj_resolution(CyclicQuotient(2, {1}))).total == Q(3, 2);
  for (long long r = 2; r <= 50; ++r) ok = ok && energy(hj_resolution(CyclicQuotient(r, {r - 1}))).total == Q(r * r - 1, r);
  const auto c = hj_resolution(CyclicQuotient(7, {3}));
  const Rational lib = energy(c).total;
  const Rational hand = energy_by_hand(7, 3, {int_vector({1, 1}), int_vector({3, 2}), int_vector({5, 3})});
  ok = ok && lib == hand && hand == Q(113, 49);
  return {ok, "E(1/7(1,3)) library=" + to_string(lib) + " by-hand=" + to_string(hand)};
}

rd::PathConfig radial_config(int n, double C, double c) {
  rd::PathConfig cfg;
  cfg.n = n;
  cfg.r_order = n;
  cfg.calabi_C = C;
  cfg.bump.amplitude = c;
  return cfg;
}

constexpr double kSMin = 1e-2, kSMax = 1e4;

struct RadialState {
  bool ran = false;
  bool solves_ok = true;
  bool oracle_ok = true;
  bool decay_ok = true;
  int solves = 0;
  double worst_deviation = 0.0, worst_contraction = INFINITY, worst_exponent_error = 0.0;
  std::string failure;
};

RadialState& radial_state() {
  static RadialState state;
  return state;
}

bool check_exponent(RadialState& st, const rd::PathSolution& sol, const rd::PathConfig& cfg) {
  try {
    const auto fit = rd::decay_fit(sol.f_prime, cfg);
    const double rel = std::abs(fit.exponent - (1 - cfg.n)) / (cfg.n - 1);
    st.worst_exponent_error = std::max(st.worst_exponent_error, rel);
    return rel <= 0.01;
  } catch (const rd::FitUnreliable& e) {
    st.failure = e.what();
    return false;
  }
}

Outcome solver_oracle() {
  auto& st = radial_state();
  st.ran = true;
  const rd::RadialGrid coarse(kSMin, kSMax, 1024), fine(kSMin, kSMax, 2048);
  for (int n : {2, 3, 4})
    for (double C : {0.5, 1.0, 2.0})
      for (double c : {-0.25, 0.1}) {
        const auto cfg = radial_config(n, C, c);
        try {
          const auto s1 = rd::newton_continuity_solve(cfg, coarse);
          const auto s2 = rd::newton_continuity_solve(cfg, fine);
          st.solves += 2;
          const double d1 = rd::relative_max_deviation(s1.f_prime.values, rd::quadrature_oracle(cfg, coarse).values);
          const double d2 = rd::relative_max_deviation(s2.f_prime.values, rd::quadrature_oracle(cfg, fine).values);
          st.worst_deviation = std::max(st.worst_deviation, d2);
          st.worst_contraction = std::min(st.worst_contraction, d1 / d2);
          if (!(d2 <= 1e-6 && d1 / d2 >= 3.5)) st.oracle_ok = false;
          if (!check_exponent(st, s1, cfg) || !check_exponent(st, s2, cfg)) st.decay_ok = false;
        } catch (const std::exception& e) {
          st.solves_ok = st.oracle_ok = false;
          st.failure = e.what();
        }
      }
  std::ostringstream os;
  os << "18 configs, max deviation " << st.worst_deviation << ", min contraction " << st.worst_contraction;
  if (!st.failure.empty()) os << " (" << st.failure << ")";
  return {st.solves_ok && st.oracle_ok, os.str()};
}

Outcome decay_reproduction() {
  auto& st = radial_state();
  if (!st.ran) solver_oracle();
  const auto cfg = radial_config(3, 1.0, 0.0);
  const rd::RadialGrid grid(kSMin, kSMax, 2048);
  double coefficient = NAN;
  bool calabi_ok = false;
  try {
    const auto sol = rd::newton_continuity_solve(cfg, grid);
    const bool exponent_ok = check_exponent(st, sol, cfg);
    coefficient = rd::decay_fit(sol.f_prime, cfg).coefficient;
    calabi_ok = exponent_ok && std::abs(coefficient / (-1.0 / 6.0) - 1.0) <= 0.01;
  } catch (const std::exception& e) {
    st.failure = e.what();
  }
  std::ostringstream os;
  os << "max exponent error " << st.worst_exponent_error << ", Calabi n=3 coefficient " << coefficient;
  return {st.decay_ok && calabi_ok, os.str()};
}

Outcome mass_proportionality() {
  const rd::RadialGrid grid(kSMin, kSMax, 2048);
  std::vector<double> ratios;
  std::ostringstream os;
  os << "ratios";
  for (double c : {-0.5, -0.25, -0.1}) {
    const auto cfg = radial_config(3, 1.0, c);
    try {
      const auto sol = rd::newton_continuity_solve(cfg, grid);
      const auto fit = rd::decay_fit_correction(sol.u_prime, cfg);
      ratios.push_back(fit.coefficient / rd::mass_integral(cfg).A);
      os << ' ' << ratios.back();
    } catch (const std::exception& e) {
      return {false, e.what()};
    }
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  const double mean = std::accumulate(ratios.begin(), ratios.end(), 0.0) / ratios.size();
  const double spread = (*hi - *lo) / std::abs(mean);
  os << ", spread " << spread;
  return {spread <= 0.02, os.str()};
}

// Ricci-flatness along the path: density ratio reproduces e^{f_0} and stays positive.
Outcome existence_surrogate() {
  const auto cfg = radial_config(3, 1.0, -0.25);
  const rd::RadialGrid grid(kSMin, kSMax, 2048);
  try {
    const auto sol = rd::newton_continuity_solve(cfg, grid);
    double min_density = INFINITY;
    for (const auto& s : sol.trace.steps) min_density = std::min(min_density, s.min_density);
    const auto d = rd::ma_density(sol.f_prime, cfg.n).values;
    const auto d0 = rd::ma_density(rd::calabi_profile(cfg.n, cfg.calabi_C, grid), cfg.n).values;
    double worst = 0.0;
    for (Eigen::Index i = 1; i + 1 < grid.size(); ++i)
      worst = std::max(worst, std::abs(d(i) / d0(i) / std::exp(cfg.bump(grid[i])) - 1.0));
    const auto& st = radial_state();
    const bool ok = sol.trace.steps.size() == static_cast<std::size_t>(cfg.t_steps) && min_density > 0.0 &&
                    worst <= 1e-3 && st.solves_ok && st.oracle_ok && st.decay_ok;
    std::ostringstream os;
    os << "path steps " << sol.trace.steps.size() << ", min density " << min_density
       << ", volume-form error " << worst << ", criteria 7-9 " << (st.solves_ok && st.oracle_ok && st.decay_ok ? "hold" : "fail");
    return {ok, os.str()};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "2D example 1/7(1,3)", 1.0, example_2d},
      {2, "3D example 1/7(1,1,4)", 1.0, example_3d},
      {3, "Calabi-series angles", 1.0, calabi_series},
      {4, "structural sweep r <= 200", 30.0, structural_sweep},
      {5, "hull-oracle equivalence r <= 60", 60.0, hull_equivalence},
      {6, "energy values", 1.0, energy_values},
      {7, "solver-oracle equivalence", 120.0, solver_oracle},
      {8, "decay reproduction", 120.0, decay_reproduction},
      {9, "mass-formula proportionality", 60.0, mass_proportionality},
      {10, "existence surrogate", 60.0, existence_surrogate},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.budget_seconds;
    const bool pass = out.ok && in_time;
    if (!pass) ++failed;
    std::printf("[%s] criterion %2d  %-34s %7.3fs  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                out.detail.c_str(), in_time ? "" : " (over time budget)");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
