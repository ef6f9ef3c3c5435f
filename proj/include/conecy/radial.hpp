#pragma once

// Radial (cohomogeneity-one) reduction of the Calabi-Yau Monge-Ampère
// equation on the total space of O(-r). The unknown is f'(s), s = |z|^2, on a
// grid uniform in x = log s. The Monge-Ampère density relative to the flat
// cone is
//
//     D[f'] = (f')^{n-1} (f' + s f'') = (1/n) s^{1-n} d/ds (s^n (f')^n).

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace conecy::radial {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class KahlerViolation : public std::runtime_error {
 public:
  KahlerViolation(const std::string& what, Eigen::Index node, double s)
      : std::runtime_error(what), node(node), s(s) {}
  Eigen::Index node;
  double s;
};

class FitUnreliable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nodes s_i = s_min (s_max/s_min)^{i/(m-1)}.
class RadialGrid {
 public:
  RadialGrid(double s_min, double s_max, Eigen::Index m);

  double s_min() const { return s_min_; }
  double s_max() const { return s_max_; }
  Eigen::Index size() const { return s_.size(); }
  /// Spacing in x = log s.
  double step() const { return h_; }
  const Eigen::VectorXd& nodes() const { return s_; }
  double operator[](Eigen::Index i) const { return s_(i); }

  /// Same span, 2m - 1 nodes (every old node kept).
  RadialGrid refined() const;

 private:
  double s_min_, s_max_, h_;
  Eigen::VectorXd s_;
};

struct RadialProfile {
  RadialGrid grid;
  Eigen::VectorXd values;
};

/// f_0(s) = c (1 - ((s - s_0)/w)^2)^3 on |s - s_0| <= w, zero elsewhere.
struct Bump {
  double center = 5.0;
  double half_width = 2.0;
  double amplitude = 0.0;

  double operator()(double s) const;
  double support_begin() const { return center - half_width; }
  double support_end() const { return center + half_width; }
};

struct PathConfig {
  int n = 3;
  long long r_order = 3;
  double calabi_C = 1.0;
  Bump bump;
  int t_steps = 10;
  double newton_tol = 1e-12;
  int max_newton_iterations = 50;
  int max_halvings = 30;

  /// Throws ConfigError unless the bump support sits strictly inside the grid
  /// and the scalar parameters are in range.
  void validate(const RadialGrid& grid) const;
};

/// f'(s) = (1 + C s^{-n})^{1/n}, the Ricci-flat Calabi ansatz.
RadialProfile calabi_profile(int n, double C, const RadialGrid& grid);

/// (f')^{n-1}(f' + s f''), computed in the conservative form
/// (1/n) s^{-n} d(s f')^n / d log s by centered differences (second-order
/// one-sided at the two ends). Throws KahlerViolation on a
/// non-positive f' or a non-positive density at an interior node.
RadialProfile ma_density(const RadialProfile& f_prime, int n);

/// Ground truth from the first integral s^n (f')^n = C + n ∫_0^s τ^{n-1} e^{t f_0(τ)} dτ,
/// with the bump part integrated by composite Simpson on sub-panels clipped to
/// the bump support.
RadialProfile quadrature_oracle(const PathConfig& config, const RadialGrid& grid, double t = 1.0);

struct NewtonIterate {
  double residual;
  double step_length;
};

struct PathStep {
  double t;
  std::vector<NewtonIterate> iterates;
  /// Minimum of ma_density over interior nodes after the step converged.
  double min_density;
};

struct PathTrace {
  std::vector<PathStep> steps;
};

class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(const std::string& what, PathTrace trace)
      : std::runtime_error(what), trace(std::move(trace)) {}
  PathTrace trace;
};

struct PathSolution {
  /// f' of the Ricci-flat metric at t = 1.
  RadialProfile f_prime;
  /// u' = f' - f'_background.
  RadialProfile u_prime;
  /// u normalized by u(s_max) = 0.
  RadialProfile u;
  PathTrace trace;
};

/// Continuity path D[f'_bg + u_t'] = e^{t f_0} D[f'_bg], t = 0 -> 1 in
/// config.t_steps increments, each step a damped Newton solve warm-started
/// from the previous one. Inner condition u'(s_min) = 0; u is recovered with
/// u(s_max) = 0.
///
/// The discretization is Hermite-Simpson collocation of the first-order
/// equation for f' (fourth order), with the discrete defect of the exact
/// background subtracted so that f_0 = 0 reproduces the background exactly.
PathSolution newton_continuity_solve(const PathConfig& config, const RadialGrid& grid);

struct DecayFit {
  /// Power of s in the tail of the potential deviation.
  double exponent;
  double coefficient;
  double window_begin;
  double window_end;
  Eigen::Index points;
  /// RMS of the log-space regression residuals.
  double residual;
};

/// Fits f(s) - s - const = coefficient · s^exponent over a tail window beyond
/// the bump support, the constant being the limit at infinity.
DecayFit decay_fit(const RadialProfile& f_prime, const PathConfig& config);

/// Same fit for the correction potential u - u(∞) given u'.
DecayFit decay_fit_correction(const RadialProfile& u_prime, const PathConfig& config);

struct MassIntegral {
  /// ∫_X (1 - e^{f_0}) dV_{g_0} over the radial background.
  double integral;
  /// Vol(S^{2n-1}/Γ) = 2π^n / ((n-1)! r).
  double link_volume;
  /// integral / ((n - 2) · link_volume).
  double A;
};

/// Throws ConfigError for n = 2, where the normalization degenerates.
MassIntegral mass_integral(const PathConfig& config);

/// ∫ s^{n-1} (1 - e^{f_0(s)}) ds; the tail shift of s^n((f')^n - 1) is -n times this.
double bump_moment(const PathConfig& config);

/// max_i |a_i - b_i| / |b_i|.
double relative_max_deviation(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

}  // namespace conecy::radial
