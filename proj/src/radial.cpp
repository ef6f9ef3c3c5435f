#include "conecy/radial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace conecy::radial {

RadialGrid::RadialGrid(double s_min, double s_max, Eigen::Index m)
    : s_min_(s_min), s_max_(s_max), h_(0.0) {
  if (!(s_min > 0.0) || !(s_max > s_min))
    throw ConfigError("RadialGrid: need 0 < s_min < s_max");
  if (m < 16) throw ConfigError("RadialGrid: need at least 16 nodes");
  h_ = std::log(s_max / s_min) / static_cast<double>(m - 1);
  const double x0 = std::log(s_min);
  s_ = Eigen::VectorXd::NullaryExpr(m, [&](Eigen::Index i) { return std::exp(x0 + h_ * static_cast<double>(i)); });
  s_(0) = s_min;
  s_(m - 1) = s_max;
}

RadialGrid RadialGrid::refined() const { return RadialGrid(s_min_, s_max_, 2 * size() - 1); }

double Bump::operator()(double s) const {
  const double x = (s - center) / half_width;
  if (std::abs(x) >= 1.0) return 0.0;
  const double y = 1.0 - x * x;
  return amplitude * y * y * y;
}

void PathConfig::validate(const RadialGrid& grid) const {
  if (n < 2) throw ConfigError("n must be at least 2");
  if (r_order < 1) throw ConfigError("group order r must be positive");
  if (!(calabi_C > 0.0)) throw ConfigError("Calabi parameter C must be positive");
  if (!(bump.half_width > 0.0)) throw ConfigError("bump half-width must be positive");
  if (!(bump.support_begin() > grid.s_min()) || !(bump.support_end() < grid.s_max()))
    throw ConfigError("bump support [s0 - w, s0 + w] must lie strictly inside (s_min, s_max)");
  if (t_steps < 1) throw ConfigError("t_steps must be at least 1");
  if (!(newton_tol > 0.0)) throw ConfigError("newton_tol must be positive");
  if (!std::isfinite(bump.amplitude)) throw ConfigError("bump amplitude must be finite");
}

RadialProfile calabi_profile(int n, double C, const RadialGrid& grid) {
  Eigen::VectorXd v = grid.nodes().unaryExpr([&](double s) { return std::pow(1.0 + C * std::pow(s, -n), 1.0 / n); });
  return {grid, std::move(v)};
}

RadialProfile ma_density(const RadialProfile& f_prime, int n) {
  const auto& g = f_prime.values;
  const auto& grid = f_prime.grid;
  const Eigen::Index m = g.size();
  const double h = grid.step();
  // Evaluated as (1/n) s^{-n} dQ/dx with Q = (s f')^n, which is algebraically
  // identical but avoids the cancellation in f' + s f'' where f' ~ s^{-1}.
  Eigen::VectorXd q(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (!(g(i) > 0.0))
      throw KahlerViolation("f' is not positive at node " + std::to_string(i), i, grid[i]);
    q(i) = std::pow(grid[i] * g(i), n);
  }
  Eigen::VectorXd d(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    double dq;
    if (i == 0)
      dq = (-3.0 * q(0) + 4.0 * q(1) - q(2)) / (2.0 * h);
    else if (i == m - 1)
      dq = (3.0 * q(m - 1) - 4.0 * q(m - 2) + q(m - 3)) / (2.0 * h);
    else
      dq = (q(i + 1) - q(i - 1)) / (2.0 * h);
    d(i) = dq / (n * std::pow(grid[i], n));
    if (i > 0 && i < m - 1 && !(d(i) > 0.0))
      throw KahlerViolation("Monge-Ampere density is not positive at node " + std::to_string(i), i, grid[i]);
  }
  return {grid, std::move(d)};
}

namespace {

template <typename F>
double simpson(F&& f, double a, double b, int panels) {
  if (b <= a) return 0.0;
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int k = 1; k < panels; ++k) sum += (k % 2 ? 4.0 : 2.0) * f(a + h * k);
  return sum * h / 3.0;
}

constexpr int kOraclePanels = 32;

}  // namespace

RadialProfile quadrature_oracle(const PathConfig& config, const RadialGrid& grid, double t) {
  config.validate(grid);
  const int n = config.n;
  const Bump& bump = config.bump;
  auto integrand = [&](double tau) {
    const double e = std::expm1(t * bump(tau));
    if (!std::isfinite(e)) throw ConfigError("bump integrand is not finite at s = " + std::to_string(tau));
    return n * std::pow(tau, n - 1) * e;
  };
  Eigen::VectorXd g(grid.size());
  double shift = 0.0;
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    if (i > 0) {
      const double a = std::max(grid[i - 1], bump.support_begin());
      const double b = std::min(grid[i], bump.support_end());
      shift += simpson(integrand, a, b, kOraclePanels);
    }
    const double s = grid[i];
    g(i) = std::pow(1.0 + (config.calabi_C + shift) / std::pow(s, n), 1.0 / n);
  }
  return {grid, std::move(g)};
}

namespace {

// Hermite-Simpson collocation of g_x = rho(x) g^{1-n} - g on one cell.
struct Collocation {
  int n;
  double h;

  double phi(double rho, double g) const { return rho * std::pow(g, 1 - n) - g; }
  double dphi(double rho, double g) const { return -(n - 1) * rho * std::pow(g, -n) - 1.0; }

  struct Cell {
    double residual, d_left, d_right;
  };

  Cell cell(double rho_l, double rho_m, double rho_r, double gl, double gr) const {
    const double pl = phi(rho_l, gl), pr = phi(rho_r, gr);
    const double gm = 0.5 * (gl + gr) + h / 8.0 * (pl - pr);
    const double pm = phi(rho_m, gm);
    const double dl = dphi(rho_l, gl), dr = dphi(rho_r, gr), dm = dphi(rho_m, gm);
    Cell c;
    c.residual = gr - gl - h / 6.0 * (pl + 4.0 * pm + pr);
    c.d_left = -1.0 - h / 6.0 * (dl + 4.0 * dm * (0.5 + h / 8.0 * dl));
    c.d_right = 1.0 - h / 6.0 * (dr + 4.0 * dm * (0.5 - h / 8.0 * dr));
    return c;
  }
};

struct Weights {
  Eigen::VectorXd nodes, mids;
};

Weights density_weights(const Bump& bump, const RadialGrid& grid, double t) {
  const Eigen::Index m = grid.size();
  Weights w{Eigen::VectorXd(m), Eigen::VectorXd(m - 1)};
  for (Eigen::Index i = 0; i < m; ++i) w.nodes(i) = std::exp(t * bump(grid[i]));
  for (Eigen::Index i = 0; i + 1 < m; ++i) w.mids(i) = std::exp(t * bump(std::sqrt(grid[i] * grid[i + 1])));
  return w;
}

Eigen::VectorXd cell_residuals(const Collocation& col, const Weights& rho, const Eigen::VectorXd& g) {
  Eigen::VectorXd r(g.size() - 1);
  for (Eigen::Index i = 0; i + 1 < g.size(); ++i)
    r(i) = col.cell(rho.nodes(i), rho.mids(i), rho.nodes(i + 1), g(i), g(i + 1)).residual;
  return r;
}

double scaled_norm(const Eigen::VectorXd& residual, const Eigen::VectorXd& g) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < residual.size(); ++i)
    worst = std::max(worst, std::abs(residual(i)) / std::max(1.0, std::abs(g(i + 1))));
  return worst;
}

// u(s) = -∫_s^{s_max} u'(σ) dσ by the trapezoidal rule in log s.
Eigen::VectorXd integrate_from_outer(const RadialGrid& grid, const Eigen::VectorXd& du) {
  const Eigen::Index m = grid.size();
  Eigen::VectorXd u(m);
  u(m - 1) = 0.0;
  for (Eigen::Index i = m - 2; i >= 0; --i)
    u(i) = u(i + 1) - 0.5 * grid.step() * (du(i) * grid[i] + du(i + 1) * grid[i + 1]);
  return u;
}

}  // namespace

PathSolution newton_continuity_solve(const PathConfig& config, const RadialGrid& grid) {
  config.validate(grid);
  const Eigen::Index m = grid.size();
  const Collocation col{config.n, grid.step()};
  const RadialProfile background = calabi_profile(config.n, config.calabi_C, grid);
  const Eigen::VectorXd defect = cell_residuals(col, density_weights(config.bump, grid, 0.0), background.values);

  PathTrace trace;
  Eigen::VectorXd g = background.values;
  for (int step = 1; step <= config.t_steps; ++step) {
    const double t = static_cast<double>(step) / config.t_steps;
    const Weights rho = density_weights(config.bump, grid, t);
    PathStep record{t, {}, 0.0};

    auto residual_of = [&](const Eigen::VectorXd& y) -> Eigen::VectorXd { return cell_residuals(col, rho, y) - defect; };
    Eigen::VectorXd res = residual_of(g);
    double norm = scaled_norm(res, g);
    record.iterates.push_back({norm, 0.0});

    int iteration = 0;
    while (norm > config.newton_tol) {
      if (++iteration > config.max_newton_iterations) {
        trace.steps.push_back(record);
        throw SolverFailure("Newton did not converge at t = " + std::to_string(t), trace);
      }
      // Lower-bidiagonal Jacobian in the unknowns g_1..g_{m-1}; g_0 is held fixed.
      Eigen::VectorXd delta = Eigen::VectorXd::Zero(m);
      for (Eigen::Index i = 0; i + 1 < m; ++i) {
        const auto c = col.cell(rho.nodes(i), rho.mids(i), rho.nodes(i + 1), g(i), g(i + 1));
        delta(i + 1) = (-res(i) - c.d_left * delta(i)) / c.d_right;
      }

      double lambda = 1.0;
      bool accepted = false;
      for (int halving = 0; halving <= config.max_halvings; ++halving, lambda *= 0.5) {
        const Eigen::VectorXd trial = g + lambda * delta;
        if ((trial.array() <= 0.0).any()) continue;
        const Eigen::VectorXd trial_res = residual_of(trial);
        const double trial_norm = scaled_norm(trial_res, trial);
        if (trial_norm <= config.newton_tol || trial_norm < (1.0 - 1e-4 * lambda) * norm) {
          g = trial;
          res = trial_res;
          norm = trial_norm;
          accepted = true;
          break;
        }
      }
      if (!accepted) {
        trace.steps.push_back(record);
        throw SolverFailure("residual not reduced after " + std::to_string(config.max_halvings) +
                                " halvings at t = " + std::to_string(t),
                            trace);
      }
      record.iterates.push_back({norm, lambda});
    }

    try {
      const RadialProfile density = ma_density({grid, g}, config.n);
      record.min_density = density.values.segment(1, m - 2).minCoeff();
    } catch (const KahlerViolation&) {
      trace.steps.push_back(record);
      throw;
    }
    trace.steps.push_back(std::move(record));
  }

  Eigen::VectorXd du = g - background.values;
  Eigen::VectorXd u = integrate_from_outer(grid, du);
  return PathSolution{{grid, g}, {grid, std::move(du)}, {grid, std::move(u)}, std::move(trace)};
}

namespace {

constexpr double kNonlinearityBound = 1e-3;
constexpr double kNoiseFloor = 1e-11;

struct LineFit {
  double slope, intercept, rms;
};

LineFit least_squares(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  Eigen::MatrixXd A(x.size(), 2);
  A.col(0) = x;
  A.col(1).setOnes();
  const Eigen::Vector2d beta = A.colPivHouseholderQr().solve(y);
  const double rms = std::sqrt((A * beta - y).squaredNorm() / static_cast<double>(x.size()));
  return {beta(0), beta(1), rms};
}

// q is the derivative of the potential deviation; eps bounds the relative size
// of the next-order tail terms.
DecayFit fit_power_tail(const RadialGrid& grid, const Eigen::VectorXd& q, const Eigen::VectorXd& eps,
                        double support_end) {
  const Eigen::Index m = grid.size();
  const double lo_floor = std::max(2.0 * support_end, 10.0 * grid.s_min());
  Eigen::Index lo = m;
  for (Eigen::Index i = m - 1; i >= 0 && grid[i] >= lo_floor && eps(i) <= kNonlinearityBound; --i) lo = i;
  if (lo == m) throw FitUnreliable("no tail window: nonlinear terms dominate up to s_max");

  Eigen::Index hi = lo;
  while (hi + 1 < m && grid[hi + 1] <= grid.s_max() / 10.0 && grid[hi + 1] <= 1e3 * grid[lo] &&
         std::abs(q(hi + 1)) >= kNoiseFloor)
    ++hi;
  const Eigen::Index count = hi - lo + 1;
  if (count < 20 || grid[hi] < 10.0 * grid[lo])
    throw FitUnreliable("tail window [" + std::to_string(grid[lo]) + ", " + std::to_string(grid[hi]) +
                        "] is too short or below the noise floor");

  Eigen::VectorXd log_s(count), log_q(count);
  for (Eigen::Index j = 0; j < count; ++j) {
    if (q(lo + j) == 0.0) throw FitUnreliable("tail vanishes inside the fit window");
    log_s(j) = std::log(grid[lo + j]);
    log_q(j) = std::log(std::abs(q(lo + j)));
  }
  const double p = -least_squares(log_s, log_q).slope;
  if (!(p > 1.0)) throw FitUnreliable("tail does not decay fast enough to define the constant");

  // Y(s) = -∫_s^∞ q: trapezoid on the window plus a power-law closure past it.
  Eigen::VectorXd y(count);
  double acc = q(hi) * grid[hi] / (p - 1.0);
  y(count - 1) = -acc;
  for (Eigen::Index j = count - 2; j >= 0; --j) {
    const Eigen::Index i = lo + j;
    acc += 0.5 * grid.step() * (q(i) * grid[i] + q(i + 1) * grid[i + 1]);
    y(j) = -acc;
  }
  const double sign = y(0) < 0.0 ? -1.0 : 1.0;
  Eigen::VectorXd log_y(count);
  for (Eigen::Index j = 0; j < count; ++j) {
    if (!(sign * y(j) > 0.0)) throw FitUnreliable("potential deviation changes sign inside the fit window");
    log_y(j) = std::log(sign * y(j));
  }
  const LineFit fit = least_squares(log_s, log_y);
  return DecayFit{fit.slope, sign * std::exp(fit.intercept), grid[lo], grid[hi], count, fit.rms};
}

}  // namespace

DecayFit decay_fit(const RadialProfile& f_prime, const PathConfig& config) {
  const Eigen::VectorXd q = f_prime.values.array() - 1.0;
  const Eigen::VectorXd eps = config.n * q.cwiseAbs();
  return fit_power_tail(f_prime.grid, q, eps, config.bump.support_end());
}

DecayFit decay_fit_correction(const RadialProfile& u_prime, const PathConfig& config) {
  const RadialProfile bg = calabi_profile(config.n, config.calabi_C, u_prime.grid);
  const Eigen::VectorXd& q = u_prime.values;
  const Eigen::VectorXd eps = config.n * q.cwiseAbs().cwiseMax((bg.values.array() - 1.0).abs().matrix());
  return fit_power_tail(u_prime.grid, q, eps, config.bump.support_end());
}

double bump_moment(const PathConfig& config) {
  const Bump& bump = config.bump;
  auto integrand = [&](double s) { return -std::pow(s, config.n - 1) * std::expm1(bump(s)); };
  return simpson(integrand, bump.support_begin(), bump.support_end(), 4096);
}

MassIntegral mass_integral(const PathConfig& config) {
  if (config.n < 3) throw ConfigError("mass_integral needs n >= 3: the (n - 2) normalization degenerates at n = 2");
  const int n = config.n;
  const double sphere = 2.0 * std::pow(std::numbers::pi, n) / std::tgamma(static_cast<double>(n));
  const double link = sphere / static_cast<double>(config.r_order);
  // Flat volume element on C^n/Γ in s = |z|^2: (Vol(S^{2n-1})/r) s^{n-1} ds / 2.
  const double integral = link * 0.5 * bump_moment(config);
  return MassIntegral{integral, link, integral / ((n - 2) * link)};
}

double relative_max_deviation(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  if (a.size() != b.size()) throw std::invalid_argument("relative_max_deviation: size mismatch");
  return ((a - b).array().abs() / b.array().abs()).maxCoeff();
}

}  // namespace conecy::radial
