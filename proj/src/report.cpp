#include "conecy/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>

namespace conecy {

namespace {

constexpr const char* kVersion = "0.1.0";

Json header(const std::string& command) {
  return Json{{"tool", "conecy"}, {"version", kVersion}, {"command", command}};
}

long long small(const Integer& z) { return z.convert_to<long long>(); }

Json json_vector(const IntVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(small(v(i)));
  return out;
}

Json json_rationals(const RatVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

Json json_rationals(const std::vector<Rational>& v) { return Json(to_strings(v)); }

Json json_cone(const std::vector<IntVector>& gens) {
  Json out = Json::array();
  for (const auto& g : gens) out.push_back(json_vector(g));
  return out;
}

Json quotient_echo(const CyclicQuotient& q) {
  Json weights = Json::array({1});
  for (long long a : q.weights()) weights.push_back(a);
  return Json{{"singularity", q.label()}, {"r", q.order()}, {"weights", weights}};
}

Json singularity_values(const SingularityData& d) {
  return Json{{"sigma", json_cone(d.sigma.generators())},
              {"gamma", json_rationals(d.gamma)},
              {"gorenstein_index", small(d.gorenstein_index)},
              {"volume_density", to_string(d.volume_density)}};
}

Json ray_list(const std::vector<ExceptionalRay>& rays) {
  Json out = Json::array();
  for (const auto& r : rays) out.push_back(json_vector(r.w));
  return out;
}

std::vector<Rational> betas(const std::vector<ExceptionalRay>& rays) {
  std::vector<Rational> out;
  for (const auto& r : rays) out.push_back(r.beta);
  return out;
}

std::vector<Rational> discrepancies(const std::vector<ExceptionalRay>& rays) {
  std::vector<Rational> out;
  for (const auto& r : rays) out.push_back(r.discrepancy);
  return out;
}

Json angle_certificate(const AngleVerdict& v) {
  Json classes = Json::array();
  for (auto c : v.classes) classes.push_back(to_string(c));
  return certificate(v.certificate, Json{{"classification", v.overall},
                                         {"beta", json_rationals(v.betas)},
                                         {"ray_classes", classes}});
}

void add_subdivision_certificates(Json& certs, const CertificateReport& rep) {
  Json dets = Json::array();
  Json volumes = Json::array();
  for (const auto& c : rep.cones) {
    dets.push_back(small(c.determinant));
    volumes.push_back(c.normalized_volume ? Json(to_string(*c.normalized_volume)) : Json(nullptr));
  }
  certs["unimodularity"] = certificate(rep.unimodularity, Json{{"determinants", dets}});
  certs["covering"] = certificate(
      rep.covering, Json{{"volume_sum", rep.volume_sum ? Json(to_string(*rep.volume_sum)) : Json(nullptr)},
                         {"expected", small(rep.expected_volume)},
                         {"normalized_volumes", volumes},
                         {"raw_determinant_sum", small(rep.raw_volume_sum)}});
  Json interior = Json::array();
  for (const auto& r : rep.rays)
    interior.push_back(Json{{"ray", json_vector(r.w)}, {"beta", to_string(r.beta)}, {"interior", r.interior}});
  certs["interiority"] = certificate(rep.interiority, Json{{"rays", interior}});
  if (rep.disjointness != Verdict::not_applicable) certs["disjointness"] = certificate(rep.disjointness, Json::object());
}

Json strata_certificate(const StrataReport& rep) {
  Json strata = Json::array();
  for (const auto& s : rep.strata) {
    Json comps = Json::array();
    for (auto j : s.components) comps.push_back(j + 1);
    strata.push_back(Json{{"components", comps}, {"product", to_string(s.product)}, {"exceeds", s.exceeds}});
  }
  return certificate(verdict_of(rep.overall), Json{{"nu", to_string(rep.nu)}, {"strata", strata}});
}

int exit_code_of(const Json& certs) {
  for (const auto& [name, cert] : certs.items())
    if (cert.at("verdict") == "fail") return kCertificateFailure;
  return kPass;
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(json_vector(m.row(i).transpose()));
  return out;
}

Json matrix_json(const RatMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(json_rationals(RatVector(m.row(i).transpose())));
  return out;
}

struct ChainOutcome {
  Json values;
  Json certificates;
  Json notes = Json::array();
};

ChainOutcome analyze_chain(const ChainResolution& chain) {
  const auto& d = chain.data;
  const auto angle = angle_condition(chain);
  const auto im = intersection_matrix(chain);
  const auto e = energy(chain);
  const auto strata = volume_density_inequality(chain.rays, chain_strata(chain.rays.size()), d.volume_density);
  const auto subdivision = validate_subdivision(chain_subdivision(chain));
  const Rational folded = fold_continued_fraction(chain.self_intersections);
  const Rational target(chain.quotient.order(), chain.quotient.weights()[0]);

  ChainOutcome out;
  out.values = singularity_values(d);
  out.values["continued_fraction"] = chain.self_intersections;
  out.values["b"] = chain.self_intersections;
  out.values["rays"] = ray_list(chain.rays);
  out.values["beta"] = json_rationals(betas(chain.rays));
  out.values["discrepancies"] = json_rationals(discrepancies(chain.rays));
  out.values["intersection_matrix"] = matrix_json(im.entries);
  out.values["intersection_inverse"] = im.negative_definite ? matrix_json(im.inverse) : Json(nullptr);
  out.values["energy"] = Json{{"chi_X", e.chi_X},
                              {"curve_terms", json_rationals(e.curve_terms)},
                              {"node_terms", json_rationals(e.node_terms)},
                              {"group_term", to_string(e.group_term)},
                              {"total", to_string(e.total)},
                              {"conditional", e.conditional}};

  Json certs = Json::object();
  certs["angle_condition"] = angle_certificate(angle);
  add_subdivision_certificates(certs, subdivision);
  certs["recurrence"] = certificate(verdict_of(chain_recurrence_holds(chain)), Json::object());
  certs["continued_fraction"] =
      certificate(verdict_of(folded == target), Json{{"folded", to_string(folded)}, {"target", to_string(target)}});
  Json minors = Json::array();
  for (const auto& m : im.leading_minors) minors.push_back(small(m));
  certs["negative_definite"] = certificate(verdict_of(im.negative_definite && im.inverse_nonpositive),
                                           Json{{"leading_minors_of_negative", minors},
                                                {"inverse_nonpositive", im.inverse_nonpositive}});
  certs["adjunction"] = certificate(verdict_of(adjunction_check(chain)),
                                    Json{{"canonical_degrees", json_rationals(canonical_degrees(chain))}});
  certs["volume_density"] = strata_certificate(strata);
  out.certificates = std::move(certs);

  out.notes.push_back("gamma computed by closed formula and verified by exact pairing with every generator of sigma");
  if (chain.quotient.order() == 7 && chain.quotient.weights()[0] == 3)
    out.notes.push_back("gamma = (-3/7, 1); the value (-3/4, 1) sometimes quoted for 1/7(1,3) fails the pairing check");
  if (e.conditional)
    out.notes.push_back("energy value is conditional: the boundary limit at normal-crossing points is not established");
  if (angle.overall == "crepant")
    out.notes.push_back("crepant resolution: every beta = 1, smooth ALE hyperkaehler case");
  return out;
}

}  // namespace

Json certificate(Verdict verdict, Json witness) {
  Json out{{"verdict", to_string(verdict)}};
  for (auto& [key, value] : witness.items()) out[key] = value;
  return out;
}

Json real(double value) {
  if (!std::isfinite(value)) return Json(nullptr);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return Json(std::strtod(buf, nullptr));
}

std::string render(const Json& body) { return body.dump(2) + "\n"; }

RunReport usage_error_report(const std::string& command, Json input, const std::string& message) {
  return RunReport{Json{{"header", header(command)}, {"input", std::move(input)}, {"error", message}}, kUsageError};
}

RunReport resolve2d_report(long long r, long long a) {
  Json input{{"r", r}, {"a", a}};
  std::optional<CyclicQuotient> q;
  try {
    q.emplace(r, std::vector<long long>{a});
  } catch (const ArgumentError& e) {
    return usage_error_report("resolve2d", input, e.what());
  }
  const auto outcome = analyze_chain(hj_resolution(*q));
  RunReport rep;
  rep.body = Json{{"header", header("resolve2d")},
                  {"input", quotient_echo(*q)},
                  {"values", outcome.values},
                  {"certificates", outcome.certificates},
                  {"notes", outcome.notes}};
  rep.exit_code = exit_code_of(outcome.certificates);
  return rep;
}

RunReport resolve3d_report(long long r, long long a) {
  Json input{{"r", r}, {"a", a}};
  std::optional<FanSubdivision> fan;
  try {
    fan.emplace(three_dim_family(r, a));
  } catch (const ArgumentError& e) {
    return usage_error_report("resolve3d", input, e.what());
  }
  const auto rep = validate_subdivision(*fan);
  const auto angle = angle_condition(*fan);
  const auto strata = volume_density_inequality(fan->rays, family_strata(), fan->parent.volume_density);

  Json values = singularity_values(fan->parent);
  Json cones = Json::array();
  for (const auto& c : fan->cones) cones.push_back(json_cone(c.generators()));
  values["cones"] = cones;
  values["rays"] = ray_list(fan->rays);
  values["beta"] = json_rationals(betas(fan->rays));
  values["discrepancies"] = json_rationals(discrepancies(fan->rays));
  values["intermediate_determinant"] =
      small(abs(det({fan->parent.sigma.generator(0), unit_vector(3, 1), fan->rays[0].w})));

  Json certs = Json::object();
  certs["angle_condition"] = angle_certificate(angle);
  add_subdivision_certificates(certs, rep);
  certs["volume_density"] = strata_certificate(strata);

  Json notes = Json::array();
  for (const auto& n : rep.notes) notes.push_back(n);
  notes.push_back("five cones certified unimodular by exact determinants; covering by gamma-normalized volume count");

  RunReport out;
  out.body = Json{{"header", header("resolve3d")},
                  {"input", quotient_echo(fan->parent.quotient)},
                  {"values", values},
                  {"certificates", certs},
                  {"notes", notes}};
  out.exit_code = exit_code_of(certs);
  return out;
}

RunReport check_subdivision_report(const SubdivisionFile& file) {
  const SingularityData data = singularity_data(*file.quotient);
  std::vector<LatticeCone> cones;
  for (std::size_t i = 0; i < file.cones.size(); ++i) {
    try {
      cones.emplace_back(file.cones[i]);
    } catch (const ArgumentError& e) {
      return usage_error_report("check-subdivision", quotient_echo(*file.quotient),
                                "cone " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  const FanSubdivision fan = make_subdivision(data, std::move(cones));
  const auto rep = validate_subdivision(fan);
  const auto angle = angle_condition(fan);

  Json values = singularity_values(data);
  values["rays"] = ray_list(fan.rays);
  values["beta"] = json_rationals(betas(fan.rays));
  Json certs = Json::object();
  certs["angle_condition"] = angle_certificate(angle);
  add_subdivision_certificates(certs, rep);

  RunReport out;
  out.body = Json{{"header", header("check-subdivision")},
                  {"input", quotient_echo(*file.quotient)},
                  {"values", values},
                  {"certificates", certs},
                  {"notes", rep.notes}};
  out.exit_code = exit_code_of(certs);
  return out;
}

RunReport radial_report(const RunFile& run) {
  const auto& cfg = run.config;
  Json input{{"n", cfg.n},
             {"r", cfg.r_order},
             {"C", real(cfg.calabi_C)},
             {"s0", real(cfg.bump.center)},
             {"w", real(cfg.bump.half_width)},
             {"c", real(cfg.bump.amplitude)},
             {"s_min", real(run.s_min)},
             {"s_max", real(run.s_max)},
             {"nodes", run.nodes},
             {"t_steps", cfg.t_steps},
             {"newton_tol", real(cfg.newton_tol)}};
  std::optional<radial::RadialGrid> grid;
  try {
    grid.emplace(run.s_min, run.s_max, run.nodes);
    cfg.validate(*grid);
  } catch (const radial::ConfigError& e) {
    return usage_error_report("radial", input, e.what());
  }

  auto trace_json = [](const radial::PathTrace& trace) {
    Json steps = Json::array();
    for (const auto& s : trace.steps) {
      Json residuals = Json::array();
      for (const auto& it : s.iterates) residuals.push_back(real(it.residual));
      steps.push_back(Json{{"t", real(s.t)},
                           {"newton_iterations", s.iterates.size() - 1},
                           {"residuals", residuals},
                           {"min_density", real(s.min_density)}});
    }
    return steps;
  };

  radial::PathSolution sol{{*grid, {}}, {*grid, {}}, {*grid, {}}, {}};
  try {
    sol = radial::newton_continuity_solve(cfg, *grid);
  } catch (const radial::SolverFailure& e) {
    return RunReport{Json{{"header", header("radial")}, {"input", input}, {"error", e.what()},
                          {"trace", trace_json(e.trace)}},
                     kSolverFailure};
  } catch (const radial::KahlerViolation& e) {
    return RunReport{Json{{"header", header("radial")}, {"input", input}, {"error", e.what()},
                          {"node", e.node}, {"s", real(e.s)}},
                     kSolverFailure};
  }

  const int n = cfg.n;
  const double moment = radial::bump_moment(cfg);
  const double oracle_dev =
      radial::relative_max_deviation(sol.f_prime.values, radial::quadrature_oracle(cfg, *grid).values);
  double min_density = INFINITY;
  for (const auto& s : sol.trace.steps) min_density = std::min(min_density, s.min_density);

  Json values{{"oracle_deviation", real(oracle_dev)},
              {"u_max_abs", real(sol.u.values.cwiseAbs().maxCoeff())},
              {"min_density_along_path", real(min_density)},
              {"expected_exponent", 1 - n},
              {"calabi_tail_coefficient", real(-cfg.calabi_C / (n * (n - 1)))},
              {"predicted_tail_coefficient", real(-(cfg.calabi_C - n * moment) / (n * (n - 1)))},
              {"bump_moment", real(moment)}};
  Json certs = Json::object();
  certs["newton_converged"] = certificate(Verdict::pass, Json{{"steps", sol.trace.steps.size()}});
  certs["kahler_positivity"] = certificate(verdict_of(min_density > 0.0), Json{{"min_density", real(min_density)}});
  certs["oracle_equivalence"] =
      certificate(verdict_of(oracle_dev <= 1e-6), Json{{"deviation", real(oracle_dev)}, {"tolerance", real(1e-6)}});
  Json notes = Json::array();

  try {
    const auto fit = radial::decay_fit(sol.f_prime, cfg);
    values["decay_fit"] = Json{{"exponent", real(fit.exponent)},
                               {"coefficient", real(fit.coefficient)},
                               {"window", Json::array({real(fit.window_begin), real(fit.window_end)})},
                               {"points", fit.points},
                               {"residual", real(fit.residual)}};
    const double rel = std::abs(fit.exponent - (1 - n)) / (n - 1);
    certs["decay_exponent"] = certificate(verdict_of(rel <= 0.01), Json{{"relative_error", real(rel)}});
  } catch (const radial::FitUnreliable& e) {
    certs["decay_exponent"] = certificate(Verdict::fail, Json{{"reason", e.what()}});
  }

  std::optional<double> correction_coefficient;
  if (cfg.bump.amplitude != 0.0) {
    try {
      const auto fit = radial::decay_fit_correction(sol.u_prime, cfg);
      correction_coefficient = fit.coefficient;
      values["correction_fit"] = Json{{"exponent", real(fit.exponent)},
                                      {"coefficient", real(fit.coefficient)},
                                      {"predicted_coefficient", real(moment / (n - 1))},
                                      {"window", Json::array({real(fit.window_begin), real(fit.window_end)})}};
    } catch (const radial::FitUnreliable& e) {
      notes.push_back(std::string("correction tail not fitted: ") + e.what());
    }
  }
  if (n >= 3) {
    const auto mass = radial::mass_integral(cfg);
    Json m{{"integral", real(mass.integral)}, {"link_volume", real(mass.link_volume)}, {"A", real(mass.A)}};
    if (correction_coefficient && mass.A != 0.0) m["fitted_over_A"] = real(*correction_coefficient / mass.A);
    values["mass"] = m;
    notes.push_back("mass normalization convention is not fixed by the radial model; only the ratio's constancy is tested");
  } else {
    notes.push_back("mass formula not evaluated at n = 2");
  }

  RunReport out;
  out.body = Json{{"header", header("radial")},
                  {"input", input},
                  {"values", values},
                  {"certificates", certs},
                  {"trace", trace_json(sol.trace)},
                  {"notes", notes}};
  out.exit_code = exit_code_of(certs);
  return out;
}

RunReport sweep2d_report(long long r_max) {
  Json input{{"r_max", r_max}};
  if (r_max < 2) return usage_error_report("sweep2d", input, "RMAX must be at least 2");
  std::map<std::string, std::map<std::string, long long>> counts;
  Json failures = Json::array();
  long long chains = 0;
  for (long long r = 2; r <= r_max; ++r)
    for (long long a = 1; a < r; ++a) {
      if (std::gcd(a, r) != 1) continue;
      ++chains;
      const auto outcome = analyze_chain(hj_resolution(CyclicQuotient(r, {a})));
      for (const auto& [name, cert] : outcome.certificates.items()) {
        const std::string v = cert.at("verdict");
        ++counts[name][v];
        if (v == "fail") failures.push_back(Json{{"r", r}, {"a", a}, {"certificate", name}});
      }
    }
  Json summary = Json::object();
  for (const auto& [name, tally] : counts) {
    Json t = Json::object();
    for (const char* v : {"pass", "fail", "not-applicable"}) t[v] = tally.count(v) ? tally.at(v) : 0;
    summary[name] = t;
  }
  RunReport out;
  out.body = Json{{"header", header("sweep2d")},
                  {"input", input},
                  {"chains", chains},
                  {"certificates", summary},
                  {"failures", failures}};
  out.exit_code = failures.empty() ? kPass : kCertificateFailure;
  return out;
}

}  // namespace conecy
