// conecy: certify toric resolutions of cyclic quotient singularities and run
// the radial continuity-path solver.

#include "conecy/input.hpp"
#include "conecy/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int emit(const conecy::RunReport& report, const std::string& json_path) {
  const std::string text = conecy::render(report.body);
  if (json_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return conecy::kUsageError;
    }
    out << text;
    std::cout << "report written to " << json_path << " (exit " << report.exit_code << ")\n";
  }
  return report.exit_code;
}

template <typename Parse, typename Run>
int from_file(const std::string& path, Parse parse, Run run) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return conecy::kUsageError;
  }
  try {
    return run(parse(in));
  } catch (const conecy::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return conecy::kUsageError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toric resolution certificates and radial Monge-Ampere solver"};
  app.require_subcommand(1);
  std::string json_path;
  long long r = 0, a = 0, r_max = 0;
  std::string file;

  auto* resolve2d = app.add_subcommand("resolve2d", "Hirzebruch-Jung resolution of 1/R(1,A)");
  resolve2d->add_option("R", r)->required();
  resolve2d->add_option("A", a)->required();
  resolve2d->add_option("--json", json_path, "write the report to this file");

  auto* resolve3d = app.add_subcommand("resolve3d", "smooth resolution of 1/R(1,1,A) for A >= 3, R > A+2, A | R+1");
  resolve3d->add_option("R", r)->required();
  resolve3d->add_option("A", a)->required();
  resolve3d->add_option("--json", json_path, "write the report to this file");

  auto* check = app.add_subcommand("check-subdivision", "validate a fan subdivision file");
  check->add_option("FILE", file)->required();
  check->add_option("--json", json_path, "write the report to this file");

  auto* radial = app.add_subcommand("radial", "continuity-path solve from a run file");
  radial->add_option("RUNFILE", file)->required();
  radial->add_option("--json", json_path, "write the report to this file");

  auto* sweep = app.add_subcommand("sweep2d", "certify every coprime (r, a) with r <= RMAX");
  sweep->add_option("RMAX", r_max)->required();
  sweep->add_option("--json", json_path, "write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : conecy::kUsageError;
  }

  if (*resolve2d) {
    const auto rep = conecy::resolve2d_report(r, a);
    if (rep.exit_code == conecy::kUsageError) std::cerr << rep.body.at("error").get<std::string>() << "\n";
    return emit(rep, json_path);
  }
  if (*resolve3d) {
    const auto rep = conecy::resolve3d_report(r, a);
    if (rep.exit_code == conecy::kUsageError) std::cerr << rep.body.at("error").get<std::string>() << "\n";
    return emit(rep, json_path);
  }
  if (*check)
    return from_file(file, conecy::parse_subdivision,
                     [&](const auto& f) { return emit(conecy::check_subdivision_report(f), json_path); });
  if (*radial)
    return from_file(file, conecy::parse_run_file,
                     [&](const auto& f) { return emit(conecy::radial_report(f), json_path); });
  if (*sweep) return emit(conecy::sweep2d_report(r_max), json_path);
  return conecy::kUsageError;
}
