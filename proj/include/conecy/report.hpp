#pragma once

// JSON run reports behind the command-line tool. Rationals are "p/q" strings,
// reals are rounded to 12 significant digits, and key order is fixed, so equal
// inputs give byte-identical output.

#include "conecy/input.hpp"
#include "conecy/resolution.hpp"
#include "conecy/surface.hpp"

#include <json.hpp>

#include <string>

namespace conecy {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kPass = 0, kCertificateFailure = 1, kUsageError = 2, kSolverFailure = 3 };

struct RunReport {
  Json body;
  int exit_code = kPass;
};

/// Certificates every report shares: a verdict plus the exact witness values.
Json certificate(Verdict verdict, Json witness);

/// 12 significant digits.
Json real(double value);

std::string render(const Json& body);

RunReport resolve2d_report(long long r, long long a);
RunReport resolve3d_report(long long r, long long a);
RunReport check_subdivision_report(const SubdivisionFile& file);
RunReport radial_report(const RunFile& run);
RunReport sweep2d_report(long long r_max);

/// Report for a rejected command (exit code 2).
RunReport usage_error_report(const std::string& command, Json input, const std::string& message);

}  // namespace conecy
