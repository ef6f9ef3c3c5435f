#include "conecy/input.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace conecy {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

long long to_int(const std::string& token, int line) {
  long long value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "expected an integer, got '" + token + "'");
  return value;
}

double to_real(const std::string& token, int line) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) throw ParseError(line, "expected a number, got '" + token + "'");
  return value;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

SubdivisionFile parse_subdivision(std::istream& in) {
  SubdivisionFile file;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(strip_comment(raw));
    if (text.empty()) continue;
    const auto tokens = split_ws(text);
    const std::string& keyword = tokens.front();

    if (keyword == "dim") {
      if (file.dim != 0) throw ParseError(line, "duplicate 'dim' line");
      if (tokens.size() != 2) throw ParseError(line, "expected 'dim n'");
      file.dim = static_cast<int>(to_int(tokens[1], line));
      if (file.dim < 2) throw ParseError(line, "dimension must be at least 2");
    } else if (keyword == "quotient") {
      if (file.dim == 0) throw ParseError(line, "'quotient' must follow 'dim'");
      if (file.quotient) throw ParseError(line, "duplicate 'quotient' line");
      if (static_cast<int>(tokens.size()) != file.dim + 1)
        throw ParseError(line, "expected 'quotient r' followed by " + std::to_string(file.dim - 1) + " weights");
      std::vector<long long> weights;
      for (std::size_t i = 2; i < tokens.size(); ++i) weights.push_back(to_int(tokens[i], line));
      try {
        file.quotient.emplace(to_int(tokens[1], line), std::move(weights));
      } catch (const ArgumentError& e) {
        throw ParseError(line, e.what());
      }
    } else if (keyword == "cone") {
      if (!file.quotient) throw ParseError(line, "'cone' must follow 'quotient'");
      std::vector<IntVector> gens;
      std::istringstream rest(text.substr(keyword.size()));
      for (std::string chunk; std::getline(rest, chunk, '|');) {
        const auto entries = split_ws(chunk);
        if (static_cast<int>(entries.size()) != file.dim)
          throw ParseError(line, "each generator needs " + std::to_string(file.dim) + " entries");
        IntVector v(file.dim);
        for (int i = 0; i < file.dim; ++i) v(i) = to_int(entries[i], line);
        gens.push_back(std::move(v));
      }
      if (static_cast<int>(gens.size()) != file.dim)
        throw ParseError(line, "a cone needs exactly " + std::to_string(file.dim) + " generators");
      file.cones.push_back(std::move(gens));
    } else {
      throw ParseError(line, "unknown keyword '" + keyword + "'");
    }
  }
  if (file.dim == 0) throw ParseError(line, "missing 'dim' line");
  if (!file.quotient) throw ParseError(line, "missing 'quotient' line");
  if (file.cones.empty()) throw ParseError(line, "no 'cone' lines");
  return file;
}

RunFile parse_run_file(std::istream& in) {
  static const std::set<std::string> required{"n", "r", "C", "s0", "w", "c"};
  static const std::set<std::string> optional{"s_min", "s_max", "nodes", "t_steps", "newton_tol",
                                              "max_halvings", "max_newton_iterations"};
  std::map<std::string, std::pair<std::string, int>> entries;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(strip_comment(raw));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected 'key = value'");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (!required.count(key) && !optional.count(key)) throw ParseError(line, "unknown key '" + key + "'");
    if (value.empty()) throw ParseError(line, "missing value for '" + key + "'");
    if (!entries.emplace(key, std::pair{value, line}).second) throw ParseError(line, "duplicate key '" + key + "'");
  }
  for (const auto& key : required)
    if (!entries.count(key)) throw ParseError(line, "missing required key '" + key + "'");

  auto real = [&](const std::string& key) { return to_real(entries[key].first, entries[key].second); };
  auto integer = [&](const std::string& key) { return to_int(entries[key].first, entries[key].second); };

  RunFile run;
  auto& cfg = run.config;
  cfg.n = static_cast<int>(integer("n"));
  cfg.r_order = integer("r");
  cfg.calabi_C = real("C");
  cfg.bump = radial::Bump{real("s0"), real("w"), real("c")};
  if (entries.count("s_min")) run.s_min = real("s_min");
  if (entries.count("s_max")) run.s_max = real("s_max");
  if (entries.count("nodes")) run.nodes = static_cast<long>(integer("nodes"));
  if (entries.count("t_steps")) cfg.t_steps = static_cast<int>(integer("t_steps"));
  if (entries.count("newton_tol")) cfg.newton_tol = real("newton_tol");
  if (entries.count("max_halvings")) cfg.max_halvings = static_cast<int>(integer("max_halvings"));
  if (entries.count("max_newton_iterations"))
    cfg.max_newton_iterations = static_cast<int>(integer("max_newton_iterations"));
  return run;
}

}  // namespace conecy
