#include "conecy/exact.hpp"

#include <cctype>

namespace conecy {

IntVector int_vector(std::initializer_list<long long> entries) {
  IntVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long long e : entries) v(i++) = Integer(e);
  return v;
}

IntVector unit_vector(Eigen::Index dim, Eigen::Index axis) {
  IntVector v = IntVector::Constant(dim, Integer(0));
  v(axis) = 1;
  return v;
}

RatVector to_rational(const IntVector& v) { return v.cast<Rational>(); }

Rational dot(const IntVector& w, const RatVector& gamma) {
  if (w.size() != gamma.size()) throw ArgumentError("dot: dimension mismatch");
  Rational s = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) s += Rational(w(i)) * gamma(i);
  return s;
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  const Integer num = numerator(q);
  const Integer den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const IntVector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v(i).str();
  }
  return out + ")";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational ratio(const Integer& p, const Integer& q) {
  if (q == 0) throw ArgumentError("ratio: zero denominator");
  return q < 0 ? Rational(-p, -q) : Rational(p, q);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text))
    throw ArgumentError("malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(parse_integer(num_text));
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text))
    throw ArgumentError("malformed rational '" + std::string(text) + "'");
  const Integer den = parse_integer(den_text);
  if (den == 0) throw ArgumentError("zero denominator in '" + std::string(text) + "'");
  return ratio(parse_integer(num_text), den);
}

std::vector<std::string> to_strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace conecy
