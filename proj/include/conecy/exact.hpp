#pragma once

// Exact scalar types and Eigen containers over them.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace conecy {

namespace mp = boost::multiprecision;

// Expression templates are disabled so the scalars compose cleanly with Eigen's own.
using Integer = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Integer>;
using RatVector = Vector<Rational>;
using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a self-check on derived data fails; indicates a bug, not bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

IntVector int_vector(std::initializer_list<long long> entries);
IntVector unit_vector(Eigen::Index dim, Eigen::Index axis);
RatVector to_rational(const IntVector& v);

Rational dot(const IntVector& w, const RatVector& gamma);

/// p/q for any nonzero q; the Rational constructor itself rejects q < 0.
Rational ratio(const Integer& p, const Integer& q);

// "p/q" with q > 0, or "p" when q == 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(const IntVector& v);

// Accepts "p", "-p", "p/q"; throws ArgumentError on anything else or q == 0.
Rational parse_rational(std::string_view text);

std::vector<std::string> to_strings(const std::vector<Rational>& values);

}  // namespace conecy
