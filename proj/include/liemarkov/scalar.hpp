#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Dense>
#include <boost/rational.hpp>

namespace liemarkov {

// Compare against Rational values, not integer literals: under C++20 the
// mixed rational/int == of Boost 1.74 recurses through its reversed form.
using Rational = boost::rational<std::int64_t>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<std::int64_t>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace liemarkov

namespace Eigen {

template <>
struct NumTraits<liemarkov::Rational> : GenericNumTraits<liemarkov::Rational> {
  using Real = liemarkov::Rational;
  using NonInteger = liemarkov::Rational;
  using Literal = liemarkov::Rational;
  using Nested = liemarkov::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline Real highest() { return Real(INT64_MAX); }
  static inline Real lowest() { return Real(INT64_MIN + 1); }
};

}  // namespace Eigen
