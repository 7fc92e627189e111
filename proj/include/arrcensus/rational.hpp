#pragma once

// Exact scalar and dense matrix types shared by every module.
//
// Rational is a GMP-backed multiprecision rational with expression templates
// disabled, so it behaves as a plain value type inside Eigen containers.
// Every arithmetic result is kept in canonical form (denominator > 0,
// gcd(|num|, den) = 1).

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

namespace arrcensus {

using Index = Eigen::Index;

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// Parses "p/q" or "p" (optional leading sign, decimal digits only).
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

/// -1, 0 or +1.
inline int sign_of(const Rational& value) { return value.sign(); }

RationalVector parse_rational_list(std::string_view comma_separated);

/// Builds a dense matrix from integer rows; convenient for fixtures.
RationalMatrix matrix_from_rows(const std::vector<std::vector<long>>& rows);
RationalVector vector_from(const std::vector<long>& entries);

}  // namespace arrcensus
