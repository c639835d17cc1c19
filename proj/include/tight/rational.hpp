#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer operator== recurses forever once C++20
// adds reversed candidates. Exact non-template overloads win resolution.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b)
{
    return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, long b)
{
    return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, long long b)
{
    return a.denominator() == 1 && a.numerator() == b;
}
}  // namespace boost

namespace tight {

using Rational = boost::rational<std::int64_t>;

/// Rational coordinates in the Euclidean realization of a root system.
using Vec = std::vector<Rational>;

/// "p/q" with q > 0; integers are written "p/1".
std::string to_string(const Rational& value);

/// Inverse of to_string; also accepts a bare integer "p".
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& value);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& a);

/// Gauss-Jordan inverse of a square rational matrix; throws std::domain_error if singular.
std::vector<Vec> inverse(const std::vector<Vec>& matrix);

/// Exact rank by row reduction.
std::size_t matrix_rank(std::vector<Vec> rows);

}  // namespace tight
