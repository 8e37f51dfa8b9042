#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pltopo {

/// Arbitrary-precision exact rational scalar.
using Rational = mpq_class;
using Vec = std::vector<Rational>;
/// Row-major dense matrix.
using Matrix = std::vector<Vec>;

/// Parses "p/q", an integer, or a decimal literal ("-1.25", "3e-2") exactly.
/// Throws ParseError (ZeroDenominator or BadNumber).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when integral).
std::string to_string(const Rational& value);
std::string to_string(const Vec& v);

int sign(const Rational& value);
Rational abs(const Rational& value);

Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& s);
Vec negate(const Vec& a);
Vec zeros(std::size_t n);
bool is_zero(const Vec& a);

/// Strict lexicographic order on exact coordinates.
struct LexLess {
    bool operator()(const Vec& a, const Vec& b) const;
};

/// Positive multiple of v with coprime integer entries; zero stays zero.
Vec primitive_direction(const Vec& v);

/// Rational with denominator 2^53 nearest to x (round half away from zero).
Rational snap_dyadic(double x);

double to_double(const Rational& value);

} // namespace pltopo
