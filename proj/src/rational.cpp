#include "pltopo/rational.hpp"

#include "pltopo/errors.hpp"

#include <cctype>
#include <cmath>

namespace pltopo {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

bool signed_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    return all_digits(s);
}

mpz_class parse_integer(std::string_view s)
{
    std::string text(s);
    if (!text.empty() && text.front() == '+')
        text.erase(0, 1);
    return mpz_class(text, 10);
}

[[noreturn]] void bad_number(std::string_view text)
{
    throw ParseError(ParseError::Kind::BadNumber, "not a rational number: '" + std::string(text) + "'");
}

Rational parse_decimal(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = s.substr(e + 1);
        if (!signed_integer(exp_part))
            bad_number(text);
        exponent = std::stol(std::string(exp_part));
        s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole))
            || (!frac.empty() && !all_digits(frac)))
            bad_number(text);
        digits = std::string(whole) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    } else {
        if (!all_digits(s))
            bad_number(text);
        digits = std::string(s);
    }
    if (digits.empty())
        bad_number(text);
    mpz_class mantissa(digits, 10);
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    Rational value = exponent >= 0 ? Rational(mantissa * power) : Rational(mantissa, power);
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!signed_integer(num) || !signed_integer(den))
            bad_number(text);
        mpz_class d = parse_integer(den);
        if (d == 0)
            throw ParseError(ParseError::Kind::ZeroDenominator, "zero denominator in '" + std::string(text) + "'");
        Rational value(parse_integer(num), d);
        value.canonicalize();
        return value;
    }
    if (signed_integer(text))
        return Rational(parse_integer(text));
    return parse_decimal(text);
}

std::string to_string(const Rational& value)
{
    return value.get_str(10);
}

std::string to_string(const Vec& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

int sign(const Rational& value)
{
    return sgn(value);
}

Rational abs(const Rational& value)
{
    return sgn(value) < 0 ? Rational(-value) : value;
}

Rational dot(const Vec& a, const Vec& b)
{
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
            sum += a[i] * b[i];
    return sum;
}

Vec add(const Vec& a, const Vec& b)
{
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b)
{
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

Vec scale(const Vec& a, const Rational& s)
{
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] * s;
    return out;
}

Vec negate(const Vec& a)
{
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = -a[i];
    return out;
}

Vec zeros(std::size_t n)
{
    return Vec(n, Rational(0));
}

bool is_zero(const Vec& a)
{
    for (const auto& x : a)
        if (sgn(x) != 0)
            return false;
    return true;
}

bool LexLess::operator()(const Vec& a, const Vec& b) const
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0)
            return c < 0;
    }
    return a.size() < b.size();
}

Vec primitive_direction(const Vec& v)
{
    if (is_zero(v))
        return v;
    mpz_class lcm_den = 1;
    for (const auto& x : v)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> ints(v.size());
    mpz_class g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].get_num() * (lcm_den / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Rational(ints[i] / g);
    return out;
}

Rational snap_dyadic(double x)
{
    const double scaled = std::ldexp(x, 53);
    mpz_class num;
    mpz_set_d(num.get_mpz_t(), std::round(scaled));
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, 53);
    Rational value(num, den);
    value.canonicalize();
    return value;
}

double to_double(const Rational& value)
{
    return value.get_d();
}

} // namespace pltopo
