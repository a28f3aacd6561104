#include "cfrac/rational.hpp"

#include <cctype>
#include <ostream>

#include "cfrac/error.hpp"

namespace cfrac {

namespace {

bool parse_integer(std::string_view s, Integer& out)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void bad_literal(std::string_view text)
{
    throw Error(ErrorKind::ParseError, "invalid rational literal '" + std::string(text) + "'");
}

// Decimal mantissa with optional exponent: [+-]digits[.digits][e[+-]digits]
Rational parse_decimal(std::string_view s)
{
    std::string_view mant = s;
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mant = s.substr(0, e);
        Integer ev;
        if (!parse_integer(s.substr(e + 1), ev) || !ev.fits_slong_p()) bad_literal(s);
        exp10 = ev.get_si();
        if (exp10 > 100000 || exp10 < -100000) bad_literal(s);
    }
    bool negative = false;
    if (!mant.empty() && (mant[0] == '+' || mant[0] == '-')) {
        negative = mant[0] == '-';
        mant.remove_prefix(1);
    }
    std::string digits;
    bool seen_dot = false, seen_digit = false;
    for (char c : mant) {
        if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) --exp10;
        } else {
            bad_literal(s);
        }
    }
    if (!seen_digit) bad_literal(s);
    Integer n(digits, 10);
    if (negative) n = -n;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    return exp10 >= 0 ? Rational(Integer(n * scale)) : Rational(n, scale);
}

} // namespace

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const std::string_view s = trim(text);
    if (s.empty()) bad_literal(text);
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer n, d;
        if (!parse_integer(trim(s.substr(0, slash)), n) || !parse_integer(trim(s.substr(slash + 1)), d))
            bad_literal(text);
        if (d == 0) throw Error(ErrorKind::DivisionByZero, "rational literal with zero denominator");
        return Rational(n, d);
    }
    Integer n;
    if (parse_integer(s, n)) return Rational(n);
    return parse_decimal(s);
}

Rational Rational::inverse() const
{
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1 / q_));
}

std::string Rational::str() const
{
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

std::size_t bit_size(const Rational& x)
{
    return mpz_sizeinbase(x.raw().get_num_mpz_t(), 2) + mpz_sizeinbase(x.raw().get_den_mpz_t(), 2);
}

} // namespace cfrac
