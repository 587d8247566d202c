#include "turankit/rational.hpp"

#include <cctype>

namespace turankit {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view digits)
{
    return Integer(std::string(digits), 10);
}

Integer pow10(long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

// Decimal literal with optional fraction and exponent.
Rational parse_decimal(std::string_view text, std::string_view whole)
{
    std::string_view mantissa = text;
    long exponent = 0;
    if (auto epos = text.find_first_of("eE"); epos != std::string_view::npos) {
        mantissa = text.substr(0, epos);
        std::string_view exp_text = text.substr(epos + 1);
        bool neg = false;
        if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
            neg = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6) {
            throw ParseError("malformed exponent in '" + std::string(whole) + "'");
        }
        exponent = std::stol(std::string(exp_text));
        if (neg) {
            exponent = -exponent;
        }
    }

    std::string_view int_part = mantissa;
    std::string_view frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        int_part = mantissa.substr(0, dot);
        frac_part = mantissa.substr(dot + 1);
        if (frac_part.find('.') != std::string_view::npos) {
            throw ParseError("more than one decimal point in '" + std::string(whole) + "'");
        }
    }
    if (int_part.empty() && frac_part.empty()) {
        throw ParseError("empty number in '" + std::string(whole) + "'");
    }
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
        throw ParseError("not a rational literal: '" + std::string(whole) + "'");
    }

    Integer num = parse_integer(std::string(int_part.empty() ? "0" : int_part) + std::string(frac_part));
    long scale = static_cast<long>(frac_part.size()) - exponent;
    Rational r;
    if (scale >= 0) {
        r = Rational(num, pow10(scale));
    } else {
        r = Rational(num * pow10(-scale));
    }
    r.canonicalize();
    return r;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view whole = text;
    if (text.empty()) {
        throw ParseError("empty rational literal");
    }
    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational r;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view p = text.substr(0, slash);
        std::string_view q = text.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) {
            throw ParseError("not a rational literal: '" + std::string(whole) + "'");
        }
        Integer den = parse_integer(q);
        if (den == 0) {
            throw ParseError("zero denominator in '" + std::string(whole) + "'");
        }
        r = Rational(parse_integer(p), den);
        r.canonicalize();
    } else {
        r = parse_decimal(text, whole);
    }
    return negative ? Rational(-r) : r;
}

std::vector<Rational> parse_rational_list(std::string_view text)
{
    std::vector<Rational> out;
    if (text.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::vector<Rational> parse_grid(std::string_view text)
{
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        std::string_view item = text.substr(start, comma - start);
        if (item.find(':') == std::string_view::npos) {
            out.push_back(parse_rational(item));
        } else {
            auto c1 = item.find(':');
            auto c2 = item.find(':', c1 + 1);
            if (c2 == std::string_view::npos || item.find(':', c2 + 1) != std::string_view::npos) {
                throw ParseError("range must have the form lo:hi:step: '" + std::string(item) + "'");
            }
            const Rational lo = parse_rational(item.substr(0, c1));
            const Rational hi = parse_rational(item.substr(c1 + 1, c2 - c1 - 1));
            const Rational step = parse_rational(item.substr(c2 + 1));
            if (step <= 0) {
                throw ParseError("range step must be positive: '" + std::string(item) + "'");
            }
            for (Rational v = lo; v <= hi; v += step) {
                out.push_back(v);
            }
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (out.empty()) {
        throw ParseError("grid is empty: '" + std::string(text) + "'");
    }
    return out;
}

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

bool is_nonpositive_integer(const Rational& q)
{
    return is_integer(q) && q <= 0;
}

Rational pochhammer(const Rational& a, std::size_t n)
{
    Rational r(1);
    Rational term = a;
    for (std::size_t i = 0; i < n; ++i) {
        r *= term;
        term += 1;
    }
    return r;
}

std::vector<Rational> pochhammer_table(const Rational& a, std::size_t n)
{
    std::vector<Rational> out;
    out.reserve(n + 1);
    out.emplace_back(1);
    Rational term = a;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(out.back() * term);
        term += 1;
    }
    return out;
}

Integer factorial(std::size_t n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

int sign(const Rational& q)
{
    return sgn(q);
}

Rational abs(const Rational& q)
{
    return q < 0 ? Rational(-q) : q;
}

double to_double(const Rational& q)
{
    return q.get_d();
}

} // namespace turankit
