#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace turankit {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Raised for arguments outside an operation's mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A Pochhammer product or Gamma argument hit a nonpositive integer.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Raised when a parameter string is not an exact rational literal.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "3", "-7/4", "0.125", "1.5e-3" exactly. Whitespace is not allowed.
Rational parse_rational(std::string_view text);

/// Parses a comma separated list of rationals, e.g. "1/2,1,3/2".
std::vector<Rational> parse_rational_list(std::string_view text);

/// Comma-separated items, each a rational or an inclusive range "lo:hi:step"
/// with step > 0. Throws ParseError on malformed input or an empty result.
std::vector<Rational> parse_grid(std::string_view text);

/// Canonical "p/q" (or "p" when q = 1).
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// True when q is 0, -1, -2, ...
bool is_nonpositive_integer(const Rational& q);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, std::size_t n);

/// All of (a)_0 .. (a)_n, computed incrementally.
std::vector<Rational> pochhammer_table(const Rational& a, std::size_t n);

Integer factorial(std::size_t n);

int sign(const Rational& q);

Rational abs(const Rational& q);

/// Nearest double, for display only.
double to_double(const Rational& q);

} // namespace turankit
