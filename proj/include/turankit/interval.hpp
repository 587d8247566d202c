#pragma once

#include "turankit/rational.hpp"

#include <mpfr.h>

#include <iosfwd>
#include <string>

namespace turankit {

/// Working precision in bits.
struct Precision {
    mpfr_prec_t bits = 100;

    static Precision from_digits(int digits);
    /// Default precision, honouring TURANKIT_PRECISION (decimal digits).
    static Precision standard();

    Precision doubled() const { return Precision{bits * 2}; }
    Precision plus(mpfr_prec_t extra) const { return Precision{bits + extra}; }

    friend bool operator==(Precision, Precision) = default;
};

/// Closed interval [lo, hi] with MPFR endpoints. Every operation rounds
/// outward, so the result encloses the exact image of the operands.
class Interval {
public:
    explicit Interval(Precision prec = Precision{});
    Interval(const Rational& q, Precision prec);
    Interval(long value, Precision prec);

    /// Hull of two rationals (lo rounded down, hi rounded up).
    static Interval hull(const Rational& lo, const Rational& hi, Precision prec);
    static Interval pi(Precision prec);
    /// (-inf, +inf)
    static Interval entire(Precision prec);

    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(const Interval& other);
    Interval& operator=(Interval&& other) noexcept;
    ~Interval();

    mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }

    double lo_double() const;   // rounded down
    double hi_double() const;   // rounded up
    double mid_double() const;
    double width_double() const; // rounded up
    /// Width divided by the smallest magnitude in the interval (inf if 0 is inside).
    double relative_width() const;

    bool contains(const Rational& q) const;
    bool contains(const Interval& inner) const;
    bool contains(mpfr_srcptr value) const;
    bool contains_zero() const;
    bool overlaps(const Interval& other) const;

    bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
    bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
    /// Strict comparisons that only succeed when the intervals are disjoint.
    bool certainly_less(const Interval& other) const;
    bool certainly_greater(const Interval& other) const { return other.certainly_less(*this); }

    Interval& operator+=(const Interval& rhs);
    Interval& operator-=(const Interval& rhs);
    Interval& operator*=(const Interval& rhs);
    Interval& operator/=(const Interval& rhs);

    friend Interval operator+(Interval lhs, const Interval& rhs) { return lhs += rhs; }
    friend Interval operator-(Interval lhs, const Interval& rhs) { return lhs -= rhs; }
    friend Interval operator*(Interval lhs, const Interval& rhs) { return lhs *= rhs; }
    friend Interval operator/(Interval lhs, const Interval& rhs) { return lhs /= rhs; }
    Interval operator-() const;

    /// Outward rounding to a (usually lower) precision.
    Interval round_to(Precision prec) const;

    /// Widens by [-radius, radius]; radius must be nonnegative.
    Interval& widen(const Interval& radius);

    /// max(|lo|, |hi|) as an interval degenerate at an upper bound.
    Interval magnitude_bound() const;

    std::string str(int digits = 17) const;

    friend Interval exp(const Interval& x);
    friend Interval log(const Interval& x);

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

Interval exp(const Interval& x);
Interval log(const Interval& x);                   // x must be positive
Interval pow(const Interval& base, const Rational& exponent); // base positive

std::ostream& operator<<(std::ostream& os, const Interval& x);

} // namespace turankit
