#include "turankit/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <sstream>

namespace turankit {

Precision Precision::from_digits(int digits)
{
    if (digits < 5) {
        throw std::invalid_argument("precision must be at least 5 decimal digits");
    }
    // log2(10) ~ 3.3219
    return Precision{static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623))};
}

Precision Precision::standard()
{
    if (const char* env = std::getenv("TURANKIT_PRECISION"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        long digits = std::strtol(env, &end, 10);
        if (end != nullptr && *end == '\0' && digits >= 5 && digits <= 100000) {
            return from_digits(static_cast<int>(digits));
        }
        throw std::invalid_argument(std::string("TURANKIT_PRECISION is not a digit count: ") + env);
    }
    return from_digits(30);
}

namespace {

void set_rational(mpfr_ptr dst, const Rational& q, mpfr_rnd_t rnd)
{
    mpfr_set_q(dst, q.get_mpq_t(), rnd);
}

mpfr_prec_t wider(const Interval& a, const Interval& b)
{
    return std::max(a.precision(), b.precision());
}

} // namespace

Interval::Interval(Precision prec)
{
    mpfr_init2(lo_, prec.bits);
    mpfr_init2(hi_, prec.bits);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& q, Precision prec)
{
    mpfr_init2(lo_, prec.bits);
    mpfr_init2(hi_, prec.bits);
    set_rational(lo_, q, MPFR_RNDD);
    set_rational(hi_, q, MPFR_RNDU);
}

Interval::Interval(long value, Precision prec)
{
    mpfr_init2(lo_, prec.bits);
    mpfr_init2(hi_, prec.bits);
    mpfr_set_si(lo_, value, MPFR_RNDD);
    mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval Interval::hull(const Rational& lo, const Rational& hi, Precision prec)
{
    if (lo > hi) {
        throw std::invalid_argument("Interval::hull: lo > hi");
    }
    Interval r(prec);
    set_rational(r.lo_, lo, MPFR_RNDD);
    set_rational(r.hi_, hi, MPFR_RNDU);
    return r;
}

Interval Interval::pi(Precision prec)
{
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::entire(Precision prec)
{
    Interval r(prec);
    mpfr_set_inf(r.lo_, -1);
    mpfr_set_inf(r.hi_, 1);
    return r;
}

Interval::Interval(const Interval& other)
{
    mpfr_init2(lo_, other.precision());
    mpfr_init2(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept
{
    mpfr_init2(lo_, other.precision());
    mpfr_init2(hi_, other.precision());
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other)
{
    if (this != &other) {
        mpfr_set_prec(lo_, other.precision());
        mpfr_set_prec(hi_, other.precision());
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept
{
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

Interval::~Interval()
{
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_double() const
{
    mpfr_t m;
    mpfr_init2(m, precision() + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

double Interval::width_double() const
{
    mpfr_t w;
    mpfr_init2(w, precision());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

double Interval::relative_width() const
{
    if (contains_zero()) {
        return std::numeric_limits<double>::infinity();
    }
    mpfr_t w;
    mpfr_t m;
    mpfr_init2(w, precision());
    mpfr_init2(m, precision());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    if (mpfr_sgn(lo_) > 0) {
        mpfr_set(m, lo_, MPFR_RNDD);
    } else {
        mpfr_neg(m, hi_, MPFR_RNDD);
    }
    mpfr_div(w, w, m, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    mpfr_clear(m);
    return d;
}

bool Interval::contains(const Rational& q) const
{
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& inner) const
{
    return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_greaterequal_p(hi_, inner.hi_);
}

bool Interval::contains(mpfr_srcptr value) const
{
    return mpfr_lessequal_p(lo_, value) && mpfr_greaterequal_p(hi_, value);
}

bool Interval::contains_zero() const
{
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::overlaps(const Interval& other) const
{
    return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
}

bool Interval::certainly_less(const Interval& other) const
{
    return mpfr_less_p(hi_, other.lo_);
}

Interval& Interval::operator+=(const Interval& rhs)
{
    const mpfr_prec_t p = wider(*this, rhs);
    mpfr_prec_round(lo_, p, MPFR_RNDD);
    mpfr_prec_round(hi_, p, MPFR_RNDU);
    mpfr_add(lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, rhs.hi_, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator-=(const Interval& rhs)
{
    const mpfr_prec_t p = wider(*this, rhs);
    mpfr_prec_round(lo_, p, MPFR_RNDD);
    mpfr_prec_round(hi_, p, MPFR_RNDU);
    mpfr_sub(lo_, lo_, rhs.hi_, MPFR_RNDD);
    mpfr_sub(hi_, hi_, rhs.lo_, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator*=(const Interval& rhs)
{
    const mpfr_prec_t p = wider(*this, rhs);
    mpfr_t c[4];
    mpfr_srcptr left[2] = {lo_, hi_};
    mpfr_srcptr right[2] = {rhs.lo_, rhs.hi_};
    mpfr_t new_lo;
    mpfr_t new_hi;
    mpfr_init2(new_lo, p);
    mpfr_init2(new_hi, p);
    for (auto& v : c) {
        mpfr_init2(v, p);
    }
    // Lower bound: min of products rounded down.
    for (int i = 0; i < 4; ++i) {
        mpfr_mul(c[i], left[i / 2], right[i % 2], MPFR_RNDD);
    }
    mpfr_set(new_lo, c[0], MPFR_RNDD);
    for (int i = 1; i < 4; ++i) {
        mpfr_min(new_lo, new_lo, c[i], MPFR_RNDD);
    }
    for (int i = 0; i < 4; ++i) {
        mpfr_mul(c[i], left[i / 2], right[i % 2], MPFR_RNDU);
    }
    mpfr_set(new_hi, c[0], MPFR_RNDU);
    for (int i = 1; i < 4; ++i) {
        mpfr_max(new_hi, new_hi, c[i], MPFR_RNDU);
    }
    mpfr_swap(lo_, new_lo);
    mpfr_swap(hi_, new_hi);
    mpfr_clear(new_lo);
    mpfr_clear(new_hi);
    for (auto& v : c) {
        mpfr_clear(v);
    }
    return *this;
}

Interval& Interval::operator/=(const Interval& rhs)
{
    if (rhs.contains_zero()) {
        throw DomainError("interval division by an interval containing zero");
    }
    const mpfr_prec_t p = wider(*this, rhs);
    // The extremes of num/den over a box not containing den = 0 sit at corners.
    mpfr_t c[4];
    mpfr_srcptr num[2] = {lo_, hi_};
    mpfr_srcptr den[2] = {rhs.lo_, rhs.hi_};
    mpfr_t new_lo;
    mpfr_t new_hi;
    mpfr_init2(new_lo, p);
    mpfr_init2(new_hi, p);
    for (auto& v : c) {
        mpfr_init2(v, p);
    }
    for (int i = 0; i < 4; ++i) {
        mpfr_div(c[i], num[i / 2], den[i % 2], MPFR_RNDD);
    }
    mpfr_set(new_lo, c[0], MPFR_RNDD);
    for (int i = 1; i < 4; ++i) {
        mpfr_min(new_lo, new_lo, c[i], MPFR_RNDD);
    }
    for (int i = 0; i < 4; ++i) {
        mpfr_div(c[i], num[i / 2], den[i % 2], MPFR_RNDU);
    }
    mpfr_set(new_hi, c[0], MPFR_RNDU);
    for (int i = 1; i < 4; ++i) {
        mpfr_max(new_hi, new_hi, c[i], MPFR_RNDU);
    }
    mpfr_swap(lo_, new_lo);
    mpfr_swap(hi_, new_hi);
    mpfr_clear(new_lo);
    mpfr_clear(new_hi);
    for (auto& v : c) {
        mpfr_clear(v);
    }
    return *this;
}

Interval Interval::operator-() const
{
    Interval r(Precision{precision()});
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::round_to(Precision prec) const
{
    Interval r(prec);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval& Interval::widen(const Interval& radius)
{
    if (mpfr_sgn(radius.lo_) < 0) {
        throw std::invalid_argument("Interval::widen: negative radius");
    }
    mpfr_sub(lo_, lo_, radius.hi_, MPFR_RNDD);
    mpfr_add(hi_, hi_, radius.hi_, MPFR_RNDU);
    return *this;
}

Interval Interval::magnitude_bound() const
{
    Interval r(Precision{precision()});
    mpfr_abs(r.hi_, hi_, MPFR_RNDU);
    mpfr_t t;
    mpfr_init2(t, precision());
    mpfr_abs(t, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
    mpfr_clear(t);
    return r;
}

std::string Interval::str(int digits) const
{
    std::ostringstream os;
    char* lo = nullptr;
    char* hi = nullptr;
    mpfr_asprintf(&lo, "%.*RDe", digits, lo_);
    mpfr_asprintf(&hi, "%.*RUe", digits, hi_);
    os << '[' << lo << ", " << hi << ']';
    mpfr_free_str(lo);
    mpfr_free_str(hi);
    return os.str();
}

Interval exp(const Interval& x)
{
    Interval r(Precision{x.precision()});
    mpfr_exp(r.lo_, x.lo(), MPFR_RNDD);
    mpfr_exp(r.hi_, x.hi(), MPFR_RNDU);
    return r;
}

Interval log(const Interval& x)
{
    if (!x.certainly_positive()) {
        throw DomainError("log of an interval that is not strictly positive");
    }
    Interval r(Precision{x.precision()});
    mpfr_log(r.lo_, x.lo(), MPFR_RNDD);
    mpfr_log(r.hi_, x.hi(), MPFR_RNDU);
    return r;
}

Interval pow(const Interval& base, const Rational& exponent)
{
    if (exponent == 0) {
        return Interval(1L, Precision{base.precision()});
    }
    return exp(log(base) * Interval(exponent, Precision{base.precision()}));
}

std::ostream& operator<<(std::ostream& os, const Interval& x)
{
    return os << x.str();
}

} // namespace turankit
