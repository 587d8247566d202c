#pragma once

#include "turankit/interval.hpp"
#include "turankit/rational.hpp"

#include <optional>

namespace turankit {

/// A certified value that is exact whenever the underlying Gamma quotient
/// collapses to a Pochhammer ratio.
struct GammaRatio {
    std::optional<Rational> exact;
    Interval enclosure;

    bool is_exact() const { return exact.has_value(); }
    GammaRatio reciprocal() const;
};

/// Exact Bernoulli number B_n.
Rational bernoulli(std::size_t n);

/// Enclosure of ln Gamma(x), x > 0.
///
/// The argument is shifted up to y = x + N past a precision dependent
/// threshold, the Stirling series is summed with exact Bernoulli
/// coefficients, and the first omitted term bounds the remainder:
///
///   ln Gamma(y) = (y - 1/2) ln y - y + ln(2 pi)/2
///                 + sum_{k=1}^{K} B_{2k} / (2k (2k-1) y^{2k-1}) + R_K,
///   |R_K| <= |B_{2K+2}| / ((2K+2)(2K+1) y^{2K+1}),
///
/// then ln Gamma(x) = ln Gamma(y) - ln (x)_N.
Interval log_gamma(const Rational& x, Precision prec);

/// Gamma(x + delta) / Gamma(x) for x > 0, delta >= 0. Exact (x)_delta when
/// delta is an integer.
GammaRatio gamma_ratio(const Rational& x, const Rational& delta, Precision prec);

/// Gamma(b + delta) Gamma(a) / (Gamma(a + delta) Gamma(b)) for a, b > 0.
/// Exact when delta or b - a is an integer.
GammaRatio gamma_cross_ratio(const Rational& a, const Rational& b, const Rational& delta, Precision prec);

} // namespace turankit
