#include "turankit/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

namespace turankit {

namespace {

// Guard bits carried through the Stirling evaluation.
constexpr mpfr_prec_t kGuardBits = 32;

struct BernoulliCache {
    std::mutex mutex;
    std::vector<Rational> values{Rational(1)};
};

BernoulliCache& bernoulli_cache()
{
    static BernoulliCache cache;
    return cache;
}

Integer binomial(std::size_t n, std::size_t k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational two_pow_neg(mpfr_prec_t bits)
{
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(bits));
    return Rational(Integer(1), den);
}

} // namespace

GammaRatio GammaRatio::reciprocal() const
{
    const Precision prec{enclosure.precision()};
    if (exact) {
        Rational inv = 1 / *exact;
        return GammaRatio{inv, Interval(inv, prec)};
    }
    return GammaRatio{std::nullopt, Interval(1L, prec) / enclosure};
}

Rational bernoulli(std::size_t n)
{
    auto& cache = bernoulli_cache();
    std::lock_guard lock(cache.mutex);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
    while (cache.values.size() <= n) {
        const std::size_t m = cache.values.size();
        Rational acc(0);
        for (std::size_t j = 0; j < m; ++j) {
            acc += Rational(binomial(m + 1, j)) * cache.values[j];
        }
        cache.values.push_back(-acc / Rational(binomial(m + 1, m)));
    }
    return cache.values[n];
}

Interval log_gamma(const Rational& x, Precision prec)
{
    if (x <= 0) {
        throw DomainError("log_gamma: argument must be positive, got " + to_string(x));
    }
    const Precision work = prec.plus(kGuardBits);

    // Stirling terms shrink roughly like exp(-2 pi y); y >= w/4 is ample.
    const long threshold = std::max<long>(10, static_cast<long>(work.bits / 4));
    Rational y = x;
    std::size_t shift = 0;
    if (y < threshold) {
        Rational gap = Rational(threshold) - y;
        mpz_class steps;
        mpz_cdiv_q(steps.get_mpz_t(), gap.get_num_mpz_t(), gap.get_den_mpz_t());
        shift = steps.get_ui();
        y += shift;
    }

    const Rational target = two_pow_neg(work.bits + 8);
    const Rational y_sq = y * y;
    Rational correction(0);
    Rational y_pow = y; // y^{2k-1}
    Rational remainder;
    for (std::size_t k = 1;; ++k) {
        const auto kk = static_cast<long>(2 * k);
        correction += bernoulli(2 * k) / (Rational(kk * (kk - 1)) * y_pow);
        y_pow *= y_sq;
        remainder = abs(bernoulli(2 * k + 2)) / (Rational((kk + 2) * (kk + 1)) * y_pow);
        if (remainder < target || k > 400) {
            break;
        }
    }

    const Interval y_iv(y, work);
    Interval two_pi = Interval::pi(work) * Interval(2L, work);
    Interval result = (y_iv - Interval(Rational(1, 2), work)) * log(y_iv) - y_iv
                      + log(two_pi) / Interval(2L, work) + Interval(correction, work);
    result.widen(Interval(remainder, work));
    if (shift > 0) {
        result -= log(Interval(pochhammer(x, shift), work));
    }
    return result.round_to(prec);
}

GammaRatio gamma_ratio(const Rational& x, const Rational& delta, Precision prec)
{
    if (x <= 0) {
        throw DomainError("gamma_ratio: x must be positive, got " + to_string(x));
    }
    if (delta < 0) {
        throw DomainError("gamma_ratio: delta must be nonnegative, got " + to_string(delta));
    }
    if (is_integer(delta)) {
        Rational value = pochhammer(x, delta.get_num().get_ui());
        return GammaRatio{value, Interval(value, prec)};
    }
    const Precision work = prec.plus(kGuardBits);
    Interval diff = log_gamma(x + delta, work) - log_gamma(x, work);
    return GammaRatio{std::nullopt, exp(diff).round_to(prec)};
}

GammaRatio gamma_cross_ratio(const Rational& a, const Rational& b, const Rational& delta, Precision prec)
{
    if (a <= 0 || b <= 0) {
        throw DomainError("gamma_cross_ratio: a and b must be positive");
    }
    if (delta < 0) {
        throw DomainError("gamma_cross_ratio: delta must be nonnegative");
    }
    if (is_integer(delta)) {
        const auto n = delta.get_num().get_ui();
        Rational value = pochhammer(b, n) / pochhammer(a, n);
        return GammaRatio{value, Interval(value, prec)};
    }
    const Rational gap = b - a;
    if (is_integer(gap)) {
        Rational value;
        if (gap >= 0) {
            const auto n = gap.get_num().get_ui();
            value = pochhammer(a + delta, n) / pochhammer(a, n);
        } else {
            const auto n = Rational(-gap).get_num().get_ui();
            value = pochhammer(b, n) / pochhammer(b + delta, n);
        }
        return GammaRatio{value, Interval(value, prec)};
    }
    const Precision work = prec.plus(kGuardBits);
    Interval lg = log_gamma(b + delta, work) + log_gamma(a, work) - log_gamma(a + delta, work) - log_gamma(b, work);
    return GammaRatio{std::nullopt, exp(lg).round_to(prec)};
}

} // namespace turankit
