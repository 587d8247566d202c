#include "turankit/series.hpp"

#include <sstream>

namespace turankit {

std::string to_string(SeriesFamily family)
{
    switch (family) {
    case SeriesFamily::UpperFactor: return "upper";
    case SeriesFamily::GammaFactor: return "gamma";
    case SeriesFamily::LowerFactor: return "lower";
    }
    return "?";
}

std::string to_string(RatioTrend trend)
{
    switch (trend) {
    case RatioTrend::StrictlyDecreasing: return "decreasing";
    case RatioTrend::StrictlyIncreasing: return "increasing";
    case RatioTrend::Constant: return "constant";
    case RatioTrend::Mixed: return "neither";
    }
    return "?";
}

std::string to_string(CertifiedSign sign)
{
    switch (sign) {
    case CertifiedSign::Negative: return "negative";
    case CertifiedSign::Zero: return "zero";
    case CertifiedSign::Positive: return "positive";
    case CertifiedSign::Inconclusive: return "inconclusive";
    }
    return "?";
}

CertifiedSign sign_of(const Rational& q)
{
    const int s = sgn(q);
    return s < 0 ? CertifiedSign::Negative : (s > 0 ? CertifiedSign::Positive : CertifiedSign::Zero);
}

CertifiedSign sign_of(const Interval& iv)
{
    if (iv.certainly_positive()) {
        return CertifiedSign::Positive;
    }
    if (iv.certainly_negative()) {
        return CertifiedSign::Negative;
    }
    return CertifiedSign::Inconclusive;
}

WeightRule WeightRule::constant() { return {}; }

WeightRule WeightRule::kummer_upper(const Rational& c) { return WeightRule{{}, {c}, 0}; }

WeightRule WeightRule::gauss_upper(const Rational& b, const Rational& c) { return WeightRule{{b}, {c}, 0}; }

WeightRule WeightRule::kummer_lower(const Rational& a) { return WeightRule{{a}, {}, 1}; }

WeightRule WeightRule::gauss_lower(const Rational& a, const Rational& b) { return WeightRule{{a, b}, {}, 1}; }

WeightRule WeightRule::kummer_gamma(const Rational& c) { return WeightRule{{}, {c}, 1}; }

WeightRule WeightRule::pfq_upper(std::vector<Rational> upper, std::vector<Rational> lower)
{
    return WeightRule{std::move(upper), std::move(lower), 0};
}

std::string WeightRule::describe() const
{
    std::ostringstream os;
    auto list = [&os](const std::vector<Rational>& v) {
        os << '[';
        for (std::size_t i = 0; i < v.size(); ++i) {
            os << (i ? "," : "") << turankit::to_string(v[i]);
        }
        os << ']';
    };
    os << "upper=";
    list(upper);
    os << " lower=";
    list(lower);
    os << " factorial_power=" << factorial_power;
    return os.str();
}

void validate(const HypSeriesSpec& spec)
{
    for (const auto& u : spec.weights.upper) {
        if (u <= 0) {
            throw DomainError("weight parameter must be positive, got " + to_string(u));
        }
    }
    for (const auto& l : spec.weights.lower) {
        if (l <= 0) {
            throw DomainError("lower weight parameter must be positive, got " + to_string(l));
        }
    }
}

namespace {

// w_n / w_{n-1} for n >= 1.
Rational weight_step(const WeightRule& w, std::size_t n)
{
    Rational r(1);
    const Rational shift(static_cast<long>(n) - 1);
    for (const auto& u : w.upper) {
        r *= u + shift;
    }
    for (const auto& l : w.lower) {
        r /= l + shift;
    }
    for (unsigned i = 0; i < w.factorial_power; ++i) {
        r /= Rational(static_cast<long>(n));
    }
    return r;
}

void require_family(const HypSeriesSpec& spec, SeriesFamily family, const char* what)
{
    if (spec.family != family) {
        throw std::invalid_argument(std::string(what) + " needs the " + to_string(family) + " family");
    }
}

void require_no_pole(const Rational& p, std::size_t order, const char* name)
{
    if (is_nonpositive_integer(p) && Rational(-p) < Rational(static_cast<long>(order))) {
        throw PoleError(std::string("(") + name + ")_n vanishes for " + name + " = " + to_string(p));
    }
}

} // namespace

Rational weight_sequence(const HypSeriesSpec& spec, std::size_t n)
{
    validate(spec);
    Rational w(1);
    for (std::size_t i = 1; i <= n; ++i) {
        w *= weight_step(spec.weights, i);
    }
    return w;
}

std::vector<Rational> weight_table(const HypSeriesSpec& spec)
{
    validate(spec);
    std::vector<Rational> out;
    out.reserve(spec.order + 1);
    out.emplace_back(1);
    for (std::size_t n = 1; n <= spec.order; ++n) {
        out.push_back(out.back() * weight_step(spec.weights, n));
    }
    return out;
}

RatioTrend weight_ratio_trend(const HypSeriesSpec& spec)
{
    validate(spec);
    bool any_up = false;
    bool any_down = false;
    bool any_flat = false;
    Rational prev = weight_step(spec.weights, 1);
    for (std::size_t n = 2; n <= spec.order; ++n) {
        Rational cur = weight_step(spec.weights, n);
        const int c = cmp(cur, prev);
        any_up = any_up || c > 0;
        any_down = any_down || c < 0;
        any_flat = any_flat || c == 0;
        prev = std::move(cur);
    }
    if (!any_up && !any_down) {
        return RatioTrend::Constant;
    }
    if (any_down && !any_up && !any_flat) {
        return RatioTrend::StrictlyDecreasing;
    }
    if (any_up && !any_down && !any_flat) {
        return RatioTrend::StrictlyIncreasing;
    }
    return RatioTrend::Mixed;
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("TruncatedSeries needs at least one coefficient");
    }
}

TruncatedSeries TruncatedSeries::zero(std::size_t order)
{
    return TruncatedSeries(std::vector<Rational>(order + 1, Rational(0)));
}

void TruncatedSeries::require_same_order(const TruncatedSeries& rhs) const
{
    if (order() != rhs.order()) {
        throw std::invalid_argument("truncated series of different orders");
    }
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const
{
    require_same_order(rhs);
    std::vector<Rational> out(coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const
{
    require_same_order(rhs);
    std::vector<Rational> out(coeffs_);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += rhs.coeffs_[i];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const
{
    require_same_order(rhs);
    std::vector<Rational> out(coeffs_);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= rhs.coeffs_[i];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::operator-() const
{
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) {
        c = -c;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries build_series(const HypSeriesSpec& spec, const Rational& a)
{
    const auto weights = weight_table(spec);
    const std::size_t order = spec.order;
    std::vector<Rational> coeffs;
    coeffs.reserve(order + 1);
    switch (spec.family) {
    case SeriesFamily::UpperFactor: {
        // (a)_n / n!, built incrementally.
        Rational factor(1);
        for (std::size_t n = 0; n <= order; ++n) {
            if (n > 0) {
                factor *= (a + Rational(static_cast<long>(n) - 1)) / Rational(static_cast<long>(n));
            }
            coeffs.push_back(weights[n] * factor);
        }
        break;
    }
    case SeriesFamily::GammaFactor: {
        if (a <= 0) {
            throw DomainError("gamma family needs a positive shift parameter, got " + to_string(a));
        }
        const auto poch = pochhammer_table(a, order);
        for (std::size_t n = 0; n <= order; ++n) {
            coeffs.push_back(weights[n] * poch[n]);
        }
        break;
    }
    case SeriesFamily::LowerFactor: {
        require_no_pole(a, order, "a");
        const auto poch = pochhammer_table(a, order);
        for (std::size_t n = 0; n <= order; ++n) {
            coeffs.push_back(weights[n] / poch[n]);
        }
        break;
    }
    }
    return TruncatedSeries(std::move(coeffs));
}

std::vector<Interval> gamma_series_enclosure(const HypSeriesSpec& spec, const Rational& a, Precision prec)
{
    require_family(spec, SeriesFamily::GammaFactor, "gamma_series_enclosure");
    const TruncatedSeries reduced = build_series(spec, a);
    const Interval gamma_a = exp(log_gamma(a, prec));
    std::vector<Interval> out;
    out.reserve(reduced.order() + 1);
    for (const auto& c : reduced.coefficients()) {
        out.push_back(gamma_a * Interval(c, prec));
    }
    return out;
}

std::vector<Rational> phi_coefficients(const HypSeriesSpec& spec, const Rational& a, const Rational& b,
                                       const Rational& delta)
{
    require_family(spec, SeriesFamily::UpperFactor, "phi_coefficients");
    const TruncatedSeries phi = build_series(spec, a + delta) * build_series(spec, b)
                                - build_series(spec, b + delta) * build_series(spec, a);
    return {phi.coefficients().begin(), phi.coefficients().end()};
}

Rational MkProfile::sum() const
{
    Rational s(0);
    for (const auto& v : values) {
        s += v;
    }
    return s;
}

int MkProfile::sign_changes() const
{
    int changes = 0;
    int last = 0;
    for (const auto& v : values) {
        const int s = sgn(v);
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++changes;
        }
        last = s;
    }
    return changes;
}

MkProfile mk_profile(const Rational& a, const Rational& b, const Rational& delta, std::size_t m)
{
    if (m < 2) {
        throw std::invalid_argument("mk_profile needs m >= 2");
    }
    const auto pa = pochhammer_table(a, m);
    const auto pb = pochhammer_table(b, m);
    const auto pad = pochhammer_table(a + delta, m);
    const auto pbd = pochhammer_table(b + delta, m);

    MkProfile profile;
    profile.m = m;
    for (std::size_t k = 0; 2 * k <= m; ++k) {
        const std::size_t j = m - k;
        const Rational denom(factorial(k) * factorial(j));
        Rational numer = pad[k] * pb[j] - pa[k] * pbd[j];
        if (2 * k < m) {
            numer += pad[j] * pb[k] - pa[j] * pbd[k];
        }
        profile.values.push_back(numer / denom);
    }
    return profile;
}

PsiExpansion psi_coefficients(const HypSeriesSpec& spec, const Rational& a, const Rational& b,
                              const Rational& delta, Precision prec)
{
    require_family(spec, SeriesFamily::GammaFactor, "psi_coefficients");
    if (a <= 0 || b <= 0 || delta < 0) {
        throw DomainError("psi_coefficients needs a, b > 0 and delta >= 0");
    }
    // Gamma(x+k) = Gamma(x) (x)_k factors the Gamma values out of each product.
    const TruncatedSeries s1 = build_series(spec, a + delta) * build_series(spec, b);
    const TruncatedSeries s2 = build_series(spec, b + delta) * build_series(spec, a);

    PsiExpansion out{gamma_cross_ratio(a, b, delta, prec), {}};
    out.coefficients.reserve(s1.order() + 1);
    for (std::size_t m = 0; m <= s1.order(); ++m) {
        PsiCoefficient c{s1[m], s2[m], CertifiedSign::Inconclusive};
        if (out.threshold.exact) {
            c.sign = sign_of(Rational(c.s1 - *out.threshold.exact * c.s2));
        } else {
            // S2 > 0, so compare the exact quotient S1/S2 against the threshold.
            c.sign = sign_of(Interval(Rational(c.s1 / c.s2), prec) - out.threshold.enclosure);
        }
        out.coefficients.push_back(std::move(c));
    }
    return out;
}

std::vector<Rational> lambda_coefficients(const HypSeriesSpec& spec, const Rational& a, const Rational& b,
                                          const Rational& delta)
{
    require_family(spec, SeriesFamily::LowerFactor, "lambda_coefficients");
    const TruncatedSeries lambda = build_series(spec, a + delta) * build_series(spec, b)
                                   - build_series(spec, b + delta) * build_series(spec, a);
    return {lambda.coefficients().begin(), lambda.coefficients().end()};
}

} // namespace turankit
