#pragma once

#include "turankit/gamma.hpp"
#include "turankit/interval.hpp"
#include "turankit/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace turankit {

/// Which parameter-dependent factor multiplies the weights w_n.
enum class SeriesFamily {
    UpperFactor, ///< f(a,x) = sum w_n (a)_n / n! x^n
    GammaFactor, ///< g(a,x) = sum w_n Gamma(a+n) x^n
    LowerFactor, ///< h(a,x) = sum w_n / (a)_n x^n
};

enum class RatioTrend { StrictlyDecreasing, StrictlyIncreasing, Constant, Mixed };

enum class CertifiedSign { Negative, Zero, Positive, Inconclusive };

std::string to_string(SeriesFamily family);
std::string to_string(RatioTrend trend);
std::string to_string(CertifiedSign sign);
CertifiedSign sign_of(const Rational& q);
CertifiedSign sign_of(const Interval& iv);

/// Positive weights w_n = prod (u_i)_n / (prod (l_j)_n * (n!)^p).
struct WeightRule {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    unsigned factorial_power = 0;

    static WeightRule constant();
    /// 1F1 in its upper parameter: 1/(c)_n.
    static WeightRule kummer_upper(const Rational& c);
    /// 2F1 in its first upper parameter: (b)_n/(c)_n.
    static WeightRule gauss_upper(const Rational& b, const Rational& c);
    /// 1F1 in its lower parameter: (a)_n/n!.
    static WeightRule kummer_lower(const Rational& a);
    /// 2F1 in its lower parameter: (a)_n (b)_n/n!.
    static WeightRule gauss_lower(const Rational& a, const Rational& b);
    /// Gamma(a) 1F1(a;c;x): 1/((c)_n n!).
    static WeightRule kummer_gamma(const Rational& c);
    /// pFq in one upper parameter: prod (a_i)_n / prod (b_j)_n.
    static WeightRule pfq_upper(std::vector<Rational> upper, std::vector<Rational> lower);

    std::string describe() const;
};

struct HypSeriesSpec {
    SeriesFamily family = SeriesFamily::UpperFactor;
    WeightRule weights;
    std::size_t order = 40;
};

/// Throws DomainError unless every weight parameter is positive.
void validate(const HypSeriesSpec& spec);

Rational weight_sequence(const HypSeriesSpec& spec, std::size_t n);
std::vector<Rational> weight_table(const HypSeriesSpec& spec);

/// Classifies w_n / w_{n-1} for 1 <= n <= order.
RatioTrend weight_ratio_trend(const HypSeriesSpec& spec);

/// Coefficients c_0..c_M of a formal power series truncated at order M.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<Rational> coeffs);
    static TruncatedSeries zero(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
    std::span<const Rational> coefficients() const { return coeffs_; }

    /// Cauchy product, truncated at the common order.
    TruncatedSeries operator*(const TruncatedSeries& rhs) const;
    TruncatedSeries operator+(const TruncatedSeries& rhs) const;
    TruncatedSeries operator-(const TruncatedSeries& rhs) const;
    TruncatedSeries operator-() const;
    bool operator==(const TruncatedSeries&) const = default;

private:
    void require_same_order(const TruncatedSeries& rhs) const;
    std::vector<Rational> coeffs_;
};

/// The family's series in the shift parameter a, up to spec.order.
/// For GammaFactor the returned coefficients are w_n (a)_n; the true ones
/// are Gamma(a) times these (see gamma_series_enclosure).
TruncatedSeries build_series(const HypSeriesSpec& spec, const Rational& a);

/// Certified enclosures of w_n Gamma(a+n) for the GammaFactor family.
std::vector<Interval> gamma_series_enclosure(const HypSeriesSpec& spec, const Rational& a, Precision prec);

/// phi_m of f(a+d,x) f(b,x) - f(b+d,x) f(a,x), m = 0..order, by Cauchy products.
std::vector<Rational> phi_coefficients(const HypSeriesSpec& spec, const Rational& a, const Rational& b,
                                       const Rational& delta);

/// Half-range decomposition phi_m = sum_{k <= m/2} f_k f_{m-k} M_k. The M_k
/// do not depend on the weights.
struct MkProfile {
    std::size_t m = 0;
    std::vector<Rational> values;

    Rational sum() const;
    /// Sign changes along the sequence, zeros skipped.
    int sign_changes() const;
};

MkProfile mk_profile(const Rational& a, const Rational& b, const Rational& delta, std::size_t m);

/// psi_m = Gamma(a+d) Gamma(b) S1 - Gamma(b+d) Gamma(a) S2 with exact S1, S2.
struct PsiCoefficient {
    Rational s1;
    Rational s2;
    CertifiedSign sign = CertifiedSign::Inconclusive;
};

struct PsiExpansion {
    /// Gamma(b+d) Gamma(a) / (Gamma(a+d) Gamma(b)); psi_m < 0 iff S1 < threshold * S2.
    GammaRatio threshold;
    std::vector<PsiCoefficient> coefficients;

    bool exact() const { return threshold.is_exact(); }
};

PsiExpansion psi_coefficients(const HypSeriesSpec& spec, const Rational& a, const Rational& b,
                              const Rational& delta, Precision prec);

/// lambda_m of h(a+d,x) h(b,x) - h(b+d,x) h(a,x), m = 0..order.
std::vector<Rational> lambda_coefficients(const HypSeriesSpec& spec, const Rational& a, const Rational& b,
                                          const Rational& delta);

} // namespace turankit
