#pragma once

#include "turankit/hypergeometric.hpp"
#include "turankit/lemmas.hpp"
#include "turankit/series.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace turankit {

enum class Verdict { Verified, Violated, Inconclusive };

std::string to_string(Verdict v);

/// Violated beats Inconclusive beats Verified.
Verdict combine(Verdict lhs, Verdict rhs);

using Params = std::vector<std::pair<std::string, Rational>>;

std::string describe(const Params& params);

/// Sign of each coefficient of a product difference against the claimed sign.
struct SignReport {
    std::string theorem;
    std::string family; ///< weight rule description
    Params params;
    std::size_t order = 0;
    /// First index at which the claim applies (2 for phi, 0 for psi, 1 for lambda).
    std::size_t first_claimed = 0;
    /// Claimed sign on indices >= first_claimed: +1, -1, or 0 (identically zero).
    int expected_sign = 0;
    std::vector<CertifiedSign> signs;
    std::optional<std::size_t> first_violation;
    /// Every M_k profile for 2 <= m <= order sums to 0, starts negative and changes sign once.
    std::optional<bool> mk_single_sign_change;
    std::optional<bool> mk_sum_zero;
    bool degenerate = false;  ///< a = b, all coefficients zero
    bool escalated = false;   ///< recomputed at doubled precision
    std::size_t inconclusive = 0;
    /// Undecided indices at the starting precision, before any escalation.
    std::size_t initially_inconclusive = 0;
    Verdict verdict = Verdict::Inconclusive;
    std::string reason;
};

/// Upper-factor family. The claimed sign follows the weight-ratio trend
/// (decreasing: positive, increasing: negative, constant: zero) and flips
/// when a > b. Mixed trends give Inconclusive. Requires a, b >= 0, delta > 0.
SignReport verify_theorem1(const HypSeriesSpec& spec, const Rational& a, const Rational& b, const Rational& delta);

/// Gamma-factor family: psi_m certified negative for b > a (positive for a > b).
/// Inconclusive indices trigger one recomputation at doubled precision.
SignReport verify_theorem2(const HypSeriesSpec& spec, const Rational& a, const Rational& b, const Rational& delta,
                           Precision prec = Precision::standard());

/// Lower-factor family: lambda_m < 0 exactly for m >= 1 when b > a.
SignReport verify_theorem3(const HypSeriesSpec& spec, const Rational& a, const Rational& b, const Rational& delta);

/// f(s, x) for an upper-factor weight rule as a hypergeometric series.
PFQSpec upper_family_pfq(const WeightRule& weights, const Rational& s);

/// Evaluates a one-parameter family at (s, x).
using FamilyEval = std::function<EvalResult(const Rational& s, const Rational& x, const EvalOptions& opts)>;

FamilyEval upper_family_eval(const WeightRule& weights);

struct TwoSidedPoint {
    Rational x;
    Interval ratio;
    Verdict verdict = Verdict::Inconclusive;
    std::string note;
};

/// Certified check of bound < f(b+d) f(a) / (f(a+d) f(b)) < 1 pointwise.
struct TwoSidedBoundReport {
    std::string theorem;
    Params params;
    GammaRatio lower_bound;
    std::vector<TwoSidedPoint> points;
    /// Relative gap to the lower bound at the point farthest from 0, below the sharpness tolerance.
    std::optional<bool> approaches_lower;
    double gap_at_extreme = 0.0;
    Verdict verdict = Verdict::Inconclusive;
};

TwoSidedBoundReport check_two_sided(std::string theorem, Params params, const FamilyEval& f, const Rational& a,
                                    const Rational& b, const Rational& delta, GammaRatio lower_bound,
                                    const std::vector<Rational>& x_grid, const EvalOptions& opts,
                                    std::optional<double> sharpness_tol = std::nullopt);

/// Two-sided bounds Gamma(a+d)Gamma(b)/(Gamma(b+d)Gamma(a)) < Q < 1 for an
/// upper-factor spec with decreasing weight ratios; b > a > 0, positive x.
TwoSidedBoundReport verify_corollary_twosided(const HypSeriesSpec& spec, const Rational& a, const Rational& b,
                                              const Rational& delta, const std::vector<Rational>& x_grid,
                                              const EvalOptions& opts, std::optional<double> sharpness_tol = 0.05);

/// b = a + delta: Gamma(a+d)^2/(Gamma(a+2d)Gamma(a)) < f(a+2d) f(a)/f(a+d)^2 < 1; a/(a+1) for delta = 1.
TwoSidedBoundReport verify_turan(const HypSeriesSpec& spec, const Rational& a, const Rational& delta,
                                 const std::vector<Rational>& x_grid, const EvalOptions& opts);

enum class Curvature {
    Concave, ///< f(p+d)^2 > f(p) f(p+2d)
    Convex,  ///< f(p+d)^2 < f(p) f(p+2d)
};

struct CurvaturePoint {
    Rational p;
    Rational x;
    Interval middle_squared;
    Interval outer_product;
    Verdict verdict = Verdict::Inconclusive;
    std::string note;
};

struct CurvatureReport {
    std::string theorem;
    Params params;
    Curvature claim = Curvature::Concave;
    std::vector<CurvaturePoint> points;
    Verdict verdict = Verdict::Inconclusive;
};

/// Certified log-concavity or log-convexity of p -> f(p, x) at each (p, x).
/// Undecided points are retried once at doubled precision.
CurvatureReport check_curvature(std::string theorem, Params params, const FamilyEval& f, Curvature claim,
                                const std::vector<Rational>& p_grid, const Rational& delta,
                                const std::vector<Rational>& x_grid, const EvalOptions& opts);

/// Certified strict monotonicity of p -> f(p+d, x)/f(p, x) along an increasing p grid.
struct RatioSequenceReport {
    std::string theorem;
    Params params;
    bool increasing = false;
    std::vector<Interval> ratios;
    std::optional<std::size_t> first_violation;
    std::size_t undecided = 0;
    Verdict verdict = Verdict::Inconclusive;
};

RatioSequenceReport check_ratio_sequence(std::string theorem, Params params, const FamilyEval& f, bool increasing,
                                         const std::vector<Rational>& p_grid, const Rational& delta,
                                         const Rational& x, const EvalOptions& opts);

/// pFq in one upper parameter: screens the e-chain, then checks the product
/// difference coefficients with the sign the chain predicts (negative under
/// the increasing chain, positive under the decreasing one). Inconclusive
/// when neither chain holds.
SignReport verify_pfq_chain(const std::vector<Rational>& aList, const std::vector<Rational>& bList,
                            const Rational& alpha, const Rational& beta, const Rational& delta, std::size_t order);

} // namespace turankit
