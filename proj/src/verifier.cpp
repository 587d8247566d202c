#include "turankit/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace turankit {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

Verdict combine(Verdict lhs, Verdict rhs)
{
    if (lhs == Verdict::Violated || rhs == Verdict::Violated) return Verdict::Violated;
    if (lhs == Verdict::Inconclusive || rhs == Verdict::Inconclusive) return Verdict::Inconclusive;
    return Verdict::Verified;
}

std::string describe(const Params& params)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < params.size(); ++i) {
        os << (i ? " " : "") << params[i].first << "=" << to_string(params[i].second);
    }
    return os.str();
}

namespace {

int expected_from_trend(RatioTrend trend)
{
    switch (trend) {
    case RatioTrend::StrictlyDecreasing: return 1;
    case RatioTrend::StrictlyIncreasing: return -1;
    case RatioTrend::Constant: return 0;
    case RatioTrend::Mixed: return 0;
    }
    return 0;
}

bool sign_matches(CertifiedSign s, int expected)
{
    switch (s) {
    case CertifiedSign::Positive: return expected > 0;
    case CertifiedSign::Negative: return expected < 0;
    case CertifiedSign::Zero: return expected == 0;
    case CertifiedSign::Inconclusive: return false;
    }
    return false;
}

// Indices before first_claimed must be exactly zero; the rest must carry the expected sign.
void grade(SignReport& rep)
{
    rep.first_violation.reset();
    rep.inconclusive = 0;
    for (std::size_t i = 0; i < rep.signs.size(); ++i) {
        const CertifiedSign s = rep.signs[i];
        if (s == CertifiedSign::Inconclusive) {
            ++rep.inconclusive;
            continue;
        }
        const bool ok = i < rep.first_claimed ? s == CertifiedSign::Zero : sign_matches(s, rep.expected_sign);
        if (!ok && !rep.first_violation) {
            rep.first_violation = i;
        }
    }
    if (rep.first_violation) {
        rep.verdict = Verdict::Violated;
    } else if (rep.inconclusive > 0) {
        rep.verdict = Verdict::Inconclusive;
    } else {
        rep.verdict = Verdict::Verified;
    }
}

void require_family(const HypSeriesSpec& spec, SeriesFamily family, const char* what)
{
    validate(spec);
    if (spec.family != family) {
        throw std::invalid_argument(std::string(what) + ": expected the " + to_string(family) + " family");
    }
}

Params shift_params(const Rational& a, const Rational& b, const Rational& delta)
{
    return {{"a", a}, {"b", b}, {"delta", delta}};
}

} // namespace

SignReport verify_theorem1(const HypSeriesSpec& spec, const Rational& a, const Rational& b, const Rational& delta)
{
    require_family(spec, SeriesFamily::UpperFactor, "verify_theorem1");
    if (a < 0 || b < 0 || delta <= 0) {
        throw DomainError("verify_theorem1: requires a, b >= 0 and delta > 0");
    }
    SignReport rep;
    rep.theorem = "thm1";
    rep.family = spec.weights.describe();
    rep.params = shift_params(a, b, delta);
    rep.order = spec.order;
    rep.first_claimed = 2;
    rep.degenerate = a == b;

    const RatioTrend trend = weight_ratio_trend(spec);
    rep.expected_sign = rep.degenerate ? 0 : expected_from_trend(trend) * sign(b - a);
    for (const auto& c : phi_coefficients(spec, a, b, delta)) {
        rep.signs.push_back(sign_of(c));
    }
    grade(rep);

    if (!rep.degenerate && spec.order >= 2) {
        const Rational lo = std::min(a, b);
        const Rational hi = std::max(a, b);
        bool sum_zero = true;
        bool single = true;
        for (std::size_t m = 2; m <= spec.order; ++m) {
            const MkProfile prof = mk_profile(lo, hi, delta, m);
            sum_zero = sum_zero && prof.sum() == 0;
            single = single && prof.values.front() < 0 && prof.sign_changes() == 1;
        }
        rep.mk_sum_zero = sum_zero;
        rep.mk_single_sign_change = single;
        if (!sum_zero || !single) {
            rep.verdict = Verdict::Violated;
            rep.reason = "M_k profile lacks the zero sum or single sign change";
        }
    }
    const bool mk_ok = rep.mk_sum_zero.value_or(true) && rep.mk_single_sign_change.value_or(true);
    if (trend == RatioTrend::Mixed && !rep.degenerate && mk_ok) {
        rep.first_violation.reset();
        rep.verdict = Verdict::Inconclusive;
        rep.reason = "weight ratios are not monotone up to the truncation order";
    }
    if (rep.verdict == Verdict::Violated && rep.reason.empty()) {
        rep.reason = "coefficient sign differs from the " + to_string(trend) + " weight-ratio claim";
    }
    return rep;
}

SignReport verify_theorem2(const HypSeriesSpec& spec, const Rational& a, const Rational& b, const Rational& delta,
                           Precision prec)
{
    require_family(spec, SeriesFamily::GammaFactor, "verify_theorem2");
    if (a <= 0 || b <= 0 || delta <= 0) {
        throw DomainError("verify_theorem2: requires a, b, delta > 0");
    }
    SignReport rep;
    rep.theorem = "thm2";
    rep.family = spec.weights.describe();
    rep.params = shift_params(a, b, delta);
    rep.order = spec.order;
    rep.first_claimed = 0;
    rep.degenerate = a == b;
    rep.expected_sign = -sign(b - a);

    auto fill = [&](Precision p) {
        rep.signs.clear();
        for (const auto& c : psi_coefficients(spec, a, b, delta, p).coefficients) {
            rep.signs.push_back(c.sign);
        }
        grade(rep);
    };
    fill(prec);
    rep.initially_inconclusive = rep.inconclusive;
    if (rep.inconclusive > 0) {
        rep.escalated = true;
        fill(prec.doubled());
    }
    if (rep.verdict == Verdict::Inconclusive) {
        rep.reason = std::to_string(rep.inconclusive) + " indices undecided after precision escalation";
    } else if (rep.verdict == Verdict::Violated) {
        rep.reason = "psi coefficient has the wrong certified sign";
    }
    return rep;
}

SignReport verify_theorem3(const HypSeriesSpec& spec, const Rational& a, const Rational& b, const Rational& delta)
{
    require_family(spec, SeriesFamily::LowerFactor, "verify_theorem3");
    if (a <= 0 || b <= 0 || delta <= 0) {
        throw DomainError("verify_theorem3: requires a, b, delta > 0");
    }
    SignReport rep;
    rep.theorem = "thm3";
    rep.family = spec.weights.describe();
    rep.params = shift_params(a, b, delta);
    rep.order = spec.order;
    rep.first_claimed = 1;
    rep.degenerate = a == b;
    rep.expected_sign = -sign(b - a);
    for (const auto& c : lambda_coefficients(spec, a, b, delta)) {
        rep.signs.push_back(sign_of(c));
    }
    grade(rep);
    if (rep.verdict == Verdict::Violated) {
        rep.reason = "lambda coefficient has the wrong sign";
    }
    return rep;
}

PFQSpec upper_family_pfq(const WeightRule& weights, const Rational& s)
{
    PFQSpec spec{weights.upper, weights.lower};
    spec.upper.push_back(s);
    for (unsigned i = 0; i < weights.factorial_power; ++i) {
        spec.lower.push_back(Rational(1));
    }
    return spec;
}

FamilyEval upper_family_eval(const WeightRule& weights)
{
    return [weights](const Rational& s, const Rational& x, const EvalOptions& opts) {
        return eval_hypergeometric(upper_family_pfq(weights, s), x, opts);
    };
}

namespace {

EvalOptions doubled(const EvalOptions& opts)
{
    EvalOptions o = opts;
    o.precision = opts.precision.doubled();
    o.term_cap = opts.term_cap * 2;
    return o;
}

} // namespace

TwoSidedBoundReport check_two_sided(std::string theorem, Params params, const FamilyEval& f, const Rational& a,
                                    const Rational& b, const Rational& delta, GammaRatio lower_bound,
                                    const std::vector<Rational>& x_grid, const EvalOptions& opts,
                                    std::optional<double> sharpness_tol)
{
    TwoSidedBoundReport rep;
    rep.theorem = std::move(theorem);
    rep.params = std::move(params);
    rep.lower_bound = std::move(lower_bound);
    rep.verdict = Verdict::Verified;

    const Interval& bound = rep.lower_bound.enclosure;
    for (const auto& x : x_grid) {
        TwoSidedPoint pt{x, Interval(opts.precision), Verdict::Inconclusive, {}};
        for (const EvalOptions& o : {opts, doubled(opts)}) {
            try {
                Interval q = f(b + delta, x, o).value;
                q *= f(a, x, o).value;
                q /= f(a + delta, x, o).value;
                q /= f(b, x, o).value;
                pt.ratio = q;
                const Interval one(Rational(1), o.precision);
                if (q.certainly_greater(one) || q.certainly_less(bound)) {
                    pt.verdict = Verdict::Violated;
                } else if (q.certainly_less(one) && q.certainly_greater(bound)) {
                    pt.verdict = Verdict::Verified;
                } else {
                    pt.verdict = Verdict::Inconclusive;
                    pt.note = "ratio interval overlaps a bound";
                }
            } catch (const DomainError& e) {
                pt.verdict = Verdict::Inconclusive;
                pt.note = e.what();
            }
            if (pt.verdict != Verdict::Inconclusive) break;
        }
        rep.verdict = combine(rep.verdict, pt.verdict);
        rep.points.push_back(std::move(pt));
    }

    if (sharpness_tol && !rep.points.empty()) {
        auto far = std::max_element(rep.points.begin(), rep.points.end(),
                                     [](const TwoSidedPoint& l, const TwoSidedPoint& r) { return abs(l.x) < abs(r.x); });
        const double lb = bound.mid_double();
        rep.gap_at_extreme = std::fabs(far->ratio.mid_double() - lb) / lb;
        rep.approaches_lower = std::isfinite(rep.gap_at_extreme) && rep.gap_at_extreme < *sharpness_tol;
    }
    return rep;
}

TwoSidedBoundReport verify_corollary_twosided(const HypSeriesSpec& spec, const Rational& a, const Rational& b,
                                              const Rational& delta, const std::vector<Rational>& x_grid,
                                              const EvalOptions& opts, std::optional<double> sharpness_tol)
{
    require_family(spec, SeriesFamily::UpperFactor, "verify_corollary_twosided");
    if (weight_ratio_trend(spec) != RatioTrend::StrictlyDecreasing) {
        throw DomainError("verify_corollary_twosided: weight ratios must be decreasing");
    }
    if (!(b > a && a > 0 && delta > 0)) {
        throw DomainError("verify_corollary_twosided: requires b > a > 0 and delta > 0");
    }
    for (const auto& x : x_grid) {
        if (x <= 0) throw DomainError("verify_corollary_twosided: x must be positive");
    }
    auto rep = check_two_sided("cor1", shift_params(a, b, delta), upper_family_eval(spec.weights), a, b, delta,
                               gamma_cross_ratio(a, b, delta, opts.precision).reciprocal(), x_grid, opts,
                               sharpness_tol);
    return rep;
}

TwoSidedBoundReport verify_turan(const HypSeriesSpec& spec, const Rational& a, const Rational& delta,
                                 const std::vector<Rational>& x_grid, const EvalOptions& opts)
{
    auto rep = verify_corollary_twosided(spec, a, a + delta, delta, x_grid, opts, std::nullopt);
    rep.theorem = "turan";
    rep.params = {{"a", a}, {"delta", delta}};
    return rep;
}

CurvatureReport check_curvature(std::string theorem, Params params, const FamilyEval& f, Curvature claim,
                                const std::vector<Rational>& p_grid, const Rational& delta,
                                const std::vector<Rational>& x_grid, const EvalOptions& opts)
{
    CurvatureReport rep;
    rep.theorem = std::move(theorem);
    rep.params = std::move(params);
    rep.claim = claim;
    rep.verdict = Verdict::Verified;
    for (const auto& p : p_grid) {
        for (const auto& x : x_grid) {
            CurvaturePoint pt{p, x, Interval(opts.precision), Interval(opts.precision), Verdict::Inconclusive, {}};
            for (const EvalOptions& o : {opts, doubled(opts)}) {
                try {
                    Interval mid = f(p + delta, x, o).value;
                    pt.middle_squared = mid;
                    pt.middle_squared *= mid;
                    pt.outer_product = f(p, x, o).value;
                    pt.outer_product *= f(p + 2 * delta, x, o).value;
                    const bool greater = pt.middle_squared.certainly_greater(pt.outer_product);
                    const bool less = pt.middle_squared.certainly_less(pt.outer_product);
                    if (claim == Curvature::Concave ? greater : less) {
                        pt.verdict = Verdict::Verified;
                    } else if (claim == Curvature::Concave ? less : greater) {
                        pt.verdict = Verdict::Violated;
                    } else {
                        pt.verdict = Verdict::Inconclusive;
                        pt.note = "intervals overlap";
                    }
                } catch (const DomainError& e) {
                    pt.verdict = Verdict::Inconclusive;
                    pt.note = e.what();
                }
                if (pt.verdict != Verdict::Inconclusive) break;
            }
            rep.verdict = combine(rep.verdict, pt.verdict);
            rep.points.push_back(std::move(pt));
        }
    }
    return rep;
}

RatioSequenceReport check_ratio_sequence(std::string theorem, Params params, const FamilyEval& f, bool increasing,
                                         const std::vector<Rational>& p_grid, const Rational& delta,
                                         const Rational& x, const EvalOptions& opts)
{
    if (!std::is_sorted(p_grid.begin(), p_grid.end()) ||
        std::adjacent_find(p_grid.begin(), p_grid.end()) != p_grid.end()) {
        throw std::invalid_argument("check_ratio_sequence: grid must be strictly increasing");
    }
    RatioSequenceReport rep;
    rep.theorem = std::move(theorem);
    rep.params = std::move(params);
    rep.increasing = increasing;
    rep.verdict = Verdict::Verified;

    auto ratio_at = [&](const Rational& p, const EvalOptions& o) {
        Interval r = f(p + delta, x, o).value;
        r /= f(p, x, o).value;
        return r;
    };
    for (const auto& p : p_grid) {
        rep.ratios.push_back(ratio_at(p, opts));
    }
    for (std::size_t i = 1; i < rep.ratios.size(); ++i) {
        auto decide = [&](const Interval& prev, const Interval& cur) {
            const bool up = cur.certainly_greater(prev);
            const bool down = cur.certainly_less(prev);
            if (increasing ? up : down) return Verdict::Verified;
            if (increasing ? down : up) return Verdict::Violated;
            return Verdict::Inconclusive;
        };
        Verdict v = decide(rep.ratios[i - 1], rep.ratios[i]);
        if (v == Verdict::Inconclusive) {
            const EvalOptions o = doubled(opts);
            v = decide(ratio_at(p_grid[i - 1], o), ratio_at(p_grid[i], o));
        }
        if (v == Verdict::Violated && !rep.first_violation) rep.first_violation = i;
        if (v == Verdict::Inconclusive) ++rep.undecided;
        rep.verdict = combine(rep.verdict, v);
    }
    return rep;
}

SignReport verify_pfq_chain(const std::vector<Rational>& aList, const std::vector<Rational>& bList,
                            const Rational& alpha, const Rational& beta, const Rational& delta, std::size_t order)
{
    const ChainReport chain = check_symmetric_chain(aList, bList);
    HypSeriesSpec spec{SeriesFamily::UpperFactor, WeightRule::pfq_upper(aList, bList), order};
    SignReport rep = verify_theorem1(spec, alpha, beta, delta);
    rep.theorem = "thm9a";
    rep.params = {{"alpha", alpha}, {"beta", beta}, {"delta", delta}};
    for (std::size_t i = 0; i < aList.size(); ++i) rep.params.emplace_back("a" + std::to_string(i + 1), aList[i]);
    for (std::size_t i = 0; i < bList.size(); ++i) rep.params.emplace_back("b" + std::to_string(i + 1), bList[i]);

    if (rep.degenerate || rep.verdict == Verdict::Violated) {
        return rep;
    }
    int predicted = 0;
    switch (chain.kind) {
    case SymmetricChain::Increasing: predicted = -1; break;
    case SymmetricChain::Decreasing: predicted = 1; break;
    case SymmetricChain::Constant: predicted = 0; break;
    case SymmetricChain::Neither:
        rep.verdict = Verdict::Inconclusive;
        rep.reason = "neither e-chain holds; the lemma is silent";
        return rep;
    }
    predicted *= sign(beta - alpha);
    if (predicted != rep.expected_sign) {
        rep.verdict = Verdict::Violated;
        rep.reason = "e-chain prediction disagrees with the weight-ratio trend";
    }
    return rep;
}

} // namespace turankit
