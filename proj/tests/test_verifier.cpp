#include "doctest.h"
#include "oracles.hpp"
#include "turankit/verifier.hpp"

#include <algorithm>
#include <cmath>

using namespace turankit;

namespace {

Rational r(long p, long q = 1) { return Rational(p, q); }

EvalOptions opts()
{
    EvalOptions o;
    o.precision = Precision::from_digits(30);
    return o;
}

bool all_from(const SignReport& rep, std::size_t from, CertifiedSign s)
{
    return std::all_of(rep.signs.begin() + static_cast<long>(from), rep.signs.end(),
                       [&](CertifiedSign t) { return t == s; });
}

} // namespace

TEST_CASE("coefficient signs: Kummer weights give positive coefficients")
{
    HypSeriesSpec spec{SeriesFamily::UpperFactor, WeightRule::kummer_upper(3), 40};
    auto rep = verify_theorem1(spec, 1, 2, r(1, 2));
    CHECK(rep.verdict == Verdict::Verified);
    CHECK(rep.expected_sign == 1);
    CHECK(rep.signs.size() == 41);
    CHECK(rep.signs[0] == CertifiedSign::Zero);
    CHECK(rep.signs[1] == CertifiedSign::Zero);
    CHECK(all_from(rep, 2, CertifiedSign::Positive));
    CHECK(rep.mk_sum_zero == true);
    CHECK(rep.mk_single_sign_change == true);

    // m = 2 by hand: sum_k f_k(a+d) f_{2-k}(b) - f_k(b+d) f_{2-k}(a), f_k(s) = (s)_k/((3)_k k!).
    auto f = [](const Rational& s, unsigned k) -> Rational { return pochhammer(s, k) / (pochhammer(3, k) * Rational(factorial(k))); };
    Rational phi2(0);
    for (unsigned k = 0; k <= 2; ++k) phi2 += f(r(3, 2), k) * f(2, 2 - k) - f(r(5, 2), k) * f(1, 2 - k);
    CHECK(phi2 == r(1, 72));
    CHECK(phi_coefficients(spec, 1, 2, r(1, 2))[2] == phi2);
}

TEST_CASE("coefficient signs: constant weights give identically zero coefficients")
{
    HypSeriesSpec spec{SeriesFamily::UpperFactor, WeightRule::constant(), 40};
    auto rep = verify_theorem1(spec, 1, r(5, 2), r(2, 3));
    CHECK(rep.verdict == Verdict::Verified);
    CHECK(rep.expected_sign == 0);
    CHECK(all_from(rep, 0, CertifiedSign::Zero));
}

TEST_CASE("coefficient signs: increasing Gauss weight ratios give negative coefficients")
{
    HypSeriesSpec spec{SeriesFamily::UpperFactor, WeightRule::gauss_upper(1, 2), 40};
    auto rep = verify_theorem1(spec, 1, 2, 1);
    CHECK(rep.verdict == Verdict::Verified);
    CHECK(rep.expected_sign == -1);
    CHECK(all_from(rep, 2, CertifiedSign::Negative));

    HypSeriesSpec dec{SeriesFamily::UpperFactor, WeightRule::gauss_upper(3, 2), 40};
    auto rep2 = verify_theorem1(dec, 0, 2, 1);
    CHECK(rep2.verdict == Verdict::Verified);
    CHECK(rep2.expected_sign == 1);
}

TEST_CASE("coefficient signs: swapping a and b negates every coefficient")
{
    HypSeriesSpec spec{SeriesFamily::UpperFactor, WeightRule::kummer_upper(r(3, 2)), 30};
    auto fwd = verify_theorem1(spec, r(1, 2), 3, 2);
    auto rev = verify_theorem1(spec, 3, r(1, 2), 2);
    CHECK(fwd.verdict == Verdict::Verified);
    CHECK(rev.verdict == Verdict::Verified);
    CHECK(rev.expected_sign == -fwd.expected_sign);
    auto p = phi_coefficients(spec, r(1, 2), 3, 2);
    auto q = phi_coefficients(spec, 3, r(1, 2), 2);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i] == -q[i]);
}

TEST_CASE("coefficient signs: non-monotone weight ratios are inconclusive, a = b is degenerate")
{
    HypSeriesSpec mixed{SeriesFamily::UpperFactor, WeightRule::pfq_upper({1, 10}, {3, 4}), 20};
    REQUIRE(weight_ratio_trend(mixed) == RatioTrend::Mixed);
    auto rep = verify_theorem1(mixed, 1, 2, 1);
    CHECK(rep.verdict == Verdict::Inconclusive);
    CHECK_FALSE(rep.reason.empty());

    HypSeriesSpec spec{SeriesFamily::UpperFactor, WeightRule::kummer_upper(2), 20};
    auto deg = verify_theorem1(spec, r(3, 2), r(3, 2), 1);
    CHECK(deg.degenerate);
    CHECK(deg.verdict == Verdict::Verified);
    CHECK(all_from(deg, 0, CertifiedSign::Zero));

    CHECK_THROWS_AS(verify_theorem1(spec, 1, 2, 0), DomainError);
    HypSeriesSpec lower{SeriesFamily::LowerFactor, WeightRule::kummer_lower(1), 10};
    CHECK_THROWS_AS(verify_theorem1(lower, 1, 2, 1), std::invalid_argument);
}

TEST_CASE("coefficient signs: gamma-factor coefficients are certified negative")
{
    HypSeriesSpec spec{SeriesFamily::GammaFactor, WeightRule::kummer_gamma(2), 30};
    auto rep = verify_theorem2(spec, 1, r(3, 2), 1);
    CHECK(rep.verdict == Verdict::Verified);
    CHECK_FALSE(rep.escalated);
    CHECK(all_from(rep, 0, CertifiedSign::Negative));

    // Non-integer delta and non-integer b - a: interval path.
    auto irr = verify_theorem2(spec, r(1, 3), 1, r(1, 2));
    CHECK(irr.verdict == Verdict::Verified);
    CHECK(irr.inconclusive == 0);

    auto half = verify_theorem2(HypSeriesSpec{SeriesFamily::GammaFactor, WeightRule::kummer_gamma(1), 20}, r(1, 2),
                                r(3, 2), r(1, 2));
    CHECK(half.verdict == Verdict::Verified);

    auto deg = verify_theorem2(spec, 2, 2, r(1, 2));
    CHECK(deg.degenerate);
    CHECK(deg.verdict == Verdict::Verified);
    CHECK(all_from(deg, 0, CertifiedSign::Zero));
}

TEST_CASE("coefficient signs: lower-factor coefficients are negative")
{
    HypSeriesSpec kummer{SeriesFamily::LowerFactor, WeightRule::kummer_lower(2), 40};
    auto rep = verify_theorem3(kummer, 1, 2, 1);
    CHECK(rep.verdict == Verdict::Verified);
    CHECK(rep.signs[0] == CertifiedSign::Zero);
    CHECK(all_from(rep, 1, CertifiedSign::Negative));

    HypSeriesSpec gauss{SeriesFamily::LowerFactor, WeightRule::gauss_lower(r(1, 2), 3), 40};
    CHECK(verify_theorem3(gauss, r(3, 2), r(5, 2), r(1, 2)).verdict == Verdict::Verified);

    auto deg = verify_theorem3(kummer, 2, 2, 1);
    CHECK(deg.degenerate);
    CHECK(all_from(deg, 0, CertifiedSign::Zero));
}

TEST_CASE("two-sided ratio bounds for Kummer weights")
{
    HypSeriesSpec spec{SeriesFamily::UpperFactor, WeightRule::kummer_upper(3), 40};
    std::vector<Rational> xs{r(1, 4), 1, 4, 16, 50};
    auto rep = verify_corollary_twosided(spec, 1, 2, 1, xs, opts());
    REQUIRE(rep.lower_bound.is_exact());
    CHECK(*rep.lower_bound.exact == r(1, 2));
    CHECK(rep.verdict == Verdict::Verified);
    CHECK(rep.approaches_lower == true);
    CHECK(rep.gap_at_extreme < 0.05);
    for (const auto& pt : rep.points) {
        // c = 3 closed forms: F(3;3;x) = e^x, F(1;3;x) = 2(e^x-1-x)/x^2, F(2;3;x) = 2((x-1)e^x+1)/x^2.
        oracle::Big xb(pt.x), one(Rational(1)), two(Rational(2));
        oracle::Big ex = oracle::expo(xb);
        oracle::Big f1 = two * (ex - one - xb) / (xb * xb);
        oracle::Big f2 = two * ((xb - one) * ex + one) / (xb * xb);
        CHECK(pt.ratio.contains((ex * f1 / (f2 * f2)).get()));
    }

    auto near0 = verify_corollary_twosided(spec, 1, 2, 1, {r(1, 1000)}, opts());
    CHECK(std::fabs(near0.points[0].ratio.mid_double() - 1.0) < 1e-3);

    CHECK_THROWS_AS(verify_corollary_twosided(spec, 2, 1, 1, xs, opts()), DomainError);
    CHECK_THROWS_AS(verify_corollary_twosided(spec, 1, 2, 1, {r(-1)}, opts()), DomainError);
    HypSeriesSpec inc{SeriesFamily::UpperFactor, WeightRule::gauss_upper(1, 2), 40};
    CHECK_THROWS_AS(verify_corollary_twosided(inc, 1, 2, 1, {r(1, 2)}, opts()), DomainError);
}

TEST_CASE("Turan-type bounds")
{
    HypSeriesSpec spec{SeriesFamily::UpperFactor, WeightRule::kummer_upper(5), 40};
    auto rep = verify_turan(spec, 2, 1, {3}, opts());
    REQUIRE(rep.lower_bound.is_exact());
    CHECK(*rep.lower_bound.exact == r(2, 3));
    CHECK(rep.verdict == Verdict::Verified);
    oracle::Big f2 = oracle::pfq_series({2}, {5}, 3, 400);
    oracle::Big f3 = oracle::pfq_series({3}, {5}, 3, 400);
    oracle::Big f4 = oracle::pfq_series({4}, {5}, 3, 400);
    CHECK(rep.points[0].ratio.contains((f4 * f2 / (f3 * f3)).get()));

    auto one = verify_turan(HypSeriesSpec{SeriesFamily::UpperFactor, WeightRule::kummer_upper(3), 40}, 1, 1,
                            {r(1, 4), 1, 8}, opts());
    CHECK(*one.lower_bound.exact == r(1, 2));
    CHECK(one.verdict == Verdict::Verified);

    auto frac = verify_turan(HypSeriesSpec{SeriesFamily::UpperFactor, WeightRule::gauss_upper(3, 2), 40}, r(1, 2),
                             r(1, 3), {r(1, 4), r(1, 2), r(3, 4)}, opts());
    CHECK_FALSE(frac.lower_bound.is_exact());
    CHECK(frac.verdict == Verdict::Verified);
}

TEST_CASE("curvature checks detect both the claim and its negation")
{
    auto f = upper_family_eval(WeightRule::kummer_upper(2));
    auto concave = check_curvature("thm4b", {{"c", 2}}, f, Curvature::Concave, {0, r(1, 2), 2}, r(1, 2),
                                   {r(1, 4), r(3, 4), 3}, opts());
    CHECK(concave.verdict == Verdict::Verified);
    CHECK(concave.points.size() == 9);

    auto wrong = check_curvature("thm4b", {{"c", 2}}, f, Curvature::Convex, {r(1, 2)}, r(1, 2), {1}, opts());
    CHECK(wrong.verdict == Verdict::Violated);

    // x = 0: all values are exactly 1, the strict claim cannot be certified.
    auto flat = check_curvature("thm4b", {{"c", 2}}, f, Curvature::Concave, {1}, 1, {0}, opts());
    CHECK(flat.verdict == Verdict::Inconclusive);

    // Negative x on a <= c - 2 delta, through the Kummer route.
    auto neg = check_curvature("thm4b", {{"c", 3}}, upper_family_eval(WeightRule::kummer_upper(3)),
                               Curvature::Concave, {r(-1, 2), 0, 1}, 1, {r(-1, 4), r(-3, 4), -4}, opts());
    CHECK(neg.verdict == Verdict::Verified);
}

TEST_CASE("ratio sequences")
{
    auto f = upper_family_eval(WeightRule::kummer_upper(3));
    auto dec = check_ratio_sequence("thm4b", {}, f, false, {0, r(1, 2), 1, 2, 3}, r(1, 2), r(3, 4), opts());
    CHECK(dec.verdict == Verdict::Verified);
    auto inc = check_ratio_sequence("thm4b", {}, f, true, {0, r(1, 2), 1}, r(1, 2), r(3, 4), opts());
    CHECK(inc.verdict == Verdict::Violated);
    CHECK(inc.first_violation == 1u);

    // c -> 1F1(a; c; x) in the lower parameter.
    FamilyEval in_c = [](const Rational& c, const Rational& x, const EvalOptions& o) { return eval_1f1(2, c, x, o); };
    CHECK(check_ratio_sequence("thm5b", {}, in_c, true, {r(1, 2), 1, 2, 3}, r(1, 2), 2, opts()).verdict ==
          Verdict::Verified);
    CHECK_THROWS_AS(check_ratio_sequence("x", {}, f, true, {1, 1}, 1, 1, opts()), std::invalid_argument);
}

TEST_CASE("pFq chain screening")
{
    auto inc = verify_pfq_chain({1, 1}, {2, 3}, 1, 2, 1, 30);
    CHECK(inc.verdict == Verdict::Verified);
    CHECK(inc.expected_sign == -1);

    auto dec = verify_pfq_chain({2, 3}, {1, 1}, 1, 2, r(1, 2), 30);
    CHECK(dec.verdict == Verdict::Verified);
    CHECK(dec.expected_sign == 1);

    auto neither = verify_pfq_chain({1, 10}, {3, 4}, 1, 2, 1, 20);
    CHECK(neither.verdict == Verdict::Inconclusive);
}
