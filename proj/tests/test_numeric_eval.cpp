#include "doctest.h"
#include "oracles.hpp"
#include "turankit/hypergeometric.hpp"

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

// Closed form of the c = 3 Kummer product ratio with a=1, b=2, delta=1:
// 1F1(3;3;x) = e^x, 1F1(1;3;x) = 2(e^x-1-x)/x^2, 1F1(2;3;x) = 2((x-1)e^x+1)/x^2.
oracle::Big closed_form_ratio(const Rational& x)
{
    oracle::Big xb(x);
    oracle::Big ex = oracle::expo(xb);
    oracle::Big one(Rational(1));
    oracle::Big f3 = ex;
    oracle::Big f1 = oracle::Big(Rational(2)) * (ex - one - xb) / (xb * xb);
    oracle::Big f2 = oracle::Big(Rational(2)) * ((xb - one) * ex + one) / (xb * xb);
    return f3 * f1 / (f2 * f2);
}

} // namespace

TEST_CASE("eval_pfq examples")
{
    auto at_zero = eval_pfq(PFQSpec{{r(7, 3)}, {r(5, 2)}}, 0, opts());
    CHECK(at_zero.value.contains(Rational(1)));
    CHECK(at_zero.value.width_double() == 0.0);
    CHECK(at_zero.converged);

    auto e = eval_pfq(PFQSpec{{1}, {1}}, 1, opts());
    CHECK(e.value.contains(oracle::expo(oracle::Big(Rational(1))).get()));
    CHECK(e.value.mid_double() == doctest::Approx(2.718281828459045));
    CHECK(e.converged);
    CHECK(e.value.relative_width() < 1e-25);

    auto two = eval_pfq(PFQSpec{{1, 2}, {2}}, r(1, 2), opts());
    CHECK(two.value.contains(Rational(2)));
    CHECK(two.converged);
}

TEST_CASE("eval_pfq domain errors")
{
    CHECK_THROWS_AS(eval_pfq(PFQSpec{{1, 2}, {3}}, 1, opts()), DomainError);
    CHECK_THROWS_AS(eval_pfq(PFQSpec{{1, 2}, {3}}, r(-3, 2), opts()), DomainError);
    CHECK_THROWS_AS(eval_pfq(PFQSpec{{1, 2, 3}, {4}}, r(1, 10), opts()), DomainError);
    CHECK_THROWS_AS(eval_pfq(PFQSpec{{1}, {-2}}, r(1, 10), opts()), PoleError);
    CHECK_THROWS_AS(eval_2f1(1, 1, 2, r(3, 2), opts()), DomainError);
}

TEST_CASE("terminating series are summed exactly even outside the disc")
{
    // 2F1(-3, 2; 5; 4) = sum_{k<=3} (-3)_k (2)_k / ((5)_k k!) 4^k
    Rational expect(0);
    for (std::size_t k = 0; k <= 3; ++k) {
        expect += pochhammer(-3, k) * pochhammer(2, k) / (pochhammer(5, k) * Rational(factorial(k)))
                  * Rational(Integer(1) << static_cast<unsigned>(2 * k));
    }
    auto res = eval_pfq(PFQSpec{{-3, 2}, {5}}, 4, opts());
    CHECK(res.value.contains(expect));
    CHECK(res.terms_used == 4);
}

TEST_CASE("binomial series 1F0(a;;x) matches (1-x)^-a")
{
    oracle::RationalGen gen(41);
    for (int trial = 0; trial < 20; ++trial) {
        Rational a = gen.positive(10, 4);
        Rational x = Rational(gen.integer(-9, 9), 10);
        auto res = eval_pfq(PFQSpec{{a}, {}}, x, opts());
        Interval closed = pow(Interval(Rational(1 - x), Precision{160}), Rational(-a));
        CHECK(res.value.overlaps(closed));
        CHECK(res.converged);
    }
}

TEST_CASE("property: enclosures contain the 400-bit series and the doubled-precision recomputation")
{
    oracle::RationalGen gen(77);
    for (int trial = 0; trial < 60; ++trial) {
        const int kind = trial % 3;
        PFQSpec spec;
        Rational x;
        if (kind == 0) {
            spec = PFQSpec{{gen.positive(12, 4) - 1}, {gen.positive(12, 4)}};
            x = Rational(gen.integer(-40, 60), 4);
        } else if (kind == 1) {
            spec = PFQSpec{{gen.positive(12, 4), gen.positive(12, 4)}, {gen.positive(12, 4)}};
            x = Rational(gen.integer(-8, 8), 10);
        } else {
            spec = PFQSpec{{gen.positive(12, 4), gen.positive(12, 4)}, {gen.positive(12, 4), gen.positive(12, 4)}};
            x = Rational(gen.integer(-20, 20), 3);
        }
        if (is_nonpositive_integer(spec.upper[0])) {
            continue;
        }
        INFO(spec.describe() << " at x = " << to_string(x));
        auto base = eval_pfq(spec, x, opts());
        EvalOptions finer = opts();
        finer.precision = finer.precision.doubled();
        finer.term_cap *= 2;
        auto fine = eval_pfq(spec, x, finer);
        CHECK(base.value.contains(oracle::pfq_series(spec.upper, spec.lower, x, 600).get()));
        CHECK(base.value.overlaps(fine.value));
        CHECK(base.converged);
    }
}

TEST_CASE("Kummer routing for negative x agrees with direct alternating summation")
{
    for (Rational x : {r(-1, 4), r(-3), r(-12), r(-25)}) {
        auto routed = eval_1f1(r(3, 2), r(5, 2), x, opts());
        auto direct = eval_pfq(PFQSpec{{r(3, 2)}, {r(5, 2)}}, x, opts());
        CHECK(routed.value.overlaps(direct.value));
        CHECK(routed.converged);
        CHECK(routed.value.contains(oracle::pfq_series({r(3, 2)}, {r(5, 2)}, x, 800).get()));
    }
}

TEST_CASE("Pfaff routing for 2F1 below -1/2")
{
    for (Rational x : {r(-3, 4), r(-2), r(-10)}) {
        auto routed = eval_2f1(r(1, 2), r(3, 2), 2, x, opts());
        CHECK(routed.converged);
        if (abs(x) < 1) {
            CHECK(routed.value.overlaps(eval_pfq(PFQSpec{{r(1, 2), r(3, 2)}, {2}}, x, opts()).value));
        }
        // b = c collapses to (1-x)^{-a}.
        auto collapsed = eval_2f1(r(1, 2), 2, 2, x, opts());
        CHECK(collapsed.value.overlaps(pow(Interval(Rational(1 - x), Precision{160}), r(-1, 2))));
    }
}

TEST_CASE("Kummer transformation check")
{
    auto check = check_kummer_transform(1, 2, r(1, 2), opts());
    CHECK(check.all_overlap);
    CHECK(check.residual < 1e-12);
    CHECK(check.passed(1e-12));

    auto same = check_kummer_transform(r(3, 2), r(3, 2), r(7, 4), opts());
    CHECK(same.passed(1e-12));
    CHECK(same.sides[0].value.contains(oracle::expo(oracle::Big(r(7, 4))).get()));

    auto zero = check_kummer_transform(r(1, 3), 2, 0, opts());
    CHECK(zero.sides[0].value.contains(Rational(1)));
    CHECK(zero.sides[1].value.contains(Rational(1)));
    CHECK(zero.residual == 0.0);
}

TEST_CASE("Euler and Pfaff transformation check")
{
    auto check = check_euler_pfaff(1, 1, 2, r(1, 2), opts());
    CHECK(check.sides.size() == 2); // x = 1/2 is outside the Pfaff disc
    CHECK(check.passed(1e-12));

    auto inside = check_euler_pfaff(1, 1, 2, r(1, 4), opts());
    CHECK(inside.sides.size() == 4);
    CHECK(inside.passed(1e-12));
    // 2F1(1,1;2;x) = -log(1-x)/x
    oracle::Big ref(Rational(3, 4));
    mpfr_log(ref.get(), ref.get(), MPFR_RNDN);
    ref = oracle::Big(Rational(-4)) * ref;
    CHECK(inside.sides[0].value.contains(ref.get()));

    auto zero = check_euler_pfaff(r(1, 2), r(3, 2), 3, 0, opts());
    for (const auto& side : zero.sides) {
        CHECK(side.value.contains(Rational(1)));
    }

    auto binomial = check_euler_pfaff(r(3, 2), 2, 2, r(-1, 2), opts());
    CHECK(binomial.passed(1e-12));
    CHECK(binomial.sides[0].value.overlaps(pow(Interval(r(3, 2), Precision{160}), r(-3, 2))));
}

TEST_CASE("Kummer product ratio matches the c = 3 closed form")
{
    for (Rational x : {r(1, 4), r(1), r(4), r(16), r(50)}) {
        Interval q = kummer_product_ratio(1, 2, 1, 3, x, opts());
        CHECK(q.contains(closed_form_ratio(x).get()));
    }
}

TEST_CASE("conjecture explorer: endpoints and bound")
{
    std::vector<Rational> grid{r(1, 1000), r(1, 10), r(1), r(5), r(20), r(50)};
    auto rep = explore_conjecture(1, 2, 1, 3, grid, opts());
    REQUIRE(rep.bound.is_exact());
    CHECK(*rep.bound.exact == r(1, 2));
    CHECK(rep.positive_branch);
    CHECK(rep.gap_to_one < 1e-5);
    CHECK(std::fabs(rep.points.back().ratio.mid_double() - 0.5) / 0.5 < 0.05);
    CHECK(rep.violations == 0);
    CHECK(rep.undecided == 0);
    CHECK(rep.out_of_bounds == 0);
}

TEST_CASE("conjecture explorer: negative branch is increasing toward 1")
{
    std::vector<Rational> grid{r(-30), r(-10), r(-3), r(-1), r(-1, 10), r(-1, 100)};
    auto rep = explore_conjecture(r(1, 2), 1, r(1, 2), 3, grid, opts());
    CHECK_FALSE(rep.positive_branch);
    CHECK(rep.violations == 0);
    CHECK(rep.monotone_steps == grid.size() - 1);
    CHECK(rep.out_of_bounds == 0);
}

TEST_CASE("conjecture explorer input validation")
{
    CHECK_THROWS_AS(explore_conjecture(1, 2, 1, 3, {}, opts()), std::invalid_argument);
    CHECK_THROWS_AS(explore_conjecture(1, 2, 1, 3, {r(2), r(1)}, opts()), std::invalid_argument);
    CHECK_THROWS_AS(explore_conjecture(1, 2, 1, 3, {r(-1), r(1)}, opts()), std::invalid_argument);
    CHECK_THROWS_AS(explore_conjecture(2, 1, 1, 3, {r(1)}, opts()), DomainError);
    CHECK_THROWS_AS(explore_conjecture(1, 2, 1, 3, {r(-1)}, opts()), DomainError); // needs b < c - delta
}

TEST_CASE("kummer residual at an exact zero of 1F1 is absolute")
{
    // 1F1(3/2;1/2;x) = e^x (1 + 2x) vanishes at x = -1/2.
    auto chk = check_kummer_transform(Rational(3, 2), Rational(1, 2), Rational(-1, 2), EvalOptions{});
    CHECK(chk.all_overlap);
    CHECK(chk.passed(1e-12));
}
