#include "doctest.h"
#include "oracles.hpp"
#include "turankit/lemmas.hpp"

#include <algorithm>

using namespace turankit;

namespace {

Rational r(long p, long q = 1) { return Rational(p, q); }

Polynomial multiply(const Polynomial& p, const Polynomial& q)
{
    Polynomial out(p.size() + q.size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            out[i + j] += p[i] * q[j];
        }
    }
    return out;
}

Polynomial derivative(const Polynomial& p)
{
    Polynomial out;
    for (std::size_t k = 1; k < p.size(); ++k) {
        out.push_back(Rational(static_cast<long>(k)) * p[k]);
    }
    if (out.empty()) {
        out.push_back(0);
    }
    return out;
}

// A'B - B'A by explicit multiplication, trailing zeros dropped.
Polynomial brute_wronskian(const Polynomial& A, const Polynomial& B)
{
    Polynomial left = multiply(derivative(A), B);
    Polynomial right = multiply(derivative(B), A);
    Polynomial out(left.size(), Rational(0));
    for (std::size_t i = 0; i < left.size(); ++i) {
        out[i] = left[i] - right[i];
    }
    return out;
}

bool same_up_to_trailing_zeros(Polynomial a, Polynomial b)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
    while (!b.empty() && b.back() == 0) b.pop_back();
    return a == b;
}

Polynomial random_positive(oracle::RationalGen& gen, std::size_t len)
{
    Polynomial p;
    for (std::size_t k = 0; k < len; ++k) p.push_back(gen.positive(9, 5));
    return p;
}

// A with a_k/b_k nondecreasing in k.
std::pair<Polynomial, Polynomial> random_chain_pair(oracle::RationalGen& gen, std::size_t len)
{
    Polynomial B = random_positive(gen, len);
    std::vector<Rational> ratios;
    for (std::size_t k = 0; k < len; ++k) ratios.push_back(gen.positive(9, 4));
    std::sort(ratios.begin(), ratios.end());
    Polynomial A;
    for (std::size_t k = 0; k < len; ++k) A.push_back(ratios[k] * B[k]);
    return {A, B};
}

Rational R_value(const std::vector<Rational>& a, const std::vector<Rational>& b, const Rational& x)
{
    Rational num(1), den(1);
    for (const auto& v : a) num *= v + x;
    for (const auto& v : b) den *= v + x;
    return num / den;
}

} // namespace

TEST_CASE("wronskian examples")
{
    Polynomial A{r(3), r(1, 2), r(7), r(2)};
    for (const auto& c : wronskian_coeffs(A, A)) CHECK(c == 0);
    CHECK(wronskian_coeffs(A, A).size() == 5);

    auto w = wronskian_coeffs({1, 2}, {1, 1});
    REQUIRE(w.size() == 1);
    CHECK(w[0] == 1);

    CHECK(wronskian_coeffs({r(5)}, {r(2)}).empty());
    CHECK_THROWS_AS(wronskian_coeffs({1, 2}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("property: wronskian matches brute-force multiplication and is antisymmetric")
{
    oracle::RationalGen gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t len = 1 + trial % 7;
        Polynomial A = random_positive(gen, len);
        Polynomial B = random_positive(gen, len);
        auto w = wronskian_coeffs(A, B);
        CHECK(same_up_to_trailing_zeros(w, brute_wronskian(A, B)));
        auto v = wronskian_coeffs(B, A);
        for (std::size_t i = 0; i < w.size(); ++i) CHECK(w[i] == -v[i]);
    }
}

TEST_CASE("ratio chain classification")
{
    CHECK(check_ratio_chain({2, 4, 6}, {1, 2, 3}).kind == RatioChain::Constant);
    CHECK(check_ratio_chain({1, 1, 2}, {1, 1, 1}).kind == RatioChain::Increasing);
    CHECK(check_ratio_chain({1, 2, 1}, {1, 1, 1}).kind == RatioChain::Neither);
    CHECK(check_ratio_chain({2, 1, 1}, {1, 1, 1}).kind == RatioChain::Decreasing);
    // Leading zeros of A are allowed.
    CHECK(check_ratio_chain({3, 1, 0}, {1, 1, 1}).kind == RatioChain::Decreasing);
    CHECK_THROWS_AS(check_ratio_chain({1, 1}, {1, 0}), DomainError);
}

TEST_CASE("property: chain pairs of degree <= 6 have nonnegative wronskian coefficients")
{
    oracle::RationalGen gen(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        auto [A, B] = random_chain_pair(gen, 2 + trial % 6);
        REQUIRE(check_ratio_chain(A, B).increasing());
        auto w = wronskian_coeffs(A, B);
        CHECK(std::all_of(w.begin(), w.end(), [](const Rational& c) { return c >= 0; }));
        if (check_ratio_chain(A, B).kind != RatioChain::Constant) {
            CHECK(std::any_of(w.begin(), w.end(), [](const Rational& c) { return c > 0; }));
        }
        // Reversed roles give the decreasing chain and nonpositive coefficients.
        auto v = wronskian_coeffs(B, A);
        CHECK(std::all_of(v.begin(), v.end(), [](const Rational& c) { return c <= 0; }));
    }
}

TEST_CASE("necessity for degrees 1 and 2")
{
    for (unsigned n : {1u, 2u}) {
        auto rep = necessity_witness(n);
        CAPTURE(n);
        CHECK(rep.pairs_checked == (n == 1 ? 256u : 4096u));
        CHECK(rep.chain_violations > 0);
        CHECK(rep.equivalence_holds);
        CHECK(rep.chain_violations == rep.negative_coefficient_pairs);
        CHECK(rep.witnessed == rep.chain_violations);
        CHECK(rep.passed());
        for (const auto& wit : rep.witnesses) {
            CHECK(wit.x > 0);
            CHECK(evaluate(brute_wronskian(wit.A, wit.B), wit.x) < 0);
        }
    }
    // A = 1+x, B = 1+2x: single coefficient a_1 b_0 - a_0 b_1 = -1.
    auto w = wronskian_coeffs({1, 1}, {1, 2});
    REQUIRE(w.size() == 1);
    CHECK(w[0] == -1);
    auto w2 = wronskian_coeffs({1, 2, 1}, {1, 1, 1});
    CHECK(std::any_of(w2.begin(), w2.end(), [](const Rational& c) { return c < 0; }));
    CHECK_THROWS(necessity_witness(3));
}

TEST_CASE("elementary symmetric polynomials")
{
    auto e = elementary_symmetric({1, 2, 3});
    CHECK(e == std::vector<Rational>{1, 6, 11, 6});
    auto same = elementary_symmetric({r(2, 3), r(2, 3), r(2, 3), r(2, 3)});
    const long binom[] = {1, 4, 6, 4, 1};
    for (int m = 0; m <= 4; ++m) {
        Rational pw(1);
        for (int i = 0; i < m; ++i) pw *= r(2, 3);
        CHECK(same[m] == Rational(binom[m]) * pw);
    }
    CHECK(elementary_symmetric({r(5, 7)})[1] == r(5, 7));
    // Expanding prod (c_i + x) by multiplication agrees.
    Polynomial p{1};
    for (const auto& c : std::vector<Rational>{r(1, 2), 3, r(7, 5)}) p = multiply(p, {c, 1});
    CHECK(monic_product({r(1, 2), 3, r(7, 5)}) == p);
}

TEST_CASE("symmetric chain classification")
{
    auto up = check_symmetric_chain({1, 1}, {2, 3});
    CHECK(up.kind == SymmetricChain::Increasing);
    CHECK(up.ratios == std::vector<Rational>{r(5, 2), r(6)});

    auto eq = check_symmetric_chain({r(1, 2), 4}, {r(1, 2), 4});
    CHECK(eq.kind == SymmetricChain::Constant);
    CHECK(eq.increasing());
    CHECK(eq.decreasing());

    auto neither = check_symmetric_chain({1, 4}, {2, 2});
    CHECK(neither.ratios == std::vector<Rational>{r(4, 5), r(1)});
    CHECK(neither.kind == SymmetricChain::Neither);

    CHECK(check_symmetric_chain({2, 3}, {1, 1}).kind == SymmetricChain::Decreasing);
    CHECK_THROWS_AS(check_symmetric_chain({1}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(check_symmetric_chain({1, -1}, {1, 2}), DomainError);
}

TEST_CASE("property: componentwise b > a gives the increasing chain")
{
    oracle::RationalGen gen(5);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Rational> a, b;
        for (int i = 0; i < 1 + trial % 5; ++i) {
            a.push_back(gen.positive(9, 4));
            b.push_back(a.back() + gen.positive(9, 4));
        }
        CHECK(check_symmetric_chain(a, b).kind == SymmetricChain::Increasing);
    }
}

TEST_CASE("truncated chain and the 2F2 single condition")
{
    // a_1 >= b_1 b_2 / (b_1 + b_2) with b = (1, 2) means a_1 >= 2/3.
    CHECK(check_truncated_chain({r(2, 3)}, {1, 2}).holds);
    CHECK(check_truncated_chain({1}, {1, 2}).holds);
    CHECK_FALSE(check_truncated_chain({r(1, 2)}, {1, 2}).holds);
    CHECK(check_symmetric_chain({r(2, 3), 5}, {1, 2}).two_f_two_condition);
    CHECK_FALSE(check_symmetric_chain({r(1, 2), 5}, {1, 2}).two_f_two_condition);

    oracle::RationalGen gen(99);
    for (int trial = 0; trial < 300; ++trial) {
        Rational a1 = gen.positive(9, 4), b1 = gen.positive(9, 4), b2 = gen.positive(9, 4);
        CHECK(check_truncated_chain({a1}, {b1, b2}).holds == (a1 >= b1 * b2 / (b1 + b2)));
    }
    CHECK(check_truncated_chain({}, {r(3)}).holds);
    CHECK(check_truncated_chain({}, {r(3)}).ratios == std::vector<Rational>{r(3)});
}

TEST_CASE("R monotonicity")
{
    auto inc = ratio_R_monotone({1, 1}, {2, 3});
    CHECK(inc.verdict == Monotonicity::Increasing);
    CHECK(inc.consistent);

    auto flat = ratio_R_monotone({r(3, 2), 2}, {2, r(3, 2)});
    CHECK(flat.verdict == Monotonicity::Constant);
    for (const auto& c : flat.wronskian) CHECK(c == 0);

    auto dec = ratio_R_monotone({2, 3}, {1, 1});
    CHECK(dec.verdict == Monotonicity::Decreasing);
    CHECK(dec.consistent);
}

TEST_CASE("property: lemma verdicts agree with exact evaluation of R")
{
    oracle::RationalGen gen(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int q = 1 + trial % 4;
        std::vector<Rational> a, b;
        for (int i = 0; i < q; ++i) {
            a.push_back(gen.positive(9, 3));
            b.push_back(gen.positive(9, 3));
        }
        auto rep = ratio_R_monotone(a, b);
        CHECK(rep.consistent);
        if (rep.verdict == Monotonicity::Undetermined) continue;
        Rational prev = R_value(a, b, r(1, 16));
        for (long k = 2; k <= 24; ++k) {
            Rational cur = R_value(a, b, Rational(k * k, 16));
            if (rep.verdict == Monotonicity::Increasing) CHECK(cur > prev);
            if (rep.verdict == Monotonicity::Decreasing) CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("for q = 2 the chain is necessary")
{
    // Any pair whose R is increasing on the sampled grid must satisfy the chain.
    oracle::RationalGen gen(8);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Rational> a{gen.positive(6, 2), gen.positive(6, 2)};
        std::vector<Rational> b{gen.positive(6, 2), gen.positive(6, 2)};
        auto rep = ratio_R_monotone(a, b);
        if (rep.sampled_sign > 0) {
            auto w = rep.wronskian;
            if (std::all_of(w.begin(), w.end(), [](const Rational& c) { return c >= 0; })) {
                CHECK(rep.chain.increasing());
            }
        }
        if (!rep.chain.increasing() && !rep.chain.decreasing()) {
            auto w = rep.wronskian;
            CHECK(std::any_of(w.begin(), w.end(), [](const Rational& c) { return c < 0; }));
            CHECK(std::any_of(w.begin(), w.end(), [](const Rational& c) { return c > 0; }));
        }
    }
}
