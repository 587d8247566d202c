#pragma once

#include "turankit/lemmas.hpp"
#include "turankit/rational.hpp"

#include <string>
#include <vector>

namespace turankit {

/// A pFq at argument -1 whose first upper parameter is -m, a nonpositive integer.
struct TerminatingSum {
    std::vector<Rational> upper;
    std::vector<Rational> lower;

    std::string describe() const;
};

/// Exact terms t_0..t_m of the sum, after cancelling every upper/lower pair
/// with u = l + 1 to (l+k)/l; upper[0] = -m is never cancelled. Throws DomainError
/// if upper[0] is not a nonpositive integer and PoleError if a lower Pochhammer
/// vanishes for k <= m.
std::vector<Rational> terminating_terms(const TerminatingSum& spec);

Rational eval_terminating(const TerminatingSum& spec);

/// 4F3(-m, a, 1-c-m, 1-am/(a+b); c, 1-b-m, -am/(a+b) | -1).
TerminatingSum kummer_coefficient_sum(const Rational& a, const Rational& b, const Rational& c, unsigned m);

/// 2q+2F2q+1(-m, alpha, (a), (1-b-m), 1-alpha m/(alpha+beta); (b), (1-a-m), 1-beta-m, -alpha m/(alpha+beta) | -1)
/// with q = bList.size() and aList.size() = q - 1.
TerminatingSum qfq_coefficient_sum(const Rational& alpha, const Rational& beta, const std::vector<Rational>& aList,
                                   const std::vector<Rational>& bList, unsigned m);

/// phi_m = factor * sum, for the x^m coefficient of f(alpha+1) f(beta) - f(beta+1) f(alpha)
/// with f(s, x) = q F q(s, (a); (b); x). The factor is
/// -m (beta+1)_{m-1} prod (a_i)_m / (m! prod (b_j)_m).
Rational coefficient_link_factor(const Rational& beta, const std::vector<Rational>& aList,
                                 const std::vector<Rational>& bList, unsigned m);

struct CoefficientLinkReport {
    Rational phi;    ///< from the series engine
    Rational sum;    ///< terminating sum at -1
    Rational factor; ///< coefficient_link_factor
    bool proportional = false;   ///< phi == factor * sum exactly
    bool factor_negative = false;
    bool sum_sign_matches = false; ///< sign(sum) == sign(alpha - beta)

    bool passed() const { return proportional && factor_negative && sum_sign_matches; }
};

/// 1F1 case: requires a, b, c > 0 and m >= 2.
CoefficientLinkReport check_4f3_coefficient_link(const Rational& a, const Rational& b, const Rational& c, unsigned m);

/// qFq case with the same requirements on alpha, beta and positive lists.
CoefficientLinkReport check_qfq_coefficient_link(const Rational& alpha, const Rational& beta,
                                                 const std::vector<Rational>& aList,
                                                 const std::vector<Rational>& bList, unsigned m);

enum class SumVerdict { Positive, NotPositive, SkippedHypothesis };

std::string to_string(SumVerdict v);

struct QfqSumReport {
    Rational value;
    SumVerdict verdict = SumVerdict::SkippedHypothesis;
    TruncatedChainReport chain;
};

/// Requires alpha > beta > 0, m >= 2 and positive lists. The value is only
/// computed when the truncated e-chain holds; otherwise the verdict is SkippedHypothesis.
QfqSumReport eval_qfq_sum(const Rational& alpha, const Rational& beta, const std::vector<Rational>& aList,
                          const std::vector<Rational>& bList, unsigned m);

} // namespace turankit
