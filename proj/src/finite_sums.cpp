#include "turankit/finite_sums.hpp"

#include "turankit/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace turankit {

std::string TerminatingSum::describe() const
{
    std::ostringstream os;
    os << upper.size() << "F" << lower.size() << "(";
    for (std::size_t i = 0; i < upper.size(); ++i) os << (i ? ", " : "") << to_string(upper[i]);
    os << "; ";
    for (std::size_t i = 0; i < lower.size(); ++i) os << (i ? ", " : "") << to_string(lower[i]);
    os << " | -1)";
    return os.str();
}

std::vector<Rational> terminating_terms(const TerminatingSum& spec)
{
    if (spec.upper.empty() || !is_nonpositive_integer(spec.upper.front())) {
        throw DomainError("terminating sum: the first upper parameter must be a nonpositive integer");
    }
    const unsigned long terms = Integer(-spec.upper.front().get_num()).get_ui();

    std::vector<Rational> upper(spec.upper.begin() + 1, spec.upper.end());
    std::vector<Rational> lower;
    std::vector<Rational> cancelled;
    for (const auto& l : spec.lower) {
        auto it = std::find(upper.begin(), upper.end(), l + 1);
        if (it != upper.end() && l != 0) {
            upper.erase(it);
            cancelled.push_back(l);
        } else {
            lower.push_back(l);
        }
    }
    upper.push_back(spec.upper.front());

    std::vector<Rational> out;
    out.reserve(terms + 1);
    Rational t(1);
    for (unsigned long k = 0;; ++k) {
        Rational term = t;
        for (const auto& l : cancelled) term *= (l + Rational(static_cast<long>(k))) / l;
        out.push_back(term);
        if (k == terms) break;
        Rational num(-1);
        Rational den(static_cast<long>(k + 1));
        for (const auto& u : upper) num *= u + Rational(static_cast<long>(k));
        for (const auto& l : lower) den *= l + Rational(static_cast<long>(k));
        if (den == 0) {
            throw PoleError("terminating sum: lower Pochhammer vanishes within the summation range");
        }
        t *= num / den;
    }
    return out;
}

Rational eval_terminating(const TerminatingSum& spec)
{
    Rational s(0);
    for (const auto& t : terminating_terms(spec)) s += t;
    return s;
}

TerminatingSum qfq_coefficient_sum(const Rational& alpha, const Rational& beta, const std::vector<Rational>& aList,
                                   const std::vector<Rational>& bList, unsigned m)
{
    if (bList.empty() || aList.size() + 1 != bList.size()) {
        throw std::invalid_argument("qfq_coefficient_sum: need q-1 upper and q lower entries");
    }
    const Rational mm(static_cast<long>(m));
    const Rational shift = alpha * mm / (alpha + beta);
    TerminatingSum s;
    s.upper.push_back(-mm);
    s.upper.push_back(alpha);
    for (const auto& a : aList) s.upper.push_back(a);
    for (const auto& b : bList) s.upper.push_back(1 - b - mm);
    s.upper.push_back(1 - shift);
    for (const auto& b : bList) s.lower.push_back(b);
    for (const auto& a : aList) s.lower.push_back(1 - a - mm);
    s.lower.push_back(1 - beta - mm);
    s.lower.push_back(-shift);
    return s;
}

TerminatingSum kummer_coefficient_sum(const Rational& a, const Rational& b, const Rational& c, unsigned m)
{
    return qfq_coefficient_sum(a, b, {}, {c}, m);
}

Rational coefficient_link_factor(const Rational& beta, const std::vector<Rational>& aList,
                                 const std::vector<Rational>& bList, unsigned m)
{
    Rational f = -Rational(static_cast<long>(m)) * pochhammer(beta + 1, m - 1) / Rational(factorial(m));
    for (const auto& a : aList) f *= pochhammer(a, m);
    for (const auto& b : bList) f /= pochhammer(b, m);
    return f;
}

namespace {

void require_link_domain(const Rational& alpha, const Rational& beta, const std::vector<Rational>& aList,
                         const std::vector<Rational>& bList, unsigned m)
{
    if (alpha <= 0 || beta <= 0) throw DomainError("coefficient link: parameters must be positive");
    if (m < 2) throw DomainError("coefficient link: m must be at least 2");
    for (const auto& v : aList) {
        if (v <= 0) throw DomainError("coefficient link: parameters must be positive");
    }
    for (const auto& v : bList) {
        if (v <= 0) throw DomainError("coefficient link: parameters must be positive");
    }
}

} // namespace

CoefficientLinkReport check_qfq_coefficient_link(const Rational& alpha, const Rational& beta,
                                                 const std::vector<Rational>& aList,
                                                 const std::vector<Rational>& bList, unsigned m)
{
    require_link_domain(alpha, beta, aList, bList, m);
    HypSeriesSpec spec{SeriesFamily::UpperFactor, WeightRule::pfq_upper(aList, bList), m};
    CoefficientLinkReport rep;
    rep.phi = phi_coefficients(spec, alpha, beta, 1)[m];
    rep.sum = eval_terminating(qfq_coefficient_sum(alpha, beta, aList, bList, m));
    rep.factor = coefficient_link_factor(beta, aList, bList, m);
    rep.proportional = rep.phi == rep.factor * rep.sum;
    rep.factor_negative = rep.factor < 0;
    rep.sum_sign_matches = sign(rep.sum) == sign(alpha - beta);
    return rep;
}

CoefficientLinkReport check_4f3_coefficient_link(const Rational& a, const Rational& b, const Rational& c, unsigned m)
{
    return check_qfq_coefficient_link(a, b, {}, {c}, m);
}

std::string to_string(SumVerdict v)
{
    switch (v) {
    case SumVerdict::Positive: return "positive";
    case SumVerdict::NotPositive: return "not-positive";
    case SumVerdict::SkippedHypothesis: return "skipped-hypothesis";
    }
    return "?";
}

QfqSumReport eval_qfq_sum(const Rational& alpha, const Rational& beta, const std::vector<Rational>& aList,
                          const std::vector<Rational>& bList, unsigned m)
{
    if (!(alpha > beta && beta > 0)) throw DomainError("eval_qfq_sum: requires alpha > beta > 0");
    if (m < 2) throw DomainError("eval_qfq_sum: m must be at least 2");
    QfqSumReport rep;
    rep.chain = check_truncated_chain(aList, bList);
    if (!rep.chain.holds) {
        rep.verdict = SumVerdict::SkippedHypothesis;
        return rep;
    }
    rep.value = eval_terminating(qfq_coefficient_sum(alpha, beta, aList, bList, m));
    rep.verdict = rep.value > 0 ? SumVerdict::Positive : SumVerdict::NotPositive;
    return rep;
}

} // namespace turankit
