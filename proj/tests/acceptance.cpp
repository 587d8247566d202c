// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
// Usage: acceptance [conjecture-csv-path]

#include "turankit/finite_sums.hpp"
#include "turankit/lemmas.hpp"
#include "turankit/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace turankit;

namespace {

Rational r(long p, long q = 1) { return Rational(p, q); }

const std::vector<Rational> kShiftGrid{r(1, 2), r(1), r(3, 2), r(2), r(3)};
const std::vector<Rational> kDeltas{r(1, 2), r(1), r(2)};
constexpr std::size_t kOrder = 40;

struct Outcome {
    bool pass = true;
    std::string detail;
};

template <class F>
void visit_pairs(F&& f)
{
    for (std::size_t i = 0; i < kShiftGrid.size(); ++i)
        for (std::size_t j = i + 1; j < kShiftGrid.size(); ++j)
            for (const auto& d : kDeltas) f(kShiftGrid[i], kShiftGrid[j], d);
}

bool strictly_between(const Interval& iv, const Rational& lo, const Rational& hi)
{
    return mpfr_cmp_q(iv.lo(), lo.get_mpq_t()) > 0 && mpfr_cmp_q(iv.hi(), hi.get_mpq_t()) < 0;
}

int sign_value(CertifiedSign s)
{
    return s == CertifiedSign::Positive ? 1 : s == CertifiedSign::Negative ? -1 : s == CertifiedSign::Zero ? 0 : 2;
}

Outcome all_verified(const std::vector<CaseResult>& results)
{
    Outcome out;
    const Summary s = summarize(results);
    out.pass = s.violated == 0 && s.inconclusive == 0 && s.verified == results.size() && !results.empty();
    std::ostringstream os;
    os << s.verified << "/" << results.size() << " verified, " << s.violated << " violated, " << s.inconclusive
       << " inconclusive";
    out.detail = os.str();
    return out;
}

Outcome criterion1()
{
    struct Rule {
        WeightRule rule;
        int trend_sign; // +1 decreasing ratios, -1 increasing
    };
    const std::vector<Rule> rules{{WeightRule::kummer_upper(1), 1},          {WeightRule::kummer_upper(2), 1},
                                  {WeightRule::kummer_upper(3), 1},          {WeightRule::gauss_upper(2, 1), 1},
                                  {WeightRule::gauss_upper(3, r(3, 2)), 1},  {WeightRule::gauss_upper(1, 2), -1},
                                  {WeightRule::gauss_upper(r(1, 2), r(3, 2)), -1}};
    Outcome out;
    std::size_t cases = 0, bad = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& rule : rules) {
        const HypSeriesSpec spec{SeriesFamily::UpperFactor, rule.rule, kOrder};
        visit_pairs([&](const Rational& a, const Rational& b, const Rational& d) {
            ++cases;
            const auto rep = verify_theorem1(spec, a, b, d);
            bool ok = rep.verdict == Verdict::Verified && rep.mk_sum_zero.value_or(false) &&
                      rep.mk_single_sign_change.value_or(false) && rep.signs.size() == kOrder + 1;
            for (std::size_t m = 2; ok && m <= kOrder; ++m) ok = sign_value(rep.signs[m]) == rule.trend_sign;
            if (!ok) ++bad;
        });
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.pass = bad == 0 && secs < 60.0;
    std::ostringstream os;
    os << cases << " cases, " << bad << " failing, " << secs << " s (limit 60 s)";
    out.detail = os.str();
    return out;
}

Outcome criterion2()
{
    const std::vector<WeightRule> rules{WeightRule::kummer_lower(r(1, 2)), WeightRule::kummer_lower(1),
                                        WeightRule::kummer_lower(2),       WeightRule::kummer_lower(3),
                                        WeightRule::gauss_lower(r(1, 2), 3), WeightRule::gauss_lower(1, 2),
                                        WeightRule::gauss_lower(2, 2)};
    std::size_t cases = 0, bad = 0;
    for (const auto& rule : rules) {
        const HypSeriesSpec spec{SeriesFamily::LowerFactor, rule, kOrder};
        visit_pairs([&](const Rational& a, const Rational& b, const Rational& d) {
            ++cases;
            const auto lambda = lambda_coefficients(spec, a, b, d);
            bool ok = lambda.size() == kOrder + 1 && verify_theorem3(spec, a, b, d).verdict == Verdict::Verified;
            for (std::size_t m = 1; ok && m <= kOrder; ++m) ok = lambda[m] < 0;
            if (!ok) ++bad;
        });
    }
    return {bad == 0, std::to_string(cases) + " cases, " + std::to_string(bad) + " with some lambda_m >= 0"};
}

Outcome criterion3()
{
    const std::vector<WeightRule> rules{WeightRule::kummer_gamma(1), WeightRule::kummer_gamma(2),
                                        WeightRule::kummer_gamma(3), WeightRule{{r(2)}, {r(1)}, 1},
                                        WeightRule{{r(3)}, {r(3, 2)}, 1}, WeightRule{{r(1)}, {r(2)}, 1},
                                        WeightRule{{r(1, 2)}, {r(3, 2)}, 1}};
    constexpr std::size_t order = 30;
    std::size_t indices = 0, initial = 0, final_undecided = 0, wrong = 0;
    for (const auto& rule : rules) {
        const HypSeriesSpec spec{SeriesFamily::GammaFactor, rule, order};
        visit_pairs([&](const Rational& a, const Rational& b, const Rational& d) {
            const auto rep = verify_theorem2(spec, a, b, d, Precision::standard());
            indices += rep.signs.size();
            initial += rep.initially_inconclusive;
            final_undecided += rep.inconclusive;
            for (auto s : rep.signs)
                if (s != CertifiedSign::Negative && s != CertifiedSign::Inconclusive) ++wrong;
        });
    }
    const double rate = indices ? static_cast<double>(initial) / static_cast<double>(indices) : 1.0;
    std::ostringstream os;
    os << indices << " psi indices, " << wrong << " not negative, " << 100.0 * rate
       << "% inconclusive at default precision, " << final_undecided << " after escalation";
    return {wrong == 0 && rate <= 0.01 && final_undecided == 0 && indices > 0, os.str()};
}

Outcome criterion4()
{
    const HypSeriesSpec spec{SeriesFamily::UpperFactor, WeightRule::constant(), kOrder};
    std::size_t cases = 0, bad = 0;
    visit_pairs([&](const Rational& a, const Rational& b, const Rational& d) {
        ++cases;
        const auto phi = phi_coefficients(spec, a, b, d);
        bool ok = phi.size() == kOrder + 1;
        for (const auto& p : phi) ok = ok && p == 0;
        if (!ok) ++bad;
    });
    return {bad == 0, std::to_string(cases) + " cases, " + std::to_string(bad) + " with a nonzero phi_m"};
}

Outcome criterion5()
{
    const std::vector<Rational> xs{r(1, 4), 1, 4, 16, 50};
    Outcome out;
    std::ostringstream os;
    for (const auto& x : xs) {
        const Interval q = kummer_product_ratio(1, 2, 1, 3, x, EvalOptions{});
        const bool inside = strictly_between(q, r(1, 2), 1);
        out.pass = out.pass && inside;
        os << "x=" << to_string(x) << (inside ? " in" : " NOT in") << " (1/2,1); ";
    }
    const Interval q50 = kummer_product_ratio(1, 2, 1, 3, 50, EvalOptions{});
    const double gap = (q50.mid_double() - 0.5) / 0.5;
    out.pass = out.pass && gap < 0.05;
    os << "relative gap to 1/2 at x=50: " << gap << " (limit 0.05)";
    out.detail = os.str();
    return out;
}

Outcome criterion6()
{
    const auto results = run_cases(default_cases("transforms", SuiteOptions{}), 0);
    Outcome out = all_verified(results);
    double worst = 0.0;
    for (const auto& c : results) worst = std::max(worst, c.details.value("max_residual", 1.0));
    out.pass = out.pass && worst < 1e-12;
    std::ostringstream os;
    os << out.detail << ", max residual " << worst;
    out.detail = os.str();
    return out;
}

Outcome criterion7()
{
    const std::vector<Rational> g{r(1, 2), 1, r(3, 2), 2, 3};
    std::size_t sums = 0, wrong_sign = 0;
    for (const auto& a : g)
        for (const auto& b : g)
            for (const auto& c : std::vector<Rational>{1, 2, 3})
                for (unsigned m = 2; m <= 6; ++m) {
                    ++sums;
                    const Rational s = eval_terminating(kummer_coefficient_sum(a, b, c, m));
                    if (sgn(s) != sgn(Rational(a - b))) ++wrong_sign;
                }
    SuiteOptions opts;
    auto cases = default_cases("thm4d", opts);
    auto qfq = default_cases("qfq", opts);
    cases.insert(cases.end(), qfq.begin(), qfq.end());
    const auto results = run_cases(cases, 0);
    Outcome out = all_verified(results);
    std::size_t admitted = 0;
    for (const auto& c : results) admitted += c.details.value("admitted", std::size_t{0});
    out.pass = out.pass && wrong_sign == 0 && admitted > 0;
    out.detail = std::to_string(sums) + " 4F3 sums, " + std::to_string(wrong_sign) + " with wrong sign; link and qFq cases " +
                 out.detail + "; " + std::to_string(admitted) + " hypothesis-satisfying qFq tuples";
    return out;
}

Outcome criterion8()
{
    const auto results = run_cases(default_cases("lemma1", SuiteOptions{}), 0);
    Outcome out = all_verified(results);
    for (const auto& c : results) {
        if (c.theorem == "lemma1") out.detail += "; random pairs nonnegative " + c.details.at("nonnegative_pairs").dump();
        if (c.theorem == "remark6")
            out.detail += "; n=" + c.params.at("degree").dump() + " equivalence " + c.details.at("equivalence_holds").dump();
    }
    return out;
}

Outcome criterion9(const std::string& csv_path)
{
    const auto grid = log_spaced_grid(r(1, 1000), 50, 64);
    const auto rep = explore_conjecture(1, 2, 1, 3, grid, EvalOptions{});
    const std::size_t steps = rep.points.size() - 1;
    const double undecided = static_cast<double>(rep.undecided) / static_cast<double>(steps);
    std::ofstream os(csv_path, std::ios::binary);
    os << conjecture_csv(rep);
    const bool archived = static_cast<bool>(os);
    std::ostringstream d;
    d << rep.points.size() << " points, " << rep.violations << " certified violations, " << 100.0 * undecided
      << "% undecided steps (limit 5%), CSV " << (archived ? "archived to " + csv_path : "NOT written");
    return {rep.violations == 0 && undecided <= 0.05 && archived && rep.points.size() == 64, d.str()};
}

} // namespace

int main(int argc, char** argv)
{
    const std::string csv_path = argc > 1 ? argv[1] : "conjecture_explore.csv";
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"upper-parameter coefficient signs (exact)", criterion1},
        {"lower-parameter coefficient signs (exact)", criterion2},
        {"gamma-factor coefficient signs (certified)", criterion3},
        {"constant weights give zero coefficients", criterion4},
        {"two-sided ratio bounds and sharpness", criterion5},
        {"Kummer and Euler/Pfaff residuals", criterion6},
        {"terminating sums and coefficient link", criterion7},
        {"chain lemma and its necessity", criterion8},
        {"conjecture exploration", [&] { return criterion9(csv_path); }},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].name << ": " << o.detail
                  << std::endl;
    }
    return all ? 0 : 1;
}
