#include "turankit/suite.hpp"

#include "turankit/finite_sums.hpp"
#include "turankit/lemmas.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace turankit {

using nlohmann::json;

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Interval& iv)
{
    char* lo = nullptr;
    char* hi = nullptr;
    mpfr_asprintf(&lo, "%.20RDe", iv.lo());
    mpfr_asprintf(&hi, "%.20RUe", iv.hi());
    json out{{"lo", lo}, {"hi", hi}};
    mpfr_free_str(lo);
    mpfr_free_str(hi);
    return out;
}

json to_json(const GammaRatio& g)
{
    json out{{"enclosure", to_json(g.enclosure)}};
    out["exact"] = g.exact ? json(to_string(*g.exact)) : json(nullptr);
    return out;
}

namespace {

json params_json(const Params& params)
{
    json out = json::object();
    for (const auto& [name, value] : params) out[name] = to_string(value);
    return out;
}

int sign_int(CertifiedSign s)
{
    switch (s) {
    case CertifiedSign::Positive: return 1;
    case CertifiedSign::Negative: return -1;
    default: return 0;
    }
}

} // namespace

CaseResult to_case(const SignReport& rep)
{
    CaseResult out;
    out.theorem = rep.theorem;
    out.params = params_json(rep.params);
    out.params["family"] = rep.family;
    out.params["M"] = rep.order;
    out.verdict = rep.verdict;
    if (rep.first_violation) {
        out.first_violation = json{{"index", *rep.first_violation},
                                   {"sign", to_string(rep.signs[*rep.first_violation])}};
    }
    out.details = json{{"expected_sign", rep.expected_sign},
                       {"first_claimed_index", rep.first_claimed},
                       {"degenerate", rep.degenerate},
                       {"escalated", rep.escalated},
                       {"inconclusive_indices", rep.inconclusive},
                       {"initially_inconclusive_indices", rep.initially_inconclusive}};
    if (rep.mk_sum_zero) out.details["mk_sum_zero"] = *rep.mk_sum_zero;
    if (rep.mk_single_sign_change) out.details["mk_single_sign_change"] = *rep.mk_single_sign_change;
    if (!rep.reason.empty()) out.details["reason"] = rep.reason;
    out.signs = rep.signs;
    return out;
}

CaseResult to_case(const TwoSidedBoundReport& rep)
{
    CaseResult out;
    out.theorem = rep.theorem;
    out.params = params_json(rep.params);
    out.verdict = rep.verdict;
    json points = json::array();
    for (const auto& pt : rep.points) {
        json p{{"x", to_string(pt.x)}, {"ratio", to_json(pt.ratio)}, {"verdict", to_string(pt.verdict)}};
        if (!pt.note.empty()) p["note"] = pt.note;
        if (pt.verdict == Verdict::Violated && out.first_violation.is_null()) out.first_violation = p;
        points.push_back(std::move(p));
    }
    out.details = json{{"lower_bound", to_json(rep.lower_bound)}, {"upper_bound", "1"}, {"points", points}};
    if (rep.approaches_lower) {
        out.details["approaches_lower_at_extreme_x"] = *rep.approaches_lower;
        out.details["relative_gap_at_extreme_x"] = rep.gap_at_extreme;
    }
    return out;
}

CaseResult to_case(const CurvatureReport& rep)
{
    CaseResult out;
    out.theorem = rep.theorem;
    out.params = params_json(rep.params);
    out.verdict = rep.verdict;
    std::size_t verified = 0, inconclusive = 0;
    json undecided = json::array();
    for (const auto& pt : rep.points) {
        if (pt.verdict == Verdict::Verified) ++verified;
        if (pt.verdict == Verdict::Inconclusive) {
            ++inconclusive;
            undecided.push_back(json{{"p", to_string(pt.p)}, {"x", to_string(pt.x)}, {"note", pt.note}});
        }
        if (pt.verdict == Verdict::Violated && out.first_violation.is_null()) {
            out.first_violation = json{{"p", to_string(pt.p)},
                                       {"x", to_string(pt.x)},
                                       {"middle_squared", to_json(pt.middle_squared)},
                                       {"outer_product", to_json(pt.outer_product)}};
        }
    }
    out.details = json{{"claim", rep.claim == Curvature::Concave ? "log-concave" : "log-convex"},
                       {"points", rep.points.size()},
                       {"verified_points", verified},
                       {"inconclusive_points", inconclusive}};
    if (!undecided.empty()) out.details["undecided"] = undecided;
    return out;
}

CaseResult to_case(const RatioSequenceReport& rep)
{
    CaseResult out;
    out.theorem = rep.theorem;
    out.params = params_json(rep.params);
    out.verdict = rep.verdict;
    if (rep.first_violation) out.first_violation = json{{"step", *rep.first_violation}};
    json ratios = json::array();
    for (const auto& r : rep.ratios) ratios.push_back(to_json(r));
    out.details = json{{"claim", rep.increasing ? "increasing" : "decreasing"},
                       {"ratios", ratios},
                       {"undecided_steps", rep.undecided}};
    return out;
}

CaseResult conjecture_case(const ConjectureReport& rep, const Params& params, double max_undecided)
{
    CaseResult out;
    out.theorem = "conjecture";
    out.params = params_json(params);
    const std::size_t steps = rep.points.empty() ? 0 : rep.points.size() - 1;
    const double undecided_fraction = steps ? static_cast<double>(rep.undecided) / static_cast<double>(steps) : 0.0;
    if (rep.violations > 0) {
        out.verdict = Verdict::Violated;
    } else if (undecided_fraction > max_undecided) {
        out.verdict = Verdict::Inconclusive;
    } else {
        out.verdict = Verdict::Verified;
    }
    for (const auto& pt : rep.points) {
        if (pt.step == StepStatus::Violation) {
            out.first_violation = json{{"x", to_string(pt.x)}, {"ratio", to_json(pt.ratio)}};
            break;
        }
    }
    out.details = json{{"branch", rep.positive_branch ? "positive" : "negative"},
                       {"bound", to_json(rep.bound)},
                       {"points", rep.points.size()},
                       {"monotone_steps", rep.monotone_steps},
                       {"violations", rep.violations},
                       {"undecided_steps", rep.undecided},
                       {"out_of_bounds", rep.out_of_bounds},
                       {"gap_to_one", rep.gap_to_one},
                       {"gap_to_bound", rep.gap_to_bound}};
    return out;
}

std::string conjecture_csv(const ConjectureReport& rep)
{
    std::ostringstream os;
    os << "x,Q_lo,Q_hi," << (rep.positive_branch ? "bound_A" : "bound_B") << ",decided_monotone_step\n";
    const std::string bound =
        rep.bound.exact ? to_string(*rep.bound.exact) : to_json(rep.bound.enclosure).at("lo").get<std::string>();
    for (const auto& pt : rep.points) {
        const json q = to_json(pt.ratio);
        os << to_string(pt.x) << ',' << q.at("lo").get<std::string>() << ',' << q.at("hi").get<std::string>() << ','
           << bound << ',' << to_string(pt.step) << '\n';
    }
    return os.str();
}

std::vector<Rational> log_spaced_grid(const Rational& lo, const Rational& hi, std::size_t n)
{
    if (!(lo > 0 && hi > lo) || n < 2) {
        throw std::invalid_argument("log_spaced_grid: requires 0 < lo < hi and n >= 2");
    }
    const double l = std::log(to_double(lo));
    const double h = std::log(to_double(hi));
    std::vector<Rational> out{lo};
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double v = std::exp(l + (h - l) * static_cast<double>(i) / static_cast<double>(n - 1));
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.5e", v);
        Rational q = parse_rational(buf);
        if (q <= out.back() || q >= hi) {
            throw std::invalid_argument("log_spaced_grid: too many points for 6-digit rounding");
        }
        out.push_back(q);
    }
    out.push_back(hi);
    return out;
}

namespace {

Rational r(long p, long q = 1) { return Rational(p, q); }

const std::vector<Rational>& base_grid()
{
    static const std::vector<Rational> g{r(1, 2), r(1), r(3, 2), r(2), r(3)};
    return g;
}

std::vector<std::pair<Rational, Rational>> ordered_pairs(const std::vector<Rational>& g)
{
    std::vector<std::pair<Rational, Rational>> out;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) out.emplace_back(g[i], g[j]);
    return out;
}

std::vector<Rational> filter(const std::vector<Rational>& g, const std::function<bool(const Rational&)>& keep)
{
    std::vector<Rational> out;
    std::copy_if(g.begin(), g.end(), std::back_inserter(out), keep);
    return out;
}

const std::vector<Rational> kPosX{r(1, 4), r(1, 2), r(3, 4)};
const std::vector<Rational> kNegX{r(-1, 4), r(-1, 2), r(-3, 4), r(-2)};
const std::vector<Rational> kDeltas{r(1, 2), r(1)};

// Random tuples a < b, delta from the seed, small denominators.
std::vector<std::array<Rational, 3>> random_tuples(std::uint64_t seed, std::size_t n)
{
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<long> num(1, 24), den(1, 6);
    std::vector<std::array<Rational, 3>> out;
    while (out.size() < n) {
        Rational a(num(gen), den(gen)), b(num(gen), den(gen)), d(num(gen), den(gen));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        out.push_back({a, b, d});
    }
    return out;
}

struct NamedRule {
    std::string name;
    WeightRule rule;
};

std::vector<NamedRule> upper_rules()
{
    return {{"1f1-upper c=1", WeightRule::kummer_upper(1)},
            {"1f1-upper c=2", WeightRule::kummer_upper(2)},
            {"1f1-upper c=3", WeightRule::kummer_upper(3)},
            {"2f1-upper b=2 c=1", WeightRule::gauss_upper(2, 1)},
            {"2f1-upper b=3 c=3/2", WeightRule::gauss_upper(3, r(3, 2))},
            {"2f1-upper b=1 c=2", WeightRule::gauss_upper(1, 2)},
            {"2f1-upper b=1/2 c=3/2", WeightRule::gauss_upper(r(1, 2), r(3, 2))},
            {"constant", WeightRule::constant()}};
}

std::vector<NamedRule> gamma_rules()
{
    return {{"1f1-gamma c=1", WeightRule::kummer_gamma(1)},
            {"1f1-gamma c=2", WeightRule::kummer_gamma(2)},
            {"1f1-gamma c=3", WeightRule::kummer_gamma(3)},
            {"2f1-gamma b=2 c=1", WeightRule{{r(2)}, {r(1)}, 1}},
            {"2f1-gamma b=1 c=2", WeightRule{{r(1)}, {r(2)}, 1}}};
}

std::vector<NamedRule> lower_rules()
{
    return {{"1f1-lower a=1/2", WeightRule::kummer_lower(r(1, 2))},
            {"1f1-lower a=1", WeightRule::kummer_lower(1)},
            {"1f1-lower a=2", WeightRule::kummer_lower(2)},
            {"2f1-lower a=1/2 b=3", WeightRule::gauss_lower(r(1, 2), 3)},
            {"2f1-lower a=1 b=2", WeightRule::gauss_lower(1, 2)}};
}

void coefficient_cases(std::vector<SuiteCase>& out, const std::string& theorem, SeriesFamily family,
                       const std::vector<NamedRule>& rules, std::size_t order, const std::vector<Rational>& deltas,
                       const SuiteOptions& opts)
{
    std::vector<std::array<Rational, 3>> tuples;
    for (const auto& [a, b] : ordered_pairs(base_grid()))
        for (const auto& d : deltas) tuples.push_back({a, b, d});
    if (opts.seed) {
        auto extra = random_tuples(*opts.seed, 10);
        tuples.insert(tuples.end(), extra.begin(), extra.end());
    }
    const Precision prec = opts.eval.precision;
    for (const auto& nr : rules) {
        for (const auto& t : tuples) {
            HypSeriesSpec spec{family, nr.rule, order};
            out.push_back({theorem, [=] {
                               SignReport rep;
                               if (theorem == "thm1") rep = verify_theorem1(spec, t[0], t[1], t[2]);
                               else if (theorem == "thm2") rep = verify_theorem2(spec, t[0], t[1], t[2], prec);
                               else rep = verify_theorem3(spec, t[0], t[1], t[2]);
                               rep.family = nr.name;
                               return to_case(rep);
                           }});
        }
    }
}

FamilyEval kummer_in_a(const Rational& c)
{
    return [c](const Rational& a, const Rational& x, const EvalOptions& o) { return eval_1f1(a, c, x, o); };
}

FamilyEval gauss_in_a(const Rational& b, const Rational& c)
{
    return [b, c](const Rational& a, const Rational& x, const EvalOptions& o) { return eval_2f1(a, b, c, x, o); };
}

// A curvature check and, when a ratio grid is given, one monotone-ratio check per x; combined into one case.
CaseResult curvature_with_ratios(const std::string& theorem, const Params& params, const FamilyEval& f,
                                 Curvature claim, const std::vector<Rational>& p_grid,
                                 const std::vector<Rational>& ratio_grid, const Rational& delta,
                                 const std::vector<Rational>& xs, const EvalOptions& eval)
{
    CaseResult out = to_case(check_curvature(theorem, params, f, claim, p_grid, delta, xs, eval));
    if (ratio_grid.size() < 2) return out;
    json seqs = json::array();
    for (const auto& x : xs) {
        Params px = params;
        px.emplace_back("x", x);
        auto seq = check_ratio_sequence(theorem, px, f, claim == Curvature::Convex, ratio_grid, delta, x, eval);
        out.verdict = combine(out.verdict, seq.verdict);
        if (seq.verdict == Verdict::Violated && out.first_violation.is_null()) {
            out.first_violation = json{{"x", to_string(x)}, {"ratio_step", *seq.first_violation}};
        }
        seqs.push_back(json{{"x", to_string(x)}, {"verdict", to_string(seq.verdict)}, {"undecided_steps", seq.undecided}});
    }
    out.details["ratio_sequences"] = seqs;
    return out;
}

void add_curvature(std::vector<SuiteCase>& out, const std::string& theorem, Params params, FamilyEval f,
                   Curvature claim, std::vector<Rational> p_grid, std::vector<Rational> ratio_grid, Rational delta,
                   std::vector<Rational> xs, const EvalOptions& eval)
{
    if (p_grid.empty()) return;
    params.emplace_back("delta", delta);
    out.push_back({theorem, [=] {
                       return curvature_with_ratios(theorem, params, f, claim, p_grid, ratio_grid, delta, xs, eval);
                   }});
}

void add_two_sided(std::vector<SuiteCase>& out, const std::string& theorem, Params params, FamilyEval f, Rational a,
                   Rational b, Rational delta, std::function<GammaRatio(Precision)> bound, std::vector<Rational> xs,
                   const EvalOptions& eval)
{
    out.push_back({theorem, [=] {
                       return to_case(check_two_sided(theorem, params, f, a, b, delta, bound(eval.precision), xs, eval));
                   }});
}

void thm4b_cases(std::vector<SuiteCase>& out, const SuiteOptions& opts)
{
    const std::vector<Rational> pos_p{0, r(1, 2), 1, r(3, 2), 2, 3};
    const std::vector<Rational> all_p{r(-3, 2), -1, r(-1, 2), 0, r(1, 2), 1, r(3, 2), 2, 3};
    for (const auto& c : base_grid()) {
        for (const auto& d : kDeltas) {
            add_curvature(out, "thm4b", {{"c", c}}, kummer_in_a(c), Curvature::Concave, pos_p, pos_p, d,
                          {r(1, 4), r(1, 2), r(3, 4), 2}, opts.eval);
            add_curvature(out, "thm4b", {{"c", c}}, kummer_in_a(c), Curvature::Concave,
                          filter(all_p, [&](const Rational& p) { return p <= c - 2 * d; }),
                          filter(all_p, [&](const Rational& p) { return p <= c - d; }), d, kNegX, opts.eval);
        }
    }
}

void thm4c_cases(std::vector<SuiteCase>& out, const SuiteOptions& opts)
{
    const std::vector<Rational> ab{r(1, 2), 1, r(3, 2), 2};
    for (const auto& c : std::vector<Rational>{2, 3, 4}) {
        for (const auto& d : kDeltas) {
            for (const auto& [a, b] : ordered_pairs(ab)) {
                if (!(b < c - d)) continue;
                add_two_sided(out, "thm4c", {{"a", a}, {"b", b}, {"delta", d}, {"c", c}}, kummer_in_a(c), a, b, d,
                              [=](Precision p) { return gamma_cross_ratio(c - b - d, c - a - d, d, p).reciprocal(); },
                              {r(-1, 4), -1, -4, -16}, opts.eval);
            }
        }
    }
}

void thm4d_cases(std::vector<SuiteCase>& out)
{
    const std::vector<Rational> g{r(1, 2), 1, 2, 3};
    for (const auto& a : g) {
        for (const auto& b : g) {
            for (const auto& c : std::vector<Rational>{1, 2}) {
                out.push_back({"thm4d", [=] {
                                   CaseResult res;
                                   res.theorem = "thm4d";
                                   res.params = json{{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)},
                                                     {"m", "2..5"}};
                                   res.verdict = Verdict::Verified;
                                   json per_m = json::array();
                                   for (unsigned m = 2; m <= 5; ++m) {
                                       auto link = check_4f3_coefficient_link(a, b, c, m);
                                       per_m.push_back(json{{"m", m},
                                                            {"sum", to_string(link.sum)},
                                                            {"phi", to_string(link.phi)},
                                                            {"factor", to_string(link.factor)},
                                                            {"proportional", link.proportional},
                                                            {"sum_sign_matches", link.sum_sign_matches}});
                                       if (!link.passed()) {
                                           res.verdict = Verdict::Violated;
                                           if (res.first_violation.is_null()) res.first_violation = per_m.back();
                                       }
                                   }
                                   res.details = json{{"per_m", per_m}};
                                   return res;
                               }});
            }
        }
    }
}

void qfq_cases(std::vector<SuiteCase>& out)
{
    const std::vector<Rational> g{r(1, 2), 1, 2, 3};
    for (unsigned q : {1u, 2u}) {
        for (const auto& [beta, alpha] : ordered_pairs(g)) {
            out.push_back({"qfq", [=] {
                               CaseResult res;
                               res.theorem = "qfq";
                               res.params = json{{"q", q}, {"alpha", to_string(alpha)}, {"beta", to_string(beta)},
                                                 {"m", "2..6"}};
                               std::size_t admitted = 0, positive = 0, skipped = 0;
                               auto visit = [&](const std::vector<Rational>& A, const std::vector<Rational>& B) {
                                   for (unsigned m = 2; m <= 6; ++m) {
                                       auto rep = eval_qfq_sum(alpha, beta, A, B, m);
                                       if (rep.verdict == SumVerdict::SkippedHypothesis) {
                                           ++skipped;
                                           continue;
                                       }
                                       ++admitted;
                                       if (rep.verdict == SumVerdict::Positive) {
                                           ++positive;
                                       } else if (res.first_violation.is_null()) {
                                           json a = json::array(), b = json::array();
                                           for (const auto& v : A) a.push_back(to_string(v));
                                           for (const auto& v : B) b.push_back(to_string(v));
                                           res.first_violation = json{{"a", a}, {"b", b}, {"m", m},
                                                                      {"value", to_string(rep.value)}};
                                       }
                                   }
                               };
                               for (const auto& b1 : g) {
                                   if (q == 1) {
                                       visit({}, {b1});
                                       continue;
                                   }
                                   for (const auto& b2 : g) {
                                       if (b2 < b1) continue;
                                       for (const auto& a1 : g) visit({a1}, {b1, b2});
                                   }
                               }
                               res.verdict = positive == admitted && admitted > 0 ? Verdict::Verified
                                             : positive < admitted                 ? Verdict::Violated
                                                                                   : Verdict::Inconclusive;
                               res.details = json{{"admitted", admitted}, {"positive", positive},
                                                  {"skipped_hypothesis", skipped}};
                               return res;
                           }});
        }
    }
}

void thm5_cases(std::vector<SuiteCase>& out, const SuiteOptions& opts)
{
    for (const auto& d : kDeltas) {
        for (const auto& a : std::vector<Rational>{r(1, 2), 1, 2, r(-1, 2), -1, r(-3, 2)}) {
            FamilyEval in_c = [a](const Rational& c, const Rational& x, const EvalOptions& o) {
                return eval_1f1(a, c, x, o);
            };
            const bool pos = a > 0;
            add_curvature(out, "thm5b", {{"a", a}}, in_c, Curvature::Convex, base_grid(), base_grid(), d,
                          pos ? std::vector<Rational>{r(1, 4), r(1, 2), r(3, 4), 2} : kNegX, opts.eval);
        }
        for (const auto& a : base_grid()) {
            for (const auto& c : base_grid()) {
                if (a == c) continue;
                FamilyEval in_mu = [a, c](const Rational& mu, const Rational& x, const EvalOptions& o) {
                    return eval_1f1(a + mu, c + mu, x, o);
                };
                add_curvature(out, "thm5c", {{"a", a}, {"c", c}}, in_mu, Curvature::Convex, {0, r(1, 2), 1, 2}, {}, d,
                              a > c ? std::vector<Rational>{r(1, 4), r(1, 2), r(3, 4), 2} : kNegX, opts.eval);
            }
        }
    }
}

void thm6_cases(std::vector<SuiteCase>& out, const SuiteOptions& opts)
{
    const std::vector<Rational> pos_p{0, r(1, 2), 1, 2, 3};
    const std::vector<Rational> all_p{r(-3, 2), -1, r(-1, 2), 0, r(1, 2), 1, r(3, 2), 2};
    for (const auto& d : kDeltas) {
        auto capped = [&](const Rational& c) {
            return filter(all_p, [&](const Rational& p) { return p + 2 * d <= c; });
        };
        for (auto [b, c] : std::vector<std::pair<Rational, Rational>>{{2, 1}, {3, r(3, 2)}, {r(3, 2), r(1, 2)}})
            add_curvature(out, "thm6b", {{"b", b}, {"c", c}}, gauss_in_a(b, c), Curvature::Concave, pos_p, {}, d,
                          kPosX, opts.eval);
        for (auto [b, c] : std::vector<std::pair<Rational, Rational>>{{r(-1, 2), 1}, {r(-3, 2), 2}})
            add_curvature(out, "thm6b", {{"b", b}, {"c", c}}, gauss_in_a(b, c), Curvature::Concave, pos_p, {}, d,
                          kNegX, opts.eval);
        for (auto [b, c] : std::vector<std::pair<Rational, Rational>>{{r(-1, 2), 2}, {r(-3, 2), 3}})
            add_curvature(out, "thm6b", {{"b", b}, {"c", c}}, gauss_in_a(b, c), Curvature::Concave, capped(c), {}, d,
                          kPosX, opts.eval);
        for (auto [b, c] : std::vector<std::pair<Rational, Rational>>{{3, 2}, {3, r(3, 2)}})
            add_curvature(out, "thm6b", {{"b", b}, {"c", c}}, gauss_in_a(b, c), Curvature::Concave, capped(c), {}, d,
                          kNegX, opts.eval);

        // Two-sided bounds in a < a'.
        auto first = [d](Rational a, Rational ap) {
            return [=](Precision p) { return gamma_cross_ratio(a, ap, d, p).reciprocal(); };
        };
        auto second = [d](Rational a, Rational ap, Rational c) {
            return [=](Precision p) { return gamma_cross_ratio(c - ap - d, c - a - d, d, p).reciprocal(); };
        };
        const std::vector<Rational> ag{r(1, 2), 1, r(3, 2), 2};
        for (const auto& [a, ap] : ordered_pairs(ag)) {
            for (auto [b, c] : std::vector<std::pair<Rational, Rational>>{{2, 1}, {3, r(3, 2)}})
                add_two_sided(out, "thm6c", {{"a", a}, {"a'", ap}, {"b", b}, {"c", c}, {"delta", d}}, gauss_in_a(b, c),
                              a, ap, d, first(a, ap), kPosX, opts.eval);
            for (auto [b, c] : std::vector<std::pair<Rational, Rational>>{{r(-1, 2), 1}, {r(-3, 2), 2}})
                add_two_sided(out, "thm6c", {{"a", a}, {"a'", ap}, {"b", b}, {"c", c}, {"delta", d}}, gauss_in_a(b, c),
                              a, ap, d, first(a, ap), kNegX, opts.eval);
            for (auto [b, c] : std::vector<std::pair<Rational, Rational>>{{r(-1, 2), 3}, {r(-3, 2), 4}}) {
                if (!(ap < c - d)) continue;
                add_two_sided(out, "thm6c", {{"a", a}, {"a'", ap}, {"b", b}, {"c", c}, {"delta", d}}, gauss_in_a(b, c),
                              a, ap, d, second(a, ap, c), kPosX, opts.eval);
            }
            for (auto [b, c] : std::vector<std::pair<Rational, Rational>>{{4, 3}, {5, 4}}) {
                if (!(ap < c - d)) continue;
                add_two_sided(out, "thm6c", {{"a", a}, {"a'", ap}, {"b", b}, {"c", c}, {"delta", d}}, gauss_in_a(b, c),
                              a, ap, d, second(a, ap, c), kNegX, opts.eval);
            }
        }
    }
}

void thm7_cases(std::vector<SuiteCase>& out, const SuiteOptions& opts)
{
    const std::vector<Rational> p{r(-3, 2), r(-1, 2), 0, r(1, 2), 1, 2};
    const std::vector<Rational> xs{-2, r(-3, 4), r(-1, 4), r(1, 4), r(1, 2), r(3, 4)};
    for (const auto& d : kDeltas)
        for (auto [b, c] : std::vector<std::pair<Rational, Rational>>{{1, 2}, {r(1, 2), r(3, 2)}, {1, 3}})
            add_curvature(out, "thm7b", {{"b", b}, {"c", c}}, gauss_in_a(b, c), Curvature::Convex, p, p, d, xs,
                          opts.eval);
}

void thm8_cases(std::vector<SuiteCase>& out, const SuiteOptions& opts)
{
    const std::vector<Rational> mu{0, r(1, 2), 1, 2};
    for (const auto& d : kDeltas) {
        struct AB {
            Rational a, b;
            std::vector<Rational> xs;
        };
        for (const auto& t : std::vector<AB>{{r(1, 2), 1, kPosX}, {2, r(3, 2), kPosX}, {r(-1, 2), 1, kNegX},
                                             {r(-3, 2), 2, kNegX}, {1, r(-1, 2), kNegX}}) {
            FamilyEval in_c = [t](const Rational& c, const Rational& x, const EvalOptions& o) {
                return eval_2f1(t.a, t.b, c, x, o);
            };
            add_curvature(out, "thm8b", {{"a", t.a}, {"b", t.b}}, in_c, Curvature::Convex, base_grid(), base_grid(),
                          d, t.xs, opts.eval);
        }
        struct ABC {
            Rational a, b, c;
            std::vector<Rational> xs;
        };
        for (const auto& t : std::vector<ABC>{{1, 2, 1, kPosX},
                                              {r(1, 2), 3, r(3, 2), kPosX},
                                              {r(-1, 2), 1, 2, kPosX},
                                              {r(-3, 2), r(1, 2), 1, kPosX},
                                              {1, 1, 2, kNegX},
                                              {r(1, 2), r(1, 2), r(3, 2), kNegX}}) {
            FamilyEval f = [t](const Rational& m, const Rational& x, const EvalOptions& o) {
                return eval_2f1(t.a, t.b + m, t.c + m, x, o);
            };
            add_curvature(out, "thm8c", {{"a", t.a}, {"b", t.b}, {"c", t.c}}, f, Curvature::Convex, mu, {}, d, t.xs,
                          opts.eval);
        }
        for (const auto& t : std::vector<ABC>{{r(1, 2), 2, 1, kNegX},
                                              {1, 3, r(3, 2), kNegX},
                                              {r(1, 2), 1, 2, kPosX},
                                              {1, r(1, 2), r(3, 2), kPosX}}) {
            FamilyEval f = [t](const Rational& m, const Rational& x, const EvalOptions& o) {
                return eval_2f1(t.a + m, t.b + m, t.c + m, x, o);
            };
            add_curvature(out, "thm8d", {{"a", t.a}, {"b", t.b}, {"c", t.c}}, f, Curvature::Convex, mu, {}, d, t.xs,
                          opts.eval);
        }
    }
}

void thm9_cases(std::vector<SuiteCase>& out, const SuiteOptions& opts)
{
    struct Lists {
        std::vector<Rational> a, b;
    };
    const std::vector<Lists> increasing{{{1, 1}, {2, 3}}, {{r(1, 2), 1}, {1, 2}}, {{1, 1, 1}, {2, 2, 3}}};
    const std::vector<Lists> decreasing{{{2, 3}, {1, 1}}, {{1, 2}, {r(1, 2), 1}}};
    auto lists_params = [](const Lists& l) {
        Params p;
        for (std::size_t i = 0; i < l.a.size(); ++i) p.emplace_back("a" + std::to_string(i + 1), l.a[i]);
        for (std::size_t i = 0; i < l.b.size(); ++i) p.emplace_back("b" + std::to_string(i + 1), l.b[i]);
        return p;
    };
    auto family = [](const Lists& l) { return upper_family_eval(WeightRule::pfq_upper(l.a, l.b)); };
    const std::size_t order = opts.order;
    std::vector<Lists> all = increasing;
    all.insert(all.end(), decreasing.begin(), decreasing.end());
    for (const auto& l : all) {
        for (auto [al, be] : std::vector<std::pair<Rational, Rational>>{{r(1, 2), 1}, {1, 2}, {r(1, 2), 3}}) {
            for (const auto& d : kDeltas) {
                out.push_back({"thm9a", [=] { return to_case(verify_pfq_chain(l.a, l.b, al, be, d, order)); }});
            }
        }
    }
    const std::vector<Rational> p{0, r(1, 2), 1, 2};
    for (const auto& d : kDeltas) {
        for (const auto& l : increasing) {
            add_curvature(out, "thm9b", lists_params(l), family(l), Curvature::Convex, p, p, d, kPosX, opts.eval);
            // Componentwise b_i > a_i extends the claim to x < 0 within the unit disc.
            add_curvature(out, "thm9b", lists_params(l), family(l), Curvature::Convex, p, p, d,
                          {r(-1, 4), r(-1, 2), r(-3, 4)}, opts.eval);
        }
        for (const auto& l : decreasing) {
            add_curvature(out, "thm9c", lists_params(l), family(l), Curvature::Concave, p, p, d, kPosX, opts.eval);
            for (auto [al, be] : std::vector<std::pair<Rational, Rational>>{{r(1, 2), 1}, {1, 3}}) {
                Params ps = lists_params(l);
                ps.emplace_back("alpha", al);
                ps.emplace_back("beta", be);
                ps.emplace_back("delta", d);
                add_two_sided(out, "thm9d", ps, family(l), al, be, d,
                              [=](Precision pr) { return gamma_cross_ratio(al, be, d, pr).reciprocal(); }, kPosX,
                              opts.eval);
            }
        }
    }
}

void corollary_cases(std::vector<SuiteCase>& out, const SuiteOptions& opts)
{
    for (const auto& c : std::vector<Rational>{1, 2, 3}) {
        HypSeriesSpec spec{SeriesFamily::UpperFactor, WeightRule::kummer_upper(c), opts.order};
        for (const auto& [a, b] : ordered_pairs(base_grid())) {
            for (const auto& d : kDeltas) {
                out.push_back({"cor1", [=] {
                                   auto rep = verify_corollary_twosided(spec, a, b, d, {r(1, 4), 1, 4, 16, 50},
                                                                        opts.eval, 0.05);
                                   rep.params.emplace_back("c", c);
                                   return to_case(rep);
                               }});
            }
        }
    }
    for (auto [bw, c] : std::vector<std::pair<Rational, Rational>>{{2, 1}, {3, r(3, 2)}}) {
        HypSeriesSpec spec{SeriesFamily::UpperFactor, WeightRule::gauss_upper(bw, c), opts.order};
        for (const auto& [a, b] : ordered_pairs(base_grid())) {
            out.push_back({"cor1", [=] {
                               auto rep = verify_corollary_twosided(spec, a, b, 1, kPosX, opts.eval, std::nullopt);
                               rep.params.emplace_back("2f1_b", bw);
                               rep.params.emplace_back("c", c);
                               return to_case(rep);
                           }});
        }
    }
    for (const auto& c : std::vector<Rational>{1, 2, 3, 5}) {
        HypSeriesSpec spec{SeriesFamily::UpperFactor, WeightRule::kummer_upper(c), opts.order};
        for (const auto& a : base_grid()) {
            out.push_back({"turan", [=] {
                               auto rep = verify_turan(spec, a, 1, {r(1, 4), 1, 3, 10}, opts.eval);
                               rep.params.emplace_back("c", c);
                               return to_case(rep);
                           }});
        }
    }
}

void lemma_cases(std::vector<SuiteCase>& out, const SuiteOptions& opts)
{
    const std::uint64_t seed = opts.seed.value_or(1);
    out.push_back({"lemma1", [seed] {
                       CaseResult res;
                       res.theorem = "lemma1";
                       res.params = json{{"pairs", 1000}, {"max_degree", 6}, {"seed", seed}};
                       std::mt19937_64 gen(seed);
                       std::uniform_int_distribution<long> num(1, 20), den(1, 5), deg(1, 6);
                       std::size_t nonnegative = 0;
                       for (int t = 0; t < 1000; ++t) {
                           const std::size_t len = static_cast<std::size_t>(deg(gen)) + 1;
                           Polynomial B, ratios, A;
                           for (std::size_t k = 0; k < len; ++k) B.emplace_back(num(gen), den(gen));
                           for (std::size_t k = 0; k < len; ++k) ratios.emplace_back(num(gen), den(gen));
                           std::sort(ratios.begin(), ratios.end());
                           for (std::size_t k = 0; k < len; ++k) A.push_back(ratios[k] * B[k]);
                           auto w = wronskian_coeffs(A, B);
                           if (std::all_of(w.begin(), w.end(), [](const Rational& c) { return c >= 0; })) {
                               ++nonnegative;
                           } else if (res.first_violation.is_null()) {
                               res.first_violation = json{{"pair", t}};
                           }
                       }
                       res.verdict = nonnegative == 1000 ? Verdict::Verified : Verdict::Violated;
                       res.details = json{{"nonnegative_pairs", nonnegative}};
                       return res;
                   }});
    for (unsigned n : {1u, 2u}) {
        out.push_back({"remark6", [n] {
                           auto rep = necessity_witness(n);
                           CaseResult res;
                           res.theorem = "remark6";
                           res.params = json{{"degree", n}, {"grid", "{1/2,1,2,3}"}};
                           res.verdict = rep.passed() ? Verdict::Verified : Verdict::Violated;
                           res.details = json{{"pairs_checked", rep.pairs_checked},
                                              {"chain_violations", rep.chain_violations},
                                              {"negative_coefficient_pairs", rep.negative_coefficient_pairs},
                                              {"witnessed", rep.witnessed},
                                              {"equivalence_holds", rep.equivalence_holds}};
                           return res;
                       }});
    }
}

void transform_cases(std::vector<SuiteCase>& out, const SuiteOptions& opts)
{
    static constexpr double kMaxResidual = 1e-12;
    auto make = [](const std::string& name, json params, std::vector<std::pair<Rational, TransformCheck>> checks) {
        CaseResult res;
        res.theorem = name;
        res.params = std::move(params);
        res.verdict = Verdict::Verified;
        double worst = 0.0;
        for (const auto& [x, chk] : checks) {
            worst = std::max(worst, chk.residual);
            if (!chk.passed(kMaxResidual)) {
                res.verdict = Verdict::Violated;
                if (res.first_violation.is_null())
                    res.first_violation = json{{"x", to_string(x)}, {"residual", chk.residual},
                                               {"overlap", chk.all_overlap}};
            }
        }
        res.details = json{{"points", checks.size()}, {"max_residual", worst}, {"threshold", kMaxResidual}};
        return res;
    };
    const EvalOptions eval = opts.eval;
    const std::vector<Rational> kx{r(-2), r(-3, 4), r(-1, 2), r(-1, 4), r(1, 4), r(1, 2), r(3, 4), r(2)};
    for (const auto& a : std::vector<Rational>{r(-1, 2), r(1, 2), 1, r(3, 2), 2, 3}) {
        for (const auto& c : base_grid()) {
            out.push_back({"kummer", [=] {
                               std::vector<std::pair<Rational, TransformCheck>> checks;
                               for (const auto& x : kx) checks.emplace_back(x, check_kummer_transform(a, c, x, eval));
                               return make("kummer", json{{"a", to_string(a)}, {"c", to_string(c)}}, checks);
                           }});
        }
    }
    const std::vector<Rational> ex{r(-3, 4), r(-1, 2), r(-1, 4), r(1, 4), r(1, 2), r(3, 4)};
    const std::vector<Rational> ab{r(-1, 2), r(1, 2), 1, 2};
    for (const auto& a : ab) {
        for (const auto& b : ab) {
            out.push_back({"euler-pfaff", [=] {
                               std::vector<std::pair<Rational, TransformCheck>> checks;
                               for (const auto& c : base_grid())
                                   for (const auto& x : ex) checks.emplace_back(x, check_euler_pfaff(a, b, c, x, eval));
                               return make("euler-pfaff", json{{"a", to_string(a)}, {"b", to_string(b)}, {"c", "grid"}},
                                           checks);
                           }});
        }
    }
}

void conjecture_cases(std::vector<SuiteCase>& out, const SuiteOptions& opts)
{
    const EvalOptions eval = opts.eval;
    out.push_back({"conjecture", [eval] {
                       auto grid = log_spaced_grid(r(1, 1000), 50, 64);
                       auto rep = explore_conjecture(1, 2, 1, 3, grid, eval);
                       return conjecture_case(rep, {{"a", 1}, {"b", 2}, {"delta", 1}, {"c", 3}});
                   }});
    out.push_back({"conjecture", [eval] {
                       auto grid = log_spaced_grid(r(1, 1000), 50, 64);
                       std::vector<Rational> neg;
                       for (auto it = grid.rbegin(); it != grid.rend(); ++it) neg.push_back(-*it);
                       auto rep = explore_conjecture(r(1, 2), 1, r(1, 2), 3, neg, eval);
                       return conjecture_case(rep, {{"a", r(1, 2)}, {"b", 1}, {"delta", r(1, 2)}, {"c", 3}});
                   }});
}

} // namespace

const std::vector<std::string>& known_theorems()
{
    static const std::vector<std::string> names{"thm1",  "thm2",  "thm3",  "cor1",  "thm4b",  "thm4c",  "thm4d",
                                                "qfq",   "thm5",  "thm6",  "thm7",  "thm8",   "thm9",   "lemma1",
                                                "transforms", "conjecture"};
    return names;
}

std::vector<SuiteCase> default_cases(const std::string& theorem, const SuiteOptions& opts)
{
    std::vector<SuiteCase> out;
    if (theorem == "all") {
        for (const auto& t : known_theorems()) {
            auto part = default_cases(t, opts);
            out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
        return out;
    }
    if (theorem == "thm1")
        coefficient_cases(out, "thm1", SeriesFamily::UpperFactor, upper_rules(), opts.order, {r(1, 2), 1, 2}, opts);
    else if (theorem == "thm2")
        coefficient_cases(out, "thm2", SeriesFamily::GammaFactor, gamma_rules(), opts.psi_order, {r(1, 2), 1, 2}, opts);
    else if (theorem == "thm3")
        coefficient_cases(out, "thm3", SeriesFamily::LowerFactor, lower_rules(), opts.order, {r(1, 2), 1, 2}, opts);
    else if (theorem == "cor1") corollary_cases(out, opts);
    else if (theorem == "thm4b") thm4b_cases(out, opts);
    else if (theorem == "thm4c") thm4c_cases(out, opts);
    else if (theorem == "thm4d") thm4d_cases(out);
    else if (theorem == "qfq") qfq_cases(out);
    else if (theorem == "thm5") thm5_cases(out, opts);
    else if (theorem == "thm6") thm6_cases(out, opts);
    else if (theorem == "thm7") thm7_cases(out, opts);
    else if (theorem == "thm8") thm8_cases(out, opts);
    else if (theorem == "thm9") thm9_cases(out, opts);
    else if (theorem == "lemma1") lemma_cases(out, opts);
    else if (theorem == "transforms") transform_cases(out, opts);
    else if (theorem == "conjecture") conjecture_cases(out, opts);
    else throw std::invalid_argument("unknown theorem selector '" + theorem + "'");
    return out;
}

std::vector<CaseResult> run_cases(const std::vector<SuiteCase>& cases, unsigned threads)
{
    std::vector<CaseResult> results(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            try {
                results[i] = cases[i].run();
            } catch (const std::exception& e) {
                results[i].theorem = cases[i].theorem;
                results[i].verdict = Verdict::Inconclusive;
                results[i].details = json{{"error", e.what()}};
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, cases.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return results;
}

Summary summarize(const std::vector<CaseResult>& results)
{
    Summary s;
    for (const auto& r : results) {
        switch (r.verdict) {
        case Verdict::Verified: ++s.verified; break;
        case Verdict::Violated: ++s.violated; break;
        case Verdict::Inconclusive: ++s.inconclusive; break;
        }
    }
    return s;
}

int exit_status(const Summary& summary) { return summary.violated > 0 ? 1 : 0; }

json build_report(const json& config_echo, const std::vector<CaseResult>& results)
{
    // FNV-1a over the canonical config dump.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : config_echo.dump()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char id[17];
    std::snprintf(id, sizeof id, "%016llx", static_cast<unsigned long long>(h));

    json cases = json::array();
    for (const auto& r : results) {
        cases.push_back(json{{"theorem", r.theorem},
                             {"params", r.params},
                             {"verdict", to_string(r.verdict)},
                             {"first_violation", r.first_violation},
                             {"details", r.details}});
    }
    const Summary s = summarize(results);
    return json{{"run_id", id},
                {"config_echo", config_echo},
                {"per_case", cases},
                {"summary", {{"verified", s.verified}, {"violated", s.violated}, {"inconclusive", s.inconclusive}}}};
}

std::string signs_csv(const std::vector<CaseResult>& results)
{
    auto quote = [](const std::string& s) { return "\"" + s + "\""; };
    std::ostringstream os;
    os << "case,theorem,family,params,index,sign\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        if (r.signs.empty()) continue;
        std::string family = r.params.value("family", "");
        std::string params;
        for (const auto& [k, v] : r.params.items()) {
            if (k == "family") continue;
            params += (params.empty() ? "" : " ") + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
        }
        for (std::size_t m = 0; m < r.signs.size(); ++m) {
            os << i << ',' << r.theorem << ',' << quote(family) << ',' << quote(params) << ',' << m << ','
               << sign_int(r.signs[m]) << '\n';
        }
    }
    return os.str();
}

} // namespace turankit
