#include "turankit/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

namespace turankit {

std::string PFQSpec::describe() const
{
    std::ostringstream os;
    os << upper.size() << 'F' << lower.size() << '(';
    for (std::size_t i = 0; i < upper.size(); ++i) {
        os << (i ? "," : "") << to_string(upper[i]);
    }
    os << ';';
    for (std::size_t i = 0; i < lower.size(); ++i) {
        os << (i ? "," : "") << to_string(lower[i]);
    }
    os << ')';
    return os.str();
}

std::string to_string(StepStatus status)
{
    switch (status) {
    case StepStatus::First: return "first";
    case StepStatus::Monotone: return "monotone";
    case StepStatus::Violation: return "violation";
    case StepStatus::Undecided: return "undecided";
    }
    return "?";
}

namespace {

constexpr mpfr_prec_t kGuardBits = 16;

// Smallest n with (u)_n = 0, if u is a nonpositive integer.
std::optional<std::size_t> termination_index(const PFQSpec& spec)
{
    std::optional<std::size_t> best;
    for (const auto& u : spec.upper) {
        if (is_nonpositive_integer(u)) {
            const std::size_t n = Rational(-u).get_num().get_ui();
            best = best ? std::min(*best, n) : n;
        }
    }
    return best;
}

// Upper bound B(N) >= |r_n| for every n >= N, where
// r_n = prod(u+n) / prod(l+n) * x / (n+1). Every factor used is
// nonincreasing in n, so the bound at N holds for the whole tail.
// Returns nullopt while N is too small for the factor bounds to apply.
std::optional<Rational> ratio_tail_bound(const PFQSpec& spec, const Rational& ax, std::size_t big_n)
{
    const Rational n(static_cast<long>(big_n));
    std::vector<Rational> uppers;
    for (const auto& u : spec.upper) {
        uppers.push_back(abs(u));
    }
    std::vector<Rational> shifts; // lambda_j = max(0, -l_j)
    for (const auto& l : spec.lower) {
        shifts.push_back(l < 0 ? Rational(-l) : Rational(0));
    }
    for (const auto& s : shifts) {
        if (n <= s) {
            return std::nullopt;
        }
    }
    // Pair the largest uppers with lowers; any leftover upper is paired with 1/(n+1).
    std::sort(uppers.begin(), uppers.end(), [](const Rational& l, const Rational& r) { return l > r; });
    Rational bound = ax;
    std::size_t i = 0;
    for (; i < uppers.size() && i < shifts.size(); ++i) {
        bound *= (n + uppers[i]) / (n - shifts[i]);
    }
    for (std::size_t j = i; j < shifts.size(); ++j) {
        bound /= n - shifts[j];
    }
    if (i < uppers.size()) {
        // p = q + 1: (n + |u|)/(n + 1) is nonincreasing if |u| >= 1, else bounded by 1.
        const Rational f = (n + uppers[i]) / (n + 1);
        bound *= f > 1 ? f : Rational(1);
    } else {
        bound /= n + 1;
    }
    return bound;
}

Rational term_ratio(const PFQSpec& spec, const Rational& x, std::size_t n)
{
    const Rational shift(static_cast<long>(n));
    Rational r = x / (shift + 1);
    for (const auto& u : spec.upper) {
        r *= u + shift;
    }
    for (const auto& l : spec.lower) {
        r /= l + shift;
    }
    return r;
}

void validate_domain(const PFQSpec& spec, const Rational& x, bool terminating)
{
    for (const auto& l : spec.lower) {
        if (is_nonpositive_integer(l)) {
            throw PoleError("lower parameter is a nonpositive integer: " + to_string(l));
        }
    }
    if (terminating) {
        return;
    }
    if (spec.upper.size() > spec.lower.size() + 1) {
        throw DomainError(spec.describe() + " diverges for every x != 0");
    }
    if (spec.upper.size() == spec.lower.size() + 1 && abs(x) >= 1) {
        throw DomainError(spec.describe() + " needs |x| < 1, got x = " + to_string(x));
    }
}

bool better(const EvalResult& a, const EvalResult& b)
{
    return a.value.relative_width() < b.value.relative_width();
}

EvalResult with_retry(const EvalOptions& opts, auto&& evaluate)
{
    EvalResult first = evaluate(opts);
    if (first.converged) {
        return first;
    }
    EvalOptions retry = opts;
    retry.precision = opts.precision.doubled();
    retry.term_cap = opts.term_cap * 2;
    EvalResult second = evaluate(retry);
    second.value = second.value.round_to(opts.precision.plus(kGuardBits));
    return better(second, first) || second.converged ? second : first;
}

} // namespace

EvalResult eval_pfq(const PFQSpec& spec, const Rational& x, const EvalOptions& opts)
{
    const auto stop = termination_index(spec);
    validate_domain(spec, x, stop.has_value());

    if (stop) {
        // Exact finite sum.
        Rational term(1);
        Rational sum(1);
        for (std::size_t n = 0; n < *stop; ++n) {
            term *= term_ratio(spec, x, n);
            sum += term;
        }
        return EvalResult{Interval(sum, opts.precision), *stop + 1, 0.0, true};
    }

    // Alternating sums lose roughly log2(max term / sum) bits to cancellation.
    mpfr_prec_t guard = kGuardBits;
    if (x < 0) {
        guard += static_cast<mpfr_prec_t>(std::ceil(3.0 * std::fabs(to_double(x)))) + 16;
    }
    const Precision work = opts.precision.plus(guard);
    const Rational ax = abs(x);

    Interval term(1L, work);
    Interval sum(1L, work);
    Interval biggest(1L, work);
    Interval tail(work);
    bool have_tail = false;
    bool finished = false;
    std::size_t n = 0;
    for (; n < opts.term_cap; ++n) {
        term *= Interval(term_ratio(spec, x, n), work);
        sum += term;
        const Interval mag = term.magnitude_bound();
        if (mpfr_greater_p(mag.hi(), biggest.hi())) {
            biggest = mag;
        }
        // term now holds t_{n+1}; bound the tail beyond it.
        const auto bound = ratio_tail_bound(spec, ax, n + 1);
        if (!bound || *bound >= 1) {
            continue;
        }
        tail = mag * Interval(Rational(*bound / (1 - *bound)), work);
        tail = tail.magnitude_bound();
        have_tail = true;
        const double tail_d = tail.hi_double();
        const double floor_d = biggest.hi_double() * std::ldexp(1.0, -static_cast<int>(work.bits));
        double sum_mag = 0.0;
        if (!sum.contains_zero()) {
            sum_mag = std::min(std::fabs(sum.lo_double()), std::fabs(sum.hi_double()));
        }
        if (tail_d <= 0.25 * opts.tolerance * sum_mag || tail_d <= floor_d || tail_d == 0.0) {
            finished = true;
            ++n;
            break;
        }
    }
    if (!have_tail) {
        return EvalResult{Interval::entire(opts.precision), n + 1, std::numeric_limits<double>::infinity(), false};
    }
    sum.widen(tail);
    EvalResult result{sum.round_to(opts.precision.plus(kGuardBits)), n + 1, tail.hi_double(), false};
    result.converged = finished && result.value.relative_width() <= opts.tolerance;
    return result;
}

EvalResult eval_1f1(const Rational& a, const Rational& c, const Rational& x, const EvalOptions& opts)
{
    const bool terminating = is_nonpositive_integer(a);
    if (x < 0 && !terminating && c - a >= 0) {
        return with_retry(opts, [&](const EvalOptions& o) {
            const Precision work = o.precision.plus(kGuardBits);
            EvalResult inner = eval_pfq(PFQSpec{{c - a}, {c}}, -x, o);
            inner.value = exp(Interval(x, work)) * inner.value;
            inner.converged = inner.converged && inner.value.relative_width() <= o.tolerance;
            return inner;
        });
    }
    return with_retry(opts, [&](const EvalOptions& o) { return eval_pfq(PFQSpec{{a}, {c}}, x, o); });
}

EvalResult eval_2f1(const Rational& a, const Rational& b, const Rational& c, const Rational& x,
                    const EvalOptions& opts)
{
    const PFQSpec direct{{a, b}, {c}};
    const bool terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if (x >= 1 && !terminating) {
        throw DomainError("2F1 needs x < 1, got x = " + to_string(x));
    }
    if (x < Rational(-1, 2) && !terminating) {
        return with_retry(opts, [&](const EvalOptions& o) {
            const Precision work = o.precision.plus(kGuardBits);
            const Rational z = x / (x - 1);
            EvalResult inner = eval_pfq(PFQSpec{{a, c - b}, {c}}, z, o);
            inner.value = pow(Interval(Rational(1 - x), work), Rational(-a)) * inner.value;
            inner.converged = inner.converged && inner.value.relative_width() <= o.tolerance;
            return inner;
        });
    }
    return with_retry(opts, [&](const EvalOptions& o) { return eval_pfq(direct, x, o); });
}

EvalResult eval_hypergeometric(const PFQSpec& spec, const Rational& x, const EvalOptions& opts)
{
    if (spec.upper.size() == 1 && spec.lower.size() == 1) {
        return eval_1f1(spec.upper[0], spec.lower[0], x, opts);
    }
    if (spec.upper.size() == 2 && spec.lower.size() == 1) {
        return eval_2f1(spec.upper[0], spec.upper[1], spec.lower[0], x, opts);
    }
    return with_retry(opts, [&](const EvalOptions& o) { return eval_pfq(spec, x, o); });
}

namespace {

void summarize(TransformCheck& check)
{
    check.all_overlap = true;
    double worst = 0.0;
    // At a zero of the function every enclosure contains 0 and only the
    // absolute difference is meaningful.
    const bool at_zero = std::all_of(check.sides.begin(), check.sides.end(),
                                     [](const TransformSide& s) { return s.value.contains_zero(); });
    const double ref = at_zero ? 0.0 : std::fabs(check.sides.front().value.mid_double());
    for (std::size_t i = 0; i < check.sides.size(); ++i) {
        for (std::size_t j = i + 1; j < check.sides.size(); ++j) {
            check.all_overlap = check.all_overlap && check.sides[i].value.overlaps(check.sides[j].value);
            const double diff = std::fabs(check.sides[i].value.mid_double() - check.sides[j].value.mid_double());
            worst = std::max(worst, ref > 0 ? diff / ref : diff);
        }
    }
    check.residual = worst;
}

Interval direct_value(const PFQSpec& spec, const Rational& x, const EvalOptions& opts)
{
    return with_retry(opts, [&](const EvalOptions& o) { return eval_pfq(spec, x, o); }).value;
}

} // namespace

TransformCheck check_kummer_transform(const Rational& a, const Rational& c, const Rational& x,
                                      const EvalOptions& opts)
{
    const Precision work = opts.precision.plus(kGuardBits);
    TransformCheck check;
    check.sides.push_back({"1F1(a;c;x)", direct_value(PFQSpec{{a}, {c}}, x, opts)});
    check.sides.push_back(
        {"e^x 1F1(c-a;c;-x)", exp(Interval(x, work)) * direct_value(PFQSpec{{c - a}, {c}}, -x, opts)});
    summarize(check);
    return check;
}

TransformCheck check_euler_pfaff(const Rational& a, const Rational& b, const Rational& c, const Rational& x,
                                 const EvalOptions& opts)
{
    if (abs(x) >= 1) {
        throw DomainError("check_euler_pfaff needs |x| < 1");
    }
    const Precision work = opts.precision.plus(kGuardBits);
    const Interval one_minus_x(Rational(1 - x), work);
    TransformCheck check;
    check.sides.push_back({"2F1(a,b;c;x)", direct_value(PFQSpec{{a, b}, {c}}, x, opts)});
    check.sides.push_back({"(1-x)^(c-a-b) 2F1(c-a,c-b;c;x)",
                           pow(one_minus_x, Rational(c - a - b)) * direct_value(PFQSpec{{c - a, c - b}, {c}}, x, opts)});
    if (x < Rational(1, 2)) {
        const Rational z = x / (x - 1);
        check.sides.push_back({"(1-x)^(-a) 2F1(a,c-b;c;x/(x-1))",
                               pow(one_minus_x, Rational(-a)) * direct_value(PFQSpec{{a, c - b}, {c}}, z, opts)});
        check.sides.push_back({"(1-x)^(-b) 2F1(c-a,b;c;x/(x-1))",
                               pow(one_minus_x, Rational(-b)) * direct_value(PFQSpec{{c - a, b}, {c}}, z, opts)});
    }
    summarize(check);
    return check;
}

Interval kummer_product_ratio(const Rational& a, const Rational& b, const Rational& delta, const Rational& c,
                              const Rational& x, const EvalOptions& opts)
{
    const Interval num = eval_1f1(b + delta, c, x, opts).value * eval_1f1(a, c, x, opts).value;
    const Interval den = eval_1f1(a + delta, c, x, opts).value * eval_1f1(b, c, x, opts).value;
    return num / den;
}

namespace {

StepStatus classify_step(const Interval& prev, const Interval& cur, bool expect_decreasing)
{
    if (expect_decreasing ? cur.certainly_less(prev) : cur.certainly_greater(prev)) {
        return StepStatus::Monotone;
    }
    if (expect_decreasing ? cur.certainly_greater(prev) : cur.certainly_less(prev)) {
        return StepStatus::Violation;
    }
    return StepStatus::Undecided;
}

} // namespace

ConjectureReport explore_conjecture(const Rational& a, const Rational& b, const Rational& delta, const Rational& c,
                                    const std::vector<Rational>& x_grid, const EvalOptions& opts)
{
    if (x_grid.empty()) {
        throw std::invalid_argument("explore_conjecture: empty x grid");
    }
    for (std::size_t i = 1; i < x_grid.size(); ++i) {
        if (x_grid[i] <= x_grid[i - 1]) {
            throw std::invalid_argument("explore_conjecture: x grid must be strictly increasing");
        }
    }
    const bool positive = x_grid.front() > 0;
    if (!(positive || x_grid.back() < 0)) {
        throw std::invalid_argument("explore_conjecture: x grid must lie in x > 0 or in x < 0");
    }
    if (delta <= 0) {
        throw DomainError("explore_conjecture: delta must be positive");
    }

    ConjectureReport report;
    report.positive_branch = positive;
    if (positive) {
        if (!(b > a && a > 0)) {
            throw DomainError("positive branch needs b > a > 0");
        }
        report.bound = gamma_cross_ratio(a, b, delta, opts.precision).reciprocal();
    } else {
        if (!(a < b && b < c - delta && c > 0)) {
            throw DomainError("negative branch needs a < b < c - delta, c > 0");
        }
        // Gamma(c-a-d) Gamma(c-b) / (Gamma(c-b-d) Gamma(c-a))
        report.bound = gamma_cross_ratio(c - b - delta, c - a - delta, delta, opts.precision).reciprocal();
    }

    const Interval one(1L, opts.precision);
    for (const auto& x : x_grid) {
        ConjecturePoint pt{x, kummer_product_ratio(a, b, delta, c, x, opts), StepStatus::First, false};
        report.points.push_back(std::move(pt));
    }

    EvalOptions fine = opts;
    fine.precision = opts.precision.doubled();
    // On x < 0 the ratio rises toward 1 as x increases; on x > 0 it falls.
    const bool expect_decreasing = positive;
    for (std::size_t i = 1; i < report.points.size(); ++i) {
        auto& prev = report.points[i - 1];
        auto& cur = report.points[i];
        cur.step = classify_step(prev.ratio, cur.ratio, expect_decreasing);
        if (cur.step == StepStatus::Undecided) {
            prev.ratio = kummer_product_ratio(a, b, delta, c, prev.x, fine);
            cur.ratio = kummer_product_ratio(a, b, delta, c, cur.x, fine);
            cur.step = classify_step(prev.ratio, cur.ratio, expect_decreasing);
        }
        switch (cur.step) {
        case StepStatus::Monotone: ++report.monotone_steps; break;
        case StepStatus::Violation: ++report.violations; break;
        case StepStatus::Undecided: ++report.undecided; break;
        case StepStatus::First: break;
        }
    }
    for (auto& pt : report.points) {
        pt.within_bounds = report.bound.enclosure.certainly_less(pt.ratio) && pt.ratio.certainly_less(one);
        report.out_of_bounds += pt.within_bounds ? 0 : 1;
    }

    const auto& near = positive ? report.points.front() : report.points.back();
    const auto& far = positive ? report.points.back() : report.points.front();
    report.gap_to_one = std::fabs(1.0 - near.ratio.mid_double());
    const double bound_mid = report.bound.enclosure.mid_double();
    report.gap_to_bound = std::fabs(far.ratio.mid_double() - bound_mid) / bound_mid;
    return report;
}

} // namespace turankit
