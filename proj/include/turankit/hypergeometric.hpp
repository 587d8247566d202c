#pragma once

#include "turankit/gamma.hpp"
#include "turankit/interval.hpp"
#include "turankit/rational.hpp"

#include <string>
#include <vector>

namespace turankit {

/// pFq((upper); (lower); x) with p <= q + 1.
struct PFQSpec {
    std::vector<Rational> upper;
    std::vector<Rational> lower;

    std::string describe() const;
};

struct EvalOptions {
    Precision precision = Precision::standard();
    /// Target relative width of the returned enclosure.
    double tolerance = 1e-25;
    std::size_t term_cap = 10000;
};

struct EvalResult {
    Interval value;
    std::size_t terms_used = 0;
    /// Rigorous bound on the neglected tail (already folded into value).
    double truncation_bound = 0.0;
    /// False when the term cap was hit or the width exceeds the tolerance.
    bool converged = false;
};

/// Direct summation with a certified geometric tail bound. Terminating
/// series (an upper parameter in {0, -1, -2, ...}) are summed exactly.
/// Throws DomainError for p > q + 1, a lower parameter in {0, -1, ...},
/// or p = q + 1 with |x| >= 1.
EvalResult eval_pfq(const PFQSpec& spec, const Rational& x, const EvalOptions& opts);

/// 1F1(a;c;x). For x < 0 with c - a >= 0 the Kummer transformation
/// e^x 1F1(c-a;c;-x) is used so that all terms are positive; otherwise the
/// alternating series is summed directly with extra guard bits. Retries
/// once at doubled precision when the first pass misses the tolerance.
EvalResult eval_1f1(const Rational& a, const Rational& c, const Rational& x, const EvalOptions& opts);

/// 2F1(a,b;c;x) for x < 1. For x < -1/2 Pfaff's transformation
/// (1-x)^{-a} 2F1(a, c-b; c; x/(x-1)) is used.
EvalResult eval_2f1(const Rational& a, const Rational& b, const Rational& c, const Rational& x,
                    const EvalOptions& opts);

/// Dispatches 1F1 and 2F1 to the routed evaluators, everything else to eval_pfq.
EvalResult eval_hypergeometric(const PFQSpec& spec, const Rational& x, const EvalOptions& opts);

struct TransformSide {
    std::string name;
    Interval value;
};

struct TransformCheck {
    std::vector<TransformSide> sides;
    bool all_overlap = false;
    /// max |mid_i - mid_j| / |mid_0| over all pairs; absolute when every
    /// enclosure contains 0.
    double residual = 0.0;

    bool passed(double max_residual) const { return all_overlap && residual < max_residual; }
};

/// 1F1(a;c;x) against e^x 1F1(c-a;c;-x), both summed directly.
TransformCheck check_kummer_transform(const Rational& a, const Rational& c, const Rational& x,
                                      const EvalOptions& opts);

/// 2F1(a,b;c;x) against Euler's form and both Pfaff forms. A Pfaff side is
/// included only when |x/(x-1)| < 1, i.e. x < 1/2.
TransformCheck check_euler_pfaff(const Rational& a, const Rational& b, const Rational& c, const Rational& x,
                                 const EvalOptions& opts);

enum class StepStatus { First, Monotone, Violation, Undecided };

std::string to_string(StepStatus status);

struct ConjecturePoint {
    Rational x;
    Interval ratio;
    StepStatus step = StepStatus::First;
    /// Certified bound < ratio < 1 at this point.
    bool within_bounds = false;
};

struct ConjectureReport {
    /// True for the x > 0 branch (ratio expected decreasing onto (1, A)).
    bool positive_branch = true;
    GammaRatio bound; ///< A (x > 0) or B (x < 0)
    std::vector<ConjecturePoint> points;
    std::size_t monotone_steps = 0;
    std::size_t violations = 0;
    std::size_t undecided = 0;
    std::size_t out_of_bounds = 0;
    /// |1 - Q| at the grid point closest to 0.
    double gap_to_one = 0.0;
    /// |Q - bound| / bound at the grid point farthest from 0.
    double gap_to_bound = 0.0;
};

/// Q(x) = 1F1(b+d;c;x) 1F1(a;c;x) / (1F1(a+d;c;x) 1F1(b;c;x)).
Interval kummer_product_ratio(const Rational& a, const Rational& b, const Rational& delta, const Rational& c,
                              const Rational& x, const EvalOptions& opts);

/// Evidence for the monotonicity conjecture on a strictly increasing grid
/// that lies entirely in x > 0 or entirely in x < 0. Undecidable steps are
/// retried once at doubled precision and otherwise counted as undecided.
ConjectureReport explore_conjecture(const Rational& a, const Rational& b, const Rational& delta, const Rational& c,
                                    const std::vector<Rational>& x_grid, const EvalOptions& opts);

} // namespace turankit
