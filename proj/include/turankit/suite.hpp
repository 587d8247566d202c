#pragma once

#include "turankit/verifier.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace turankit {

struct SuiteOptions {
    std::size_t order = 40;     ///< truncation order for phi and lambda
    std::size_t psi_order = 30; ///< truncation order for psi
    EvalOptions eval;
    /// Adds seeded random parameter tuples to the coefficient suites.
    std::optional<std::uint64_t> seed;
    unsigned threads = 0; ///< 0 = hardware concurrency
};

struct CaseResult {
    std::string theorem;
    nlohmann::json params = nlohmann::json::object();
    Verdict verdict = Verdict::Inconclusive;
    nlohmann::json first_violation; ///< null when there is none
    nlohmann::json details = nlohmann::json::object();
    /// Per-index signs for coefficient cases, empty otherwise.
    std::vector<CertifiedSign> signs;
};

struct SuiteCase {
    std::string theorem;
    std::function<CaseResult()> run;
};

/// Suite selectors accepted by default_cases, in suite order.
const std::vector<std::string>& known_theorems();

/// Default grid for one selector, or every selector for "all".
/// Throws std::invalid_argument for an unknown selector.
std::vector<SuiteCase> default_cases(const std::string& theorem, const SuiteOptions& opts);

/// Runs cases on a worker pool; results keep the input order. A case that
/// throws is reported as Inconclusive with the error message.
std::vector<CaseResult> run_cases(const std::vector<SuiteCase>& cases, unsigned threads);

struct Summary {
    std::size_t verified = 0;
    std::size_t violated = 0;
    std::size_t inconclusive = 0;
};

Summary summarize(const std::vector<CaseResult>& results);

/// Process exit status for a finished run: 1 on any Violated case, else 0.
int exit_status(const Summary& summary);

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const Interval& iv);
nlohmann::json to_json(const GammaRatio& g);

CaseResult to_case(const SignReport& rep);
CaseResult to_case(const TwoSidedBoundReport& rep);
CaseResult to_case(const CurvatureReport& rep);
CaseResult to_case(const RatioSequenceReport& rep);

/// {run_id, config_echo, per_case, summary}; run_id hashes config_echo.
nlohmann::json build_report(const nlohmann::json& config_echo, const std::vector<CaseResult>& results);

/// One row per coefficient index: case,theorem,family,params,index,sign.
std::string signs_csv(const std::vector<CaseResult>& results);

/// n points lo = x_0 < ... < x_{n-1} = hi, geometrically spaced and rounded
/// to 6 significant decimal digits. Requires 0 < lo < hi and n >= 2.
std::vector<Rational> log_spaced_grid(const Rational& lo, const Rational& hi, std::size_t n);

/// Plot-ready rows: x, Q_lo, Q_hi, bound_A (or bound_B), decided_monotone_step.
std::string conjecture_csv(const ConjectureReport& rep);

/// Conjecture evidence as a case: Violated on any certified violation,
/// Inconclusive when more than max_undecided of the steps are undecided.
CaseResult conjecture_case(const ConjectureReport& rep, const Params& params, double max_undecided = 0.05);

} // namespace turankit
