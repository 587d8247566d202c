#include "turankit/suite.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace turankit;
using nlohmann::json;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;

struct VerifyArgs {
    std::string theorem;
    std::string family;
    std::string grid;
    std::string c, u, v, a, b, delta, x;
    std::string pfq_a, pfq_b;
    std::optional<std::size_t> order;
    double tolerance = 1e-25;
    std::string json_path, csv_path;
    std::optional<std::uint64_t> seed;
    unsigned threads = 0;
};

struct ExploreArgs {
    std::string a = "1", b = "2", delta = "1", c = "3";
    std::optional<std::string> x;
    std::string range = "1/1000:50";
    std::size_t points = 64;
    bool negative = false;
    double max_undecided = 0.05;
    double tolerance = 1e-25;
    std::string json_path, csv_path;
};

std::vector<Rational> grid_or(const std::string& text, const char* name, bool required)
{
    if (text.empty()) {
        if (required) throw ParseError(std::string("missing required grid --") + name);
        return {};
    }
    return parse_grid(text);
}

WeightRule rule_for(const std::string& family, const Rational& c, const Rational& u, const Rational& v,
                    const std::vector<Rational>& pa, const std::vector<Rational>& pb)
{
    if (family == "1f1-upper") return WeightRule::kummer_upper(c);
    if (family == "2f1-upper") return WeightRule::gauss_upper(u, c);
    if (family == "1f1-gamma") return WeightRule::kummer_gamma(c);
    if (family == "2f1-gamma") return WeightRule{{u}, {c}, 1};
    if (family == "1f1-lower") return WeightRule::kummer_lower(u);
    if (family == "2f1-lower") return WeightRule::gauss_lower(u, v);
    if (family == "constant") return WeightRule::constant();
    if (family == "pfq-upper") return WeightRule::pfq_upper(pa, pb);
    throw ParseError("unknown family '" + family + "'");
}

// Which of c, u, v a family reads.
struct FamilyParams {
    bool c = false, u = false, v = false, lists = false;
};

FamilyParams family_params(const std::string& family)
{
    if (family == "1f1-upper" || family == "1f1-gamma") return {true, false, false, false};
    if (family == "2f1-upper" || family == "2f1-gamma") return {true, true, false, false};
    if (family == "1f1-lower") return {false, true, false, false};
    if (family == "2f1-lower") return {false, true, true, false};
    if (family == "constant") return {};
    if (family == "pfq-upper") return {false, false, false, true};
    throw ParseError("unknown family '" + family + "'");
}

SeriesFamily series_family_for(const std::string& theorem, const std::string& family)
{
    const bool gamma = family.ends_with("-gamma");
    const bool lower = family.ends_with("-lower");
    if (theorem == "thm2") {
        if (!gamma) throw ParseError("thm2 needs a *-gamma family");
        return SeriesFamily::GammaFactor;
    }
    if (theorem == "thm3") {
        if (!lower) throw ParseError("thm3 needs a *-lower family");
        return SeriesFamily::LowerFactor;
    }
    if (gamma || lower) throw ParseError(theorem + " needs an upper-parameter family");
    return SeriesFamily::UpperFactor;
}

std::vector<SuiteCase> explicit_cases(const VerifyArgs& args, const SuiteOptions& opts)
{
    const std::string& th = args.theorem;
    if (th != "thm1" && th != "thm2" && th != "thm3" && th != "cor1" && th != "turan") {
        throw ParseError("explicit grids are supported for thm1, thm2, thm3, cor1 and turan; use --grid default for " +
                         th);
    }
    if (args.family.empty()) throw ParseError("missing --family");
    const FamilyParams fp = family_params(args.family);
    const SeriesFamily sf = series_family_for(th, args.family);

    const auto cs = fp.c ? grid_or(args.c, "c", true) : std::vector<Rational>{0};
    const auto us = fp.u ? grid_or(args.u, "u", true) : std::vector<Rational>{0};
    const auto vs = fp.v ? grid_or(args.v, "v", true) : std::vector<Rational>{0};
    const auto pa = fp.lists ? parse_rational_list(args.pfq_a) : std::vector<Rational>{};
    const auto pb = fp.lists ? parse_rational_list(args.pfq_b) : std::vector<Rational>{};
    const auto as = grid_or(args.a, "a", true);
    const auto ds = grid_or(args.delta, "delta", true);
    const auto bs = th == "turan" ? std::vector<Rational>{0} : grid_or(args.b, "b", true);
    const auto xs = th == "cor1" || th == "turan" ? grid_or(args.x, "x", true) : std::vector<Rational>{};

    const std::size_t order = th == "thm2" ? opts.psi_order : opts.order;
    std::vector<SuiteCase> out;
    for (const auto& c : cs)
        for (const auto& u : us)
            for (const auto& v : vs) {
                Params extra;
                if (fp.c) extra.emplace_back("c", c);
                if (fp.u) extra.emplace_back("u", u);
                if (fp.v) extra.emplace_back("v", v);
                const HypSeriesSpec spec{sf, rule_for(args.family, c, u, v, pa, pb), order};
                validate(spec);
                const std::string family = args.family;
                const EvalOptions eval = opts.eval;
                for (const auto& a : as)
                    for (const auto& b : bs)
                        for (const auto& d : ds) {
                            out.push_back({th, [=] {
                                               CaseResult res;
                                               if (th == "cor1" || th == "turan") {
                                                   auto rep = th == "cor1"
                                                                  ? verify_corollary_twosided(spec, a, b, d, xs, eval)
                                                                  : verify_turan(spec, a, d, xs, eval);
                                                   rep.params.insert(rep.params.end(), extra.begin(), extra.end());
                                                   res = to_case(rep);
                                               } else {
                                                   SignReport rep = th == "thm1" ? verify_theorem1(spec, a, b, d)
                                                                    : th == "thm2"
                                                                        ? verify_theorem2(spec, a, b, d, eval.precision)
                                                                        : verify_theorem3(spec, a, b, d);
                                                   rep.params.insert(rep.params.end(), extra.begin(), extra.end());
                                                   res = to_case(rep);
                                               }
                                               res.params["family"] = family;
                                               return res;
                                           }});
                        }
            }
    return out;
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << content;
}

int finish(const json& report, const std::string& json_path)
{
    const std::string text = report.dump(2) + "\n";
    if (json_path.empty()) {
        std::cout << text;
    } else {
        write_file(json_path, text);
    }
    const auto& s = report.at("summary");
    std::cerr << "verified " << s.at("verified") << ", violated " << s.at("violated") << ", inconclusive "
              << s.at("inconclusive") << "\n";
    if (s.at("inconclusive").get<std::size_t>() > 0) {
        std::cerr << "warning: " << s.at("inconclusive") << " inconclusive case(s)\n";
    }
    return exit_status(Summary{s.at("verified"), s.at("violated"), s.at("inconclusive")});
}

int cmd_verify(const VerifyArgs& args)
{
    SuiteOptions opts;
    opts.eval.tolerance = args.tolerance;
    opts.seed = args.seed;
    opts.threads = args.threads;
    if (args.order) {
        if (*args.order < 2) throw ParseError("--M must be at least 2");
        opts.order = *args.order;
        opts.psi_order = *args.order;
    }

    const bool use_default = args.grid == "default";
    if (!args.grid.empty() && !use_default) throw ParseError("unknown --grid '" + args.grid + "'");
    if (!use_default && args.theorem == "all") throw ParseError("--theorem all requires --grid default");

    std::vector<SuiteCase> cases;
    if (use_default) {
        std::vector<std::string> selectors;
        const auto& known = known_theorems();
        if (args.theorem == "all" ||
            std::find(known.begin(), known.end(), args.theorem) != known.end()) {
            selectors.push_back(args.theorem);
        } else if (args.theorem == "turan") {
            selectors.push_back("cor1");
        } else {
            throw ParseError("unknown theorem selector '" + args.theorem + "'");
        }
        for (const auto& s : selectors) cases = default_cases(s, opts);
    } else {
        cases = explicit_cases(args, opts);
    }
    if (cases.empty()) throw ParseError("the configured grid produced no cases");

    json echo{{"command", "verify"},
              {"theorem", args.theorem},
              {"grid", use_default ? "default" : "explicit"},
              {"M", opts.order},
              {"psi_M", opts.psi_order},
              {"tolerance", args.tolerance},
              {"precision_bits", opts.eval.precision.bits},
              {"seed", args.seed ? json(*args.seed) : json(nullptr)}};
    if (!use_default) {
        echo["family"] = args.family;
        for (const auto& [k, val] : std::vector<std::pair<const char*, std::string>>{
                 {"c", args.c}, {"u", args.u}, {"v", args.v}, {"a", args.a}, {"b", args.b},
                 {"delta", args.delta}, {"x", args.x}, {"pfq_a", args.pfq_a}, {"pfq_b", args.pfq_b}}) {
            if (!val.empty()) echo[k] = val;
        }
    }

    const auto results = run_cases(cases, opts.threads);
    if (!args.csv_path.empty()) write_file(args.csv_path, signs_csv(results));
    return finish(build_report(echo, results), args.json_path);
}

int cmd_explore(const ExploreArgs& args)
{
    const Rational a = parse_rational(args.a), b = parse_rational(args.b);
    const Rational delta = parse_rational(args.delta), c = parse_rational(args.c);
    std::vector<Rational> grid;
    if (args.x) {
        grid = parse_grid(*args.x);
    } else {
        const auto colon = args.range.find(':');
        if (colon == std::string::npos) throw ParseError("--x-range must be lo:hi");
        const Rational lo = parse_rational(std::string_view(args.range).substr(0, colon));
        const Rational hi = parse_rational(std::string_view(args.range).substr(colon + 1));
        if (!(lo > 0 && hi > lo) || args.points < 2) throw ParseError("--x-range needs 0 < lo < hi and --points >= 2");
        grid = log_spaced_grid(lo, hi, args.points);
        if (args.negative) {
            std::vector<Rational> neg;
            for (auto it = grid.rbegin(); it != grid.rend(); ++it) neg.push_back(-*it);
            grid = std::move(neg);
        }
    }
    if (grid.empty()) throw ParseError("empty x grid");

    EvalOptions eval;
    eval.tolerance = args.tolerance;
    ConjectureReport rep;
    try {
        rep = explore_conjecture(a, b, delta, c, grid, eval);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }

    if (!args.csv_path.empty()) write_file(args.csv_path, conjecture_csv(rep));

    const Params params{{"a", a}, {"b", b}, {"delta", delta}, {"c", c}};
    CaseResult res = conjecture_case(rep, params, args.max_undecided);
    json echo{{"command", "explore"}, {"a", args.a}, {"b", args.b}, {"delta", args.delta}, {"c", args.c},
              {"x", args.x ? json(*args.x)
                          : json{{"range", args.range}, {"points", args.points}, {"negative", args.negative}}},
              {"tolerance", args.tolerance}, {"precision_bits", eval.precision.bits}};
    return finish(build_report(echo, {res}), args.json_path);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact and certified checks of Turan-type inequalities for hypergeometric series"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run theorem suites over parameter grids");
    verify->add_option("--theorem", va.theorem, "Selector, e.g. thm1, thm2, thm3, cor1, turan, or all")->required();
    verify->add_option("--family", va.family,
                       "1f1-upper|2f1-upper|1f1-gamma|2f1-gamma|1f1-lower|2f1-lower|constant|pfq-upper");
    verify->add_option("--grid", va.grid, "Use the built-in grid ('default')");
    verify->add_option("--c", va.c, "Lower weight parameter grid");
    verify->add_option("--u", va.u, "First weight parameter grid");
    verify->add_option("--v", va.v, "Second weight parameter grid");
    verify->add_option("--a", va.a, "Shift parameter a grid");
    verify->add_option("--b", va.b, "Shift parameter b grid");
    verify->add_option("--delta", va.delta, "Step delta grid");
    verify->add_option("--x", va.x, "Evaluation points for cor1 and turan");
    verify->add_option("--pfq-a", va.pfq_a, "Upper list for pfq-upper weights");
    verify->add_option("--pfq-b", va.pfq_b, "Lower list for pfq-upper weights");
    verify->add_option("--M", va.order, "Truncation order (>= 2)");
    verify->add_option("--tolerance", va.tolerance, "Relative width target for numerical evaluation");
    verify->add_option("--json", va.json_path, "Write the JSON report here instead of stdout");
    verify->add_option("--csv", va.csv_path, "Write per-index coefficient signs here");
    verify->add_option("--seed", va.seed, "Adds seeded random tuples to the coefficient suites");
    verify->add_option("--threads", va.threads, "Worker threads (0 = all cores)");

    ExploreArgs ea;
    auto* explore = app.add_subcommand("explore", "Probe the monotonicity conjecture for the 1F1 product ratio");
    explore->add_option("--a", ea.a, "Parameter a")->capture_default_str();
    explore->add_option("--b", ea.b, "Parameter b")->capture_default_str();
    explore->add_option("--delta", ea.delta, "Step delta")->capture_default_str();
    explore->add_option("--c", ea.c, "Lower parameter c")->capture_default_str();
    explore->add_option("--x", ea.x, "Explicit strictly increasing x grid");
    explore->add_option("--x-range", ea.range, "lo:hi for a log-spaced grid")->capture_default_str();
    explore->add_option("--points", ea.points, "Number of log-spaced points")->capture_default_str();
    explore->add_flag("--negative", ea.negative, "Mirror the log-spaced grid to x < 0");
    explore->add_option("--max-undecided", ea.max_undecided, "Allowed undecided step fraction")->capture_default_str();
    explore->add_option("--tolerance", ea.tolerance, "Relative width target for numerical evaluation");
    explore->add_option("--json", ea.json_path, "Write the JSON summary here instead of stdout");
    explore->add_option("--csv", ea.csv_path, "Write the per-point CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (verify->parsed()) return cmd_verify(va);
        return cmd_explore(ea);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
}
