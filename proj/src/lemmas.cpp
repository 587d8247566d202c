#include "turankit/lemmas.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace turankit {

Rational evaluate(const Polynomial& p, const Rational& x)
{
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::vector<Rational> wronskian_coeffs(const Polynomial& A, const Polynomial& B)
{
    if (A.size() != B.size() || A.empty()) {
        throw std::invalid_argument("wronskian_coeffs: polynomials must have equal, nonzero length");
    }
    const std::size_t n = A.size() - 1;
    if (n == 0) {
        return {};
    }
    std::vector<Rational> out(2 * n - 1, Rational(0));
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i <= n; ++i) {
            if (i + k - 1 < out.size()) {
                out[i + k - 1] += Rational(static_cast<long>(k)) * (A[k] * B[i] - B[k] * A[i]);
            }
        }
    }
    return out;
}

std::string to_string(RatioChain chain)
{
    switch (chain) {
    case RatioChain::Increasing: return "increasing";
    case RatioChain::Decreasing: return "decreasing";
    case RatioChain::Constant: return "constant";
    case RatioChain::Neither: return "neither";
    }
    return "?";
}

RatioChainReport check_ratio_chain(const Polynomial& A, const Polynomial& B)
{
    if (A.size() != B.size() || A.empty()) {
        throw std::invalid_argument("check_ratio_chain: polynomials must have equal, nonzero length");
    }
    for (std::size_t k = 0; k < A.size(); ++k) {
        if (B[k] <= 0 || A[k] < 0) {
            throw DomainError("check_ratio_chain: requires b_k > 0 and a_k >= 0");
        }
    }
    RatioChainReport report;
    bool up = true;
    bool down = true;
    for (std::size_t k = 0; k + 1 < A.size(); ++k) {
        const int s = sign(A[k + 1] * B[k] - A[k] * B[k + 1]);
        report.step_signs.push_back(s);
        up = up && s >= 0;
        down = down && s <= 0;
    }
    if (up && down) {
        report.kind = RatioChain::Constant;
    } else if (up) {
        report.kind = RatioChain::Increasing;
    } else if (down) {
        report.kind = RatioChain::Decreasing;
    }
    return report;
}

namespace {

std::vector<Polynomial> coefficient_grid(unsigned n)
{
    const std::vector<Rational> values{Rational(1, 2), Rational(1), Rational(2), Rational(3)};
    std::vector<Polynomial> grid{{}};
    for (unsigned k = 0; k <= n; ++k) {
        std::vector<Polynomial> next;
        for (const auto& p : grid) {
            for (const auto& v : values) {
                Polynomial q = p;
                q.push_back(v);
                next.push_back(std::move(q));
            }
        }
        grid = std::move(next);
    }
    return grid;
}

std::optional<Rational> find_negative_point(const std::vector<Rational>& w)
{
    for (long k = 1; k <= 80; ++k) {
        Rational x(k, 8);
        if (evaluate(w, x) < 0) {
            return x;
        }
    }
    // The lowest or highest coefficient dominates near 0 or infinity.
    if (!w.empty() && w.front() < 0) {
        Rational x(1);
        for (int j = 0; j < 200; ++j) {
            x /= 2;
            if (evaluate(w, x) < 0) {
                return x;
            }
        }
    }
    if (!w.empty() && w.back() < 0) {
        Rational x(1);
        for (int j = 0; j < 200; ++j) {
            x *= 2;
            if (evaluate(w, x) < 0) {
                return x;
            }
        }
    }
    return std::nullopt;
}

} // namespace

NecessityReport necessity_witness(unsigned n)
{
    if (n != 1 && n != 2) {
        throw std::invalid_argument("necessity_witness: degree must be 1 or 2");
    }
    NecessityReport report;
    report.degree = n;
    const auto grid = coefficient_grid(n);
    for (const auto& A : grid) {
        for (const auto& B : grid) {
            ++report.pairs_checked;
            const auto w = wronskian_coeffs(A, B);
            const bool violates = !check_ratio_chain(A, B).increasing();
            const bool negative = std::any_of(w.begin(), w.end(), [](const Rational& c) { return c < 0; });
            report.chain_violations += violates ? 1 : 0;
            report.negative_coefficient_pairs += negative ? 1 : 0;
            if (violates != negative) {
                report.equivalence_holds = false;
            }
            if (violates) {
                if (auto x = find_negative_point(w)) {
                    ++report.witnessed;
                    report.witnesses.push_back(NecessityWitness{A, B, *x, evaluate(w, *x)});
                }
            }
        }
    }
    return report;
}

std::vector<Rational> elementary_symmetric(const std::vector<Rational>& c)
{
    // Coefficients of prod (1 + c_i t), accumulated one factor at a time.
    std::vector<Rational> e(c.size() + 1, Rational(0));
    e[0] = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t m = i + 1; m >= 1; --m) {
            e[m] += c[i] * e[m - 1];
        }
    }
    return e;
}

Polynomial monic_product(const std::vector<Rational>& c)
{
    const auto e = elementary_symmetric(c);
    Polynomial p(e.rbegin(), e.rend());
    return p;
}

std::string to_string(SymmetricChain chain)
{
    switch (chain) {
    case SymmetricChain::Increasing: return "increasing";
    case SymmetricChain::Decreasing: return "decreasing";
    case SymmetricChain::Constant: return "constant";
    case SymmetricChain::Neither: return "neither";
    }
    return "?";
}

namespace {

void require_positive(const std::vector<Rational>& v, const char* what)
{
    for (const auto& x : v) {
        if (x <= 0) {
            throw DomainError(std::string(what) + ": entries must be positive");
        }
    }
}

} // namespace

ChainReport check_symmetric_chain(const std::vector<Rational>& aList, const std::vector<Rational>& bList)
{
    if (aList.size() != bList.size() || aList.empty()) {
        throw std::invalid_argument("check_symmetric_chain: lists must have equal, nonzero length");
    }
    require_positive(aList, "check_symmetric_chain");
    require_positive(bList, "check_symmetric_chain");
    const auto ea = elementary_symmetric(aList);
    const auto eb = elementary_symmetric(bList);
    const std::size_t q = aList.size();

    ChainReport report;
    for (std::size_t m = 1; m <= q; ++m) {
        report.ratios.push_back(eb[m] / ea[m]);
    }
    // Chain r_q, ..., r_1, 1 read from the top; prepend the anchor r_0 = 1.
    bool up = true;
    bool down = true;
    Rational prev(1);
    for (const auto& r : report.ratios) {
        up = up && r >= prev;
        down = down && r <= prev;
        prev = r;
    }
    if (up && down) {
        report.kind = SymmetricChain::Constant;
    } else if (up) {
        report.kind = SymmetricChain::Increasing;
    } else if (down) {
        report.kind = SymmetricChain::Decreasing;
    }
    if (q == 2) {
        report.two_f_two_condition = aList[0] * (bList[0] + bList[1]) >= bList[0] * bList[1];
    }
    return report;
}

TruncatedChainReport check_truncated_chain(const std::vector<Rational>& aList, const std::vector<Rational>& bList)
{
    if (bList.empty() || aList.size() + 1 != bList.size()) {
        throw std::invalid_argument("check_truncated_chain: need q-1 upper and q lower entries");
    }
    require_positive(aList, "check_truncated_chain");
    require_positive(bList, "check_truncated_chain");
    const auto ea = elementary_symmetric(aList);
    const auto eb = elementary_symmetric(bList);
    TruncatedChainReport report;
    report.holds = true;
    for (std::size_t j = 0; j < bList.size(); ++j) {
        report.ratios.push_back(eb[j + 1] / ea[j]);
        if (j > 0 && report.ratios[j] > report.ratios[j - 1]) {
            report.holds = false;
        }
    }
    return report;
}

std::string to_string(Monotonicity m)
{
    switch (m) {
    case Monotonicity::Increasing: return "increasing";
    case Monotonicity::Decreasing: return "decreasing";
    case Monotonicity::Constant: return "constant";
    case Monotonicity::Undetermined: return "undetermined-by-lemma";
    }
    return "?";
}

RMonotoneReport ratio_R_monotone(const std::vector<Rational>& aList, const std::vector<Rational>& bList)
{
    RMonotoneReport report;
    report.chain = check_symmetric_chain(aList, bList);
    switch (report.chain.kind) {
    case SymmetricChain::Increasing: report.verdict = Monotonicity::Increasing; break;
    case SymmetricChain::Decreasing: report.verdict = Monotonicity::Decreasing; break;
    case SymmetricChain::Constant:
        // Equal e-ratios of 1 force equal multisets, hence R = 1.
        report.verdict = Monotonicity::Constant;
        break;
    case SymmetricChain::Neither: report.verdict = Monotonicity::Undetermined; break;
    }

    report.wronskian = wronskian_coeffs(monic_product(aList), monic_product(bList));
    bool pos = false;
    bool neg = false;
    for (long k = 1; k <= 80; ++k) {
        const int s = sign(evaluate(report.wronskian, Rational(k, 8)));
        pos = pos || s > 0;
        neg = neg || s < 0;
    }
    report.sampled_sign = pos && !neg ? 1 : (neg && !pos ? -1 : 0);

    const auto any = [&](auto pred) { return std::any_of(report.wronskian.begin(), report.wronskian.end(), pred); };
    switch (report.verdict) {
    case Monotonicity::Increasing:
        report.consistent = !any([](const Rational& c) { return c < 0; }) && any([](const Rational& c) { return c > 0; }) &&
                            report.sampled_sign > 0;
        break;
    case Monotonicity::Decreasing:
        report.consistent = !any([](const Rational& c) { return c > 0; }) && any([](const Rational& c) { return c < 0; }) &&
                            report.sampled_sign < 0;
        break;
    case Monotonicity::Constant:
        report.consistent = !any([](const Rational& c) { return c != 0; });
        break;
    case Monotonicity::Undetermined: report.consistent = true; break;
    }
    return report;
}

} // namespace turankit
