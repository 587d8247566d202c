#pragma once

#include "turankit/rational.hpp"

#include <string>
#include <vector>

namespace turankit {

/// Coefficients in ascending powers: p[k] multiplies x^k.
using Polynomial = std::vector<Rational>;

Rational evaluate(const Polynomial& p, const Rational& x);

/// Exact coefficients of A'B - B'A for A, B of equal length n+1.
/// The x^{2n-1} coefficient always cancels, so the result has length 2n-1.
std::vector<Rational> wronskian_coeffs(const Polynomial& A, const Polynomial& B);

enum class RatioChain {
    Increasing, ///< a_n/b_n >= ... >= a_0/b_0
    Decreasing, ///< a_n/b_n <= ... <= a_0/b_0
    Constant,   ///< both chains hold
    Neither,
};

std::string to_string(RatioChain chain);

struct RatioChainReport {
    RatioChain kind = RatioChain::Neither;
    /// step_signs[k] = sign(a_{k+1} b_k - a_k b_{k+1}), i.e. the sign of the step a_{k+1}/b_{k+1} vs a_k/b_k.
    std::vector<int> step_signs;

    bool increasing() const { return kind == RatioChain::Increasing || kind == RatioChain::Constant; }
    bool decreasing() const { return kind == RatioChain::Decreasing || kind == RatioChain::Constant; }
};

/// Compares a_k/b_k by cross-multiplication. Requires b_k > 0 and a_k >= 0.
RatioChainReport check_ratio_chain(const Polynomial& A, const Polynomial& B);

struct NecessityWitness {
    Polynomial A;
    Polynomial B;
    Rational x;
    Rational value; ///< (A'B - B'A)(x) < 0
};

struct NecessityReport {
    unsigned degree = 0;
    std::size_t pairs_checked = 0;
    std::size_t chain_violations = 0;
    std::size_t negative_coefficient_pairs = 0;
    std::size_t witnessed = 0;
    /// Chain violation iff some negative coefficient, on every pair checked.
    bool equivalence_holds = true;
    std::vector<NecessityWitness> witnesses;

    bool passed() const { return equivalence_holds && witnessed == chain_violations; }
};

/// Exhaustive search over coefficient tuples from {1/2, 1, 2, 3} for degree n in {1, 2}.
/// For every pair violating the increasing chain, finds x > 0 with A'B - B'A < 0.
NecessityReport necessity_witness(unsigned n);

/// Returns e_0, e_1, ..., e_q of the list, with e_0 = 1.
std::vector<Rational> elementary_symmetric(const std::vector<Rational>& c);

enum class SymmetricChain {
    Increasing, ///< e_q(b)/e_q(a) >= ... >= e_1(b)/e_1(a) >= 1
    Decreasing, ///< e_q(b)/e_q(a) <= ... <= e_1(b)/e_1(a) <= 1
    Constant,   ///< every ratio equals 1
    Neither,
};

std::string to_string(SymmetricChain chain);

struct ChainReport {
    /// ratios[m-1] = e_m(b)/e_m(a) for m = 1..q.
    std::vector<Rational> ratios;
    SymmetricChain kind = SymmetricChain::Neither;
    /// For q = 2 only: whether a_1 >= b_1 b_2/(b_1 + b_2) holds with a_1 = aList[0].
    bool two_f_two_condition = false;

    bool increasing() const { return kind == SymmetricChain::Increasing || kind == SymmetricChain::Constant; }
    bool decreasing() const { return kind == SymmetricChain::Decreasing || kind == SymmetricChain::Constant; }
};

/// Requires equal lengths and positive entries.
ChainReport check_symmetric_chain(const std::vector<Rational>& aList, const std::vector<Rational>& bList);

struct TruncatedChainReport {
    /// ratios[j] = e_{j+1}(b)/e_j(a) for j = 0..q-1.
    std::vector<Rational> ratios;
    /// ratios[q-1] <= ... <= ratios[0].
    bool holds = false;
};

/// Chain for qFq-type lists: aList has q-1 entries, bList has q. Requires positive entries.
TruncatedChainReport check_truncated_chain(const std::vector<Rational>& aList, const std::vector<Rational>& bList);

enum class Monotonicity { Increasing, Decreasing, Constant, Undetermined };

std::string to_string(Monotonicity m);

struct RMonotoneReport {
    Monotonicity verdict = Monotonicity::Undetermined;
    ChainReport chain;
    /// Coefficients of A'B - B'A where A = prod (a_k + x), B = prod (b_k + x).
    std::vector<Rational> wronskian;
    /// Sign of R' sampled at x = k/8, 1 <= k <= 80.
    int sampled_sign = 0;
    /// The coefficient signs and samples agree with the verdict.
    bool consistent = true;
};

/// Monotonicity of R(x) = prod (a_k + x) / prod (b_k + x) on (0, inf) via the e-chains.
RMonotoneReport ratio_R_monotone(const std::vector<Rational>& aList, const std::vector<Rational>& bList);

/// Coefficients of prod (c_k + x) in ascending powers.
Polynomial monic_product(const std::vector<Rational>& c);

} // namespace turankit
