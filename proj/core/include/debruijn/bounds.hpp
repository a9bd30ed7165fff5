#pragma once

#include "debruijn/numeric.hpp"
#include "debruijn/prefix_set.hpp"

#include <string>
#include <vector>

namespace debruijn {

/// A bound or exact value together with the rule that produced it. The
/// provenance labels are documented in the README.
struct BoundEntry {
    std::string name;
    Rational value;
    std::string provenance;
};

struct BoundReport {
    int k = 0;
    int q = 0;
    std::vector<BoundEntry> entries;
};

/// All bounds applicable to B(k,q), each tagged with its provenance.
BoundReport bound_report(int k, int q);

/// Necklace upper bound for the looped model at odd k:
/// U_k(q) = (1/2) * sum over divisors s of k of (s-1) * eta_s(q).
/// Even k is rejected; the cycle-parity argument needs odd orbit sizes.
Rational upper_U(int k, int q);

/// 1 for prime k, k/p for composite k with least prime factor p; the
/// largest proper divisor. Defined for odd k >= 3.
int delta(int k);

struct PrimeAlpha {
    BigInt simple_graph;  // (k-1)(q^k - q)/(2k) + 1
    BigInt looped;        // (k-1)(q^k - q)/(2k)
};

/// Exact independence numbers for the proven prime lengths k in
/// {3, 5, 7, 11, 13}; other k are rejected (the formula is a theorem only
/// for these).
PrimeAlpha prime_formula_alpha(int k, int q);

/// 1 + (k-1)/(2k) * (2^k - 2) for odd prime k.
BigInt binary_prime_upper(int k);

/// Exhaustive check of the cycle inequality behind the k=4 upper bound:
/// for every y in {0,1}^7, sum y_i(1-y_{i+1}) <= 1 + sum y_i(1-y_{i+3}).
struct SevenCycleReport {
    bool all_hold = false;
    int checked = 0;
    int max_slack = 0;                    // max of 1 + R3 - R1
    std::vector<std::uint8_t> tight;      // bitmasks where R1 = R3 + 1
};

SevenCycleReport seven_cycle_check();

/// Exact-rational verification of Lambda <= rho(1-rho) + 1/7 (and hence
/// Lambda <= 11/28) for a k=4 prefix set.
struct K4BoundCheck {
    bool holds = false;
    bool within_11_28 = false;
    Rational lambda;
    Rational rho;
    Rational rhs;  // rho(1-rho) + 1/7
};

K4BoundCheck k4_upper_check(const PrefixSet& s, const CountOptions& opts = {});

/// The prefix set whose members are the (k-1)-tuples where the first
/// occurrence of the maximum digit sits at an even position (positions are
/// 1-based here, unlike the 0-based indexing used elsewhere).
PrefixSet build_S_ev(int k, int q);

/// Closed form for count_N(build_S_ev(k,q)): the sum over even t in
/// [2, k-1] and M in [0, q-1] of M^(t-1) (M+1)^(k-t).
BigInt closed_form_Nev(int k, int q);

struct Lambda3Rails {
    Rational lower;  // 91/240
    Rational upper;  // 11/28
};

Lambda3Rails lambda3_rails();

/// 91/240 - 1/(15 * 16^m): the density of the dyadic k=4 construction at
/// alphabet size 2^m.
Rational dyadic_lambda_value(int m);

}  // namespace debruijn
