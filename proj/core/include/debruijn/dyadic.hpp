#pragma once

#include "debruijn/numeric.hpp"
#include "debruijn/prefix_set.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace debruijn {

/// The embedded q=16 seed: ten named fibres (A..J) over [16] and a 16x16
/// label matrix. (a,b,c) is in the seed iff c lies in the fibre labelled at
/// cell (a,b).
struct SeedTable {
    std::array<std::vector<std::uint8_t>, 10> fibres;  // indexed A=0 .. J=9
    std::array<std::array<char, 16>, 16> labels;

    PrefixSet to_prefix_set() const;  // k=4, q=16

    friend bool operator==(const SeedTable&, const SeedTable&) = default;
};

SeedTable embedded_seed_table();

/// Seed-table file format, bit-exact: line "SEED q=16"; section "FIBRES"
/// with ten lines "<Name>=<comma-separated sorted digits or empty>";
/// section "TABLE" with 16 lines of 16 single-letter labels separated by
/// single spaces.
SeedTable read_seed_table(std::istream& is);
void write_seed_table(std::ostream& os, const SeedTable& table);

/// The embedded seed as a prefix set. Construction validates the two
/// embedded-data goldens (count 24849 and the local hypothesis at (8,14))
/// and fails loudly on any corruption.
PrefixSet seed_S16();

struct GadgetParams {
    int a = 0;
    int b = 0;
    int q = 0;  // scale at which (a,b) live
};

/// The local hypothesis H_q(a,b;S): four memberships and four degree
/// balances. sums[i] must equal expected[i] = {q, q, q-1, q+1}.
struct HypothesisReport {
    bool in_aaa = false;   // (a,a,a) in S
    bool in_bba = false;   // (b,b,a) in S
    bool out_baa = false;  // (b,a,a) not in S
    bool out_bbb = false;  // (b,b,b) not in S
    std::array<std::uint32_t, 4> sums{};      // I(a,a)+O(a,a), I(b,b)+O(b,b),
                                              // I(b,b)+O(b,a), I(b,a)+O(a,a)
    std::array<std::uint32_t, 4> expected{};  // q, q, q-1, q+1
    bool pass = false;
};

HypothesisReport check_hypothesis(const PrefixSet& s, const GadgetParams& params);

/// Doubled-alphabet lift: (r,s,t) is in the result iff (r/2, s/2, t/2) is in
/// S. When audit is set, the count identity N(lift) = 16 N(S) is recounted
/// and enforced.
PrefixSet dyadic_lift(const PrefixSet& s, bool audit = true, const CountOptions& opts = {});

/// The seven-site toggle on a lifted set: adds three triples and removes
/// four, raising the count by exactly one. All seven pre-states are asserted
/// (a wrong state signals a violated hypothesis upstream); with audit, the
/// +1 increment is recounted and enforced.
PrefixSet apply_gadget(const PrefixSet& lifted, const GadgetParams& params, bool audit = true,
                       const CountOptions& opts = {});

struct PropagateOptions {
    int max_m = 9;      // (2^m)^3 membership bits must fit
    bool audit = true;  // recount at every step
    CountOptions count;
};

struct PropagateResult {
    PrefixSet s;                 // over [2^m]^3
    GadgetParams params;         // hypothesis pair at the final scale
    BigInt n;                    // N at the final scale
    std::vector<BigInt> trail;   // N at m = 4, 5, ..., m_target
};

/// Iterates lift+gadget from the embedded seed at m=4 up to m_target,
/// re-verifying the hypothesis at (2a+1, 2b+1) after every step and checking
/// the final count against closed_form_N4.
PropagateResult propagate(int m_target, const PropagateOptions& opts = {});

/// (91/240) 16^m - 1/15, which is an integer for every m >= 4.
BigInt closed_form_N4(int m);

}  // namespace debruijn
