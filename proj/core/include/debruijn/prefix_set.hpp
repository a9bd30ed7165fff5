#pragma once

#include "debruijn/errors.hpp"
#include "debruijn/numeric.hpp"
#include "debruijn/word.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace debruijn {

/// A subset S of [q]^(k-1), the reduction variable for independence in
/// B(k,q): the words whose (k-1)-prefix is in S and whose (k-1)-suffix is
/// not form an independent set of the looped graph. Membership is a dense
/// indicator indexed by tuple rank.
struct PrefixSet {
    int k = 0;  // ambient word length; tuples have k-1 digits
    int q = 0;
    std::vector<bool> member;
    std::uint64_t cardinality = 0;

    PrefixSet() = default;
    PrefixSet(int k, int q);  // empty set

    static PrefixSet full_set(int k, int q);

    std::uint64_t tuple_count() const { return member.size(); }
    std::uint64_t size() const { return cardinality; }

    bool test(std::uint64_t r) const { return member[r]; }
    void set(std::uint64_t r, bool v);

    /// |S| recomputed from the indicator; must equal size().
    std::uint64_t recount() const;

    /// |S| / q^(k-1).
    Rational density() const;

    friend bool operator==(const PrefixSet&, const PrefixSet&) = default;
};

/// In/out letter counts per middle block u in [q]^(k-2):
/// in_deg[u]  = #{a : (a,u) in S},  out_deg[u] = #{b : (u,b) in S}.
/// For k=2 the index set is the single empty block and both entries are |S|.
struct DegreeTables {
    int k = 0;
    int q = 0;
    std::vector<std::uint32_t> in_deg;
    std::vector<std::uint32_t> out_deg;
};

DegreeTables degrees(const PrefixSet& s);

struct CountReport {
    BigInt n;          // N_{k,q}(S)
    Rational lambda;   // N / q^k
    Rational rho;      // |S| / q^(k-1)
};

struct CountOptions {
    /// A direct scan over all q^k words cross-checks the degree-formula
    /// count whenever q^k is at most this threshold.
    std::uint64_t audit_threshold = 10'000'000;
    /// Scan partitions for the audit; 0 reads DEBRUIJN_THREADS (default 1).
    /// Partitioning never changes the result.
    int threads = 0;
};

/// N_{k,q}(S) = sum over middle blocks u of in_deg(u) * (q - out_deg(u)),
/// audited by direct scan within the threshold.
CountReport count_N(const PrefixSet& s, const CountOptions& opts = {});

/// The words with prefix in S and suffix not in S; loop-model independent,
/// constant-free, of cardinality count_N(s).n.
std::vector<Word> materialize_independent_set(const PrefixSet& s);

/// The prefix set of a loop-model independent set J; every word of J then
/// belongs to materialize_independent_set of the result. Rejects J that is
/// not loop-model independent.
PrefixSet project_independent_set(const std::vector<Word>& j);

struct IndependenceCheck {
    bool independent = false;
    /// First violating pair in input order; equal components mean a loop.
    std::optional<std::pair<Word, Word>> violation;
};

IndependenceCheck is_independent(const std::vector<Word>& j, bool loops);

struct BruteForceResult {
    BigInt m;
    PrefixSet witness;  // least rank-encoded membership among maximizers
};

/// Exhaustive maximum of N_{k,q}(S) over all 2^(q^(k-1)) subsets.
/// Guarded at q^(k-1) <= 24.
BruteForceResult brute_force_M(int k, int q);

struct AlphaOptions {
    std::uint64_t max_vertices = 4096;
};

/// Exact independence number of B(k,q) by branch and bound, with self-loops
/// deleted (loops=false) or retained (loops=true, which excludes the q
/// constant words up front).
int exact_alpha(int k, int q, bool loops, const AlphaOptions& opts = {});

/// Same, also returning one maximum independent set.
std::pair<int, std::vector<Word>> exact_alpha_witness(int k, int q, bool loops,
                                                      const AlphaOptions& opts = {});

/// Text format, bit-exact: header "PREFIXSET k=<k> q=<q>", then one member
/// per line as k-1 digit characters (0-9 then a-f; q <= 16 only), sorted
/// ascending. Lines beginning '#' are comments. Readers reject duplicates
/// and out-of-range digits.
void write_prefix_set(std::ostream& os, const PrefixSet& s);
PrefixSet read_prefix_set(std::istream& is);

}  // namespace debruijn
