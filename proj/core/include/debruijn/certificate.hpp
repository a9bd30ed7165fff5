#pragma once

#include "debruijn/numeric.hpp"
#include "debruijn/word.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace debruijn {

/// One phase per non-trivial rotation orbit of {0,1}^k, from which a
/// maximum independent set of B(k,2) is reconstructed: on the orbit of a
/// representative x, the selected vertices are the rotations at indices
/// (phase + a) mod k for odd a < k-1, counted in the member order of
/// orbit_of(x). Plus one mandatory included word and one excluded word.
struct CertificateEntry {
    Word rep;
    int phase = 0;

    friend bool operator==(const CertificateEntry&, const CertificateEntry&) = default;
};

struct Certificate {
    int k = 0;
    std::uint64_t target_size = 0;
    Word include_word;
    Word exclude_word;
    std::vector<CertificateEntry> entries;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Certificate file format, bit-exact: a header line
///   # CERTIFICATE k=<int> target_size=<int> include=<binary> exclude=<binary>
/// then whitespace-separated "word:phase" tokens on non-empty, non-comment
/// lines. Emission packs four tokens per line in the deterministic orbit
/// order (ascending weight, then lexicographic representative).
Certificate parse_certificate(std::istream& is);
Certificate parse_certificate_file(const std::string& path);
std::string emit_certificate(const Certificate& cert);

/// The alternating maximum independent set of a k-cycle orbit at phase t:
/// members at indices (t + a) mod k, a in {1, 3, ..., k-2}. Requires a full
/// orbit (|C| = k) at odd prime k.
std::vector<Word> alternating_set(const Orbit& c, int t);

/// Rotation offsets at which two full orbits are adjacent:
/// D(C,C') = { j - i mod k : members_C[i] ~ members_C'[j] }. Pairwise scan.
std::set<int> diff_set(const Orbit& c, const Orbit& cp);

/// Phase differences ruled out by D: F = { d - (b - a) mod k : d in D,
/// a, b in {1, 3, ..., k-2} }.
std::set<int> forbidden_set(const std::set<int>& d, int k);

/// Offsets at which a constant word touches an orbit, and the phases they
/// forbid: D(l,C) = { i : l ~ members[i] }, F(l,C) = { d - a mod k }.
std::set<int> loop_diff_set(const Word& l, const Orbit& c);
std::set<int> loop_forbidden_set(const Word& l, const Orbit& c);

/// Sparse difference/forbidden tables over all non-trivial orbits, built by
/// neighbor lookup (cross-checked in tests against the pairwise route).
/// Masks have bit t set when t lies in the set.
struct DiffSets {
    int k = 0;
    Word loop_word;
    std::vector<Orbit> orbits;  // weight-then-lex order
    std::vector<std::map<int, std::uint32_t>> d_masks;  // per orbit: other -> D mask
    std::vector<std::map<int, std::uint32_t>> f_masks;  // per orbit: other -> F mask
    std::vector<std::uint32_t> loop_d;
    std::vector<std::uint32_t> loop_f;

    /// Degree of an orbit in the conflict graph (orbit pairs with nonempty F).
    int conflict_degree(int i) const;
};

DiffSets build_diff_sets(int k, const Word& loop_word);

/// Phases keyed by canonical representative; total when every non-trivial
/// orbit is present.
struct PhaseAssignment {
    std::map<Word, int> phases;
};

struct AssignmentCheck {
    bool ok = false;
    std::string violation;  // names the orbit or pair and the phases
};

/// The two constraint-system conditions: t_C outside F(l,C) for every
/// orbit, and t_C' - t_C outside F(C,C') for every pair.
AssignmentCheck check_assignment(const PhaseAssignment& assignment, const Word& loop_word);

enum class SearchStatus { found, unsat, budget_exhausted };

struct SearchOptions {
    std::uint64_t node_budget = 10'000'000;
    int max_k = 13;
};

struct SearchResult {
    SearchStatus status = SearchStatus::unsat;
    std::optional<Certificate> certificate;
    std::uint64_t nodes = 0;
};

/// Deterministic backtracking over orbits in weight-then-lex order with
/// forward checking; phases tried 0, 1, ..., k-1. Budget exhaustion is
/// reported distinctly from UNSAT: an exhausted search proves nothing.
SearchResult search_phases(int k, const Word& loop_word, const SearchOptions& opts = {});

/// Verification outcome. Protocol failures carry the offending entry or
/// pair in the error text; parse failures are flagged separately so callers
/// can distinguish malformed input from a failed mathematical check.
struct VerifyReport {
    enum class Kind { ok, parse_error, protocol_error };
    Kind kind = Kind::protocol_error;
    std::string error;
    int k = 0;
    std::uint64_t selected = 0;
    std::uint64_t orbit_count = 0;

    bool ok() const { return kind == Kind::ok; }
    /// "OK: k=..., selected=..., nontrivial_orbits=..." on success.
    std::string summary() const;
};

VerifyReport verify_certificate(const Certificate& cert);
VerifyReport verify_certificate_file(const std::string& path);

}  // namespace debruijn
