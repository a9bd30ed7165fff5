#pragma once

#include "debruijn/numeric.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace debruijn {

/// A length-k word over the alphabet [q] = {0, ..., q-1}; the vertex type of
/// the de Bruijn graph B(k,q). digits[0] is the leftmost position; rotations
/// act on positions mod k.
struct Word {
    int k = 0;
    int q = 0;
    std::vector<std::uint32_t> digits;

    Word() = default;
    Word(int k, int q, std::vector<std::uint32_t> digits);

    bool is_constant() const;
    /// Number of nonzero digits.
    int weight() const;
    /// Compact digit string for q <= 16 (0-9 then a-f), "(d0,d1,...)" otherwise.
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;
};

/// Mixed-radix value of the digits, most significant first. A bijection onto
/// [0, q^k) whose order is lexicographic order on words.
std::uint64_t rank(const Word& w);
Word unrank(std::uint64_t r, int k, int q);

/// Result digit i is w's digit (i+s) mod k.
Word rotate_left(const Word& w, int s);

/// Lexicographically least rotation.
Word canonical_rotation(const Word& w);

/// Overlap adjacency of B(k,q): u ~ v iff the last k-1 digits of one equal
/// the first k-1 digits of the other. Equal arguments report the self-loop,
/// which exists exactly for constant words.
bool adjacent(const Word& u, const Word& v);

/// All overlap neighbors of w, sorted; w itself is kept only when
/// include_loops is set (and then only for constant words). At most 2q
/// elements, at most 2q-1 without loops.
std::vector<Word> neighbors(const Word& w, bool include_loops);

/// A cyclic-rotation equivalence class. members[i] = rotate_left(rep, i);
/// certificate phases index into exactly this order, so the order is a hard
/// contract shared with the certificate module.
struct Orbit {
    Word rep;
    std::vector<Word> members;

    int size() const { return static_cast<int>(members.size()); }
};

Orbit orbit_of(const Word& w);

/// Exact rotation-orbit counts per orbit size: counts[(s)] = eta_s(q) for
/// each divisor s of k, with sum s*eta_s(q) = q^k.
struct NecklaceTable {
    int k = 0;
    int q = 0;
    std::vector<std::pair<int, BigInt>> counts;  // ascending divisors of k

    const BigInt& eta(int s) const;
};

/// Moebius function by trial division; intended for tiny n (n <= 64 here).
int mobius(int n);

NecklaceTable count_orbits(int k, int q);

/// One Orbit per non-constant rotation class, ordered by ascending Hamming
/// weight of the representative, then lexicographic representative.
std::vector<Orbit> list_nontrivial_orbits(int k, int q = 2);

}  // namespace debruijn
