#include "debruijn/word.hpp"

#include "debruijn/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace debruijn {

std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    const std::uint64_t cap = std::uint64_t{1} << 62;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base)
            throw InstanceTooLarge("q^k does not fit in 62 bits");
        r *= base;
    }
    return r;
}

bool pow_fits_u64(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    const std::uint64_t cap = std::uint64_t{1} << 62;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return false;
        r *= base;
    }
    return true;
}

std::string to_decimal(const BigInt& v) { return v.str(); }

std::string to_decimal(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

Word::Word(int k_, int q_, std::vector<std::uint32_t> digits_)
    : k(k_), q(q_), digits(std::move(digits_)) {
    if (k < 1) throw std::invalid_argument("word length must be >= 1");
    if (q < 2) throw std::invalid_argument("alphabet size must be >= 2");
    if (static_cast<int>(digits.size()) != k)
        throw std::invalid_argument("digit count does not match word length");
    for (auto d : digits)
        if (d >= static_cast<std::uint32_t>(q))
            throw std::invalid_argument("digit out of range");
}

bool Word::is_constant() const {
    return std::all_of(digits.begin(), digits.end(),
                       [&](std::uint32_t d) { return d == digits[0]; });
}

int Word::weight() const {
    return static_cast<int>(
        std::count_if(digits.begin(), digits.end(), [](std::uint32_t d) { return d != 0; }));
}

std::string Word::str() const {
    static const char* hex = "0123456789abcdef";
    if (q <= 16) {
        std::string s;
        s.reserve(digits.size());
        for (auto d : digits) s.push_back(hex[d]);
        return s;
    }
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) os << ',';
        os << digits[i];
    }
    os << ')';
    return os.str();
}

std::uint64_t rank(const Word& w) {
    pow_u64(static_cast<std::uint64_t>(w.q), static_cast<unsigned>(w.k));
    std::uint64_t r = 0;
    for (auto d : w.digits) r = r * static_cast<std::uint64_t>(w.q) + d;
    return r;
}

Word unrank(std::uint64_t r, int k, int q) {
    const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(q), static_cast<unsigned>(k));
    if (r >= total) throw std::out_of_range("rank out of range");
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
        digits[static_cast<std::size_t>(i)] =
            static_cast<std::uint32_t>(r % static_cast<std::uint64_t>(q));
        r /= static_cast<std::uint64_t>(q);
    }
    return Word(k, q, std::move(digits));
}

Word rotate_left(const Word& w, int s) {
    const int k = w.k;
    int shift = s % k;
    if (shift < 0) shift += k;
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        digits[static_cast<std::size_t>(i)] = w.digits[static_cast<std::size_t>((i + shift) % k)];
    return Word(w.k, w.q, std::move(digits));
}

Word canonical_rotation(const Word& w) {
    Word best = w;
    Word cur = w;
    for (int i = 1; i < w.k; ++i) {
        cur = rotate_left(cur, 1);
        if (cur.digits < best.digits) best = cur;
    }
    return best;
}

bool adjacent(const Word& u, const Word& v) {
    if (u.k != v.k || u.q != v.q) throw std::invalid_argument("mixed (k,q) words");
    const int k = u.k;
    bool uv = true, vu = true;
    for (int i = 0; i + 1 < k; ++i) {
        if (u.digits[static_cast<std::size_t>(i + 1)] != v.digits[static_cast<std::size_t>(i)])
            uv = false;
        if (v.digits[static_cast<std::size_t>(i + 1)] != u.digits[static_cast<std::size_t>(i)])
            vu = false;
        if (!uv && !vu) return false;
    }
    return uv || vu;
}

std::vector<Word> neighbors(const Word& w, bool include_loops) {
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(2 * w.q));
    std::vector<std::uint32_t> digits(w.digits.begin() + 1, w.digits.end());
    digits.push_back(0);
    for (int t = 0; t < w.q; ++t) {
        digits.back() = static_cast<std::uint32_t>(t);
        out.emplace_back(w.k, w.q, digits);
    }
    digits.assign(w.digits.begin(), w.digits.end() - 1);
    digits.insert(digits.begin(), 0);
    for (int t = 0; t < w.q; ++t) {
        digits.front() = static_cast<std::uint32_t>(t);
        out.emplace_back(w.k, w.q, digits);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (!include_loops)
        out.erase(std::remove(out.begin(), out.end(), w), out.end());
    return out;
}

Orbit orbit_of(const Word& w) {
    Orbit orbit;
    orbit.rep = canonical_rotation(w);
    Word cur = orbit.rep;
    do {
        orbit.members.push_back(cur);
        cur = rotate_left(cur, 1);
    } while (cur != orbit.rep);
    return orbit;
}

const BigInt& NecklaceTable::eta(int s) const {
    for (const auto& [d, c] : counts)
        if (d == s) return c;
    throw std::out_of_range("not a divisor of k");
}

int mobius(int n) {
    if (n < 1) throw std::invalid_argument("mobius argument must be >= 1");
    int primes = 0;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++primes;
        }
    }
    if (n > 1) ++primes;
    return (primes % 2 == 0) ? 1 : -1;
}

NecklaceTable count_orbits(int k, int q) {
    if (k < 1 || k > 64) throw std::invalid_argument("word length out of supported range");
    if (q < 2) throw std::invalid_argument("alphabet size must be >= 2");
    NecklaceTable table;
    table.k = k;
    table.q = q;
    for (int s = 1; s <= k; ++s) {
        if (k % s != 0) continue;
        BigInt primitive = 0;
        for (int d = 1; d <= s; ++d) {
            if (s % d != 0) continue;
            primitive += BigInt(mobius(d)) * big_pow(q, static_cast<unsigned>(s / d));
        }
        if (primitive % s != 0) throw CheckFailed("primitive-word count not divisible by s");
        table.counts.emplace_back(s, primitive / s);
    }
    BigInt sum = 0;
    for (const auto& [s, eta] : table.counts) sum += BigInt(s) * eta;
    if (sum != big_pow(q, static_cast<unsigned>(k)))
        throw CheckFailed("orbit counts do not sum to q^k");
    return table;
}

std::vector<Orbit> list_nontrivial_orbits(int k, int q) {
    const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(q), static_cast<unsigned>(k));
    if (total > (std::uint64_t{1} << 24))
        throw InstanceTooLarge("orbit enumeration capped at q^k <= 2^24");
    const std::uint64_t qk1 = total / static_cast<std::uint64_t>(q);

    std::vector<Orbit> orbits;
    for (std::uint64_t r = 0; r < total; ++r) {
        // Packed left rotation: (r mod q^(k-1)) * q + leading digit.
        bool minimal = true, constant = true;
        std::uint64_t cur = r;
        for (int i = 1; i < k; ++i) {
            cur = (cur % qk1) * static_cast<std::uint64_t>(q) + cur / qk1;
            if (cur != r) constant = false;
            if (cur < r) {
                minimal = false;
                break;
            }
        }
        if (!minimal || constant) continue;
        orbits.push_back(orbit_of(unrank(r, k, q)));
    }
    std::sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) {
        const int wa = a.rep.weight(), wb = b.rep.weight();
        if (wa != wb) return wa < wb;
        return a.rep < b.rep;
    });
    return orbits;
}

}  // namespace debruijn
