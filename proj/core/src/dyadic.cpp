#include "debruijn/dyadic.hpp"

#include "debruijn/errors.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace debruijn {

namespace {

std::uint64_t triple_rank(const PrefixSet& s, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    const auto q = static_cast<std::uint64_t>(s.q);
    return (a * q + b) * q + c;
}

std::uint32_t in_degree(const PrefixSet& s, std::uint64_t u, std::uint64_t v) {
    std::uint32_t n = 0;
    for (std::uint64_t a = 0; a < static_cast<std::uint64_t>(s.q); ++a)
        n += s.test(triple_rank(s, a, u, v));
    return n;
}

std::uint32_t out_degree(const PrefixSet& s, std::uint64_t u, std::uint64_t v) {
    std::uint32_t n = 0;
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(s.q); ++b)
        n += s.test(triple_rank(s, u, v, b));
    return n;
}

void require_triples(const PrefixSet& s) {
    if (s.k != 4) throw std::invalid_argument("the dyadic machinery works on triples (k=4)");
}

}  // namespace

PrefixSet SeedTable::to_prefix_set() const {
    PrefixSet s(4, 16);
    std::array<std::array<bool, 16>, 10> in_fibre{};
    for (int f = 0; f < 10; ++f)
        for (auto d : fibres[static_cast<std::size_t>(f)])
            in_fibre[static_cast<std::size_t>(f)][d] = true;
    for (std::uint64_t a = 0; a < 16; ++a)
        for (std::uint64_t b = 0; b < 16; ++b) {
            const char label = labels[a][b];
            if (label < 'A' || label > 'J') throw CheckFailed("label outside A..J");
            const auto& fibre = in_fibre[static_cast<std::size_t>(label - 'A')];
            for (std::uint64_t c = 0; c < 16; ++c)
                if (fibre[c]) s.set(triple_rank(s, a, b, c), true);
        }
    return s;
}

SeedTable read_seed_table(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "SEED q=16")
        throw ParseError("invalid seed header; expected 'SEED q=16'");
    if (!std::getline(is, line) || line != "FIBRES")
        throw ParseError("expected FIBRES section");
    SeedTable t;
    for (int f = 0; f < 10; ++f) {
        if (!std::getline(is, line)) throw ParseError("truncated FIBRES section");
        const char expect = static_cast<char>('A' + f);
        if (line.size() < 2 || line[0] != expect || line[1] != '=')
            throw ParseError(std::string("expected fibre line for ") + expect);
        std::vector<std::uint8_t> digits;
        std::istringstream body(line.substr(2));
        std::string item;
        while (std::getline(body, item, ',')) {
            if (item.empty()) throw ParseError("empty digit in fibre " + std::string(1, expect));
            int value = 0;
            try {
                value = std::stoi(item);
            } catch (const std::exception&) {
                throw ParseError("bad digit in fibre " + std::string(1, expect));
            }
            if (value < 0 || value > 15)
                throw ParseError("digit out of range in fibre " + std::string(1, expect));
            if (!digits.empty() && value <= digits.back())
                throw ParseError("fibre digits must be strictly ascending");
            digits.push_back(static_cast<std::uint8_t>(value));
        }
        t.fibres[static_cast<std::size_t>(f)] = std::move(digits);
    }
    if (!std::getline(is, line) || line != "TABLE")
        throw ParseError("expected TABLE section");
    for (int a = 0; a < 16; ++a) {
        if (!std::getline(is, line)) throw ParseError("truncated TABLE section");
        std::istringstream row(line);
        for (int b = 0; b < 16; ++b) {
            std::string cell;
            if (!(row >> cell) || cell.size() != 1 || cell[0] < 'A' || cell[0] > 'J')
                throw ParseError("bad TABLE cell");
            t.labels[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = cell[0];
        }
        std::string extra;
        if (row >> extra) throw ParseError("trailing data in TABLE row");
    }
    return t;
}

void write_seed_table(std::ostream& os, const SeedTable& t) {
    os << "SEED q=16\n";
    os << "FIBRES\n";
    for (int f = 0; f < 10; ++f) {
        os << static_cast<char>('A' + f) << '=';
        const auto& digits = t.fibres[static_cast<std::size_t>(f)];
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (i) os << ',';
            os << static_cast<int>(digits[i]);
        }
        os << '\n';
    }
    os << "TABLE\n";
    for (int a = 0; a < 16; ++a) {
        for (int b = 0; b < 16; ++b) {
            if (b) os << ' ';
            os << t.labels[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        }
        os << '\n';
    }
}

PrefixSet seed_S16() {
    const PrefixSet s = embedded_seed_table().to_prefix_set();
    if (count_N(s).n != 24849) throw CheckFailed("embedded seed count is not 24849");
    if (!check_hypothesis(s, {8, 14, 16}).pass)
        throw CheckFailed("embedded seed violates the (8,14) hypothesis");
    return s;
}

HypothesisReport check_hypothesis(const PrefixSet& s, const GadgetParams& params) {
    require_triples(s);
    const auto [a, b, q] = params;
    if (a == b) throw std::invalid_argument("hypothesis needs a != b");
    if (q != s.q) throw std::invalid_argument("params scale does not match the set");
    if (a < 0 || b < 0 || a >= q || b >= q) throw std::invalid_argument("a, b out of range");

    const auto ua = static_cast<std::uint64_t>(a), ub = static_cast<std::uint64_t>(b);
    HypothesisReport r;
    r.in_aaa = s.test(triple_rank(s, ua, ua, ua));
    r.in_bba = s.test(triple_rank(s, ub, ub, ua));
    r.out_baa = !s.test(triple_rank(s, ub, ua, ua));
    r.out_bbb = !s.test(triple_rank(s, ub, ub, ub));
    r.sums = {in_degree(s, ua, ua) + out_degree(s, ua, ua),
              in_degree(s, ub, ub) + out_degree(s, ub, ub),
              in_degree(s, ub, ub) + out_degree(s, ub, ua),
              in_degree(s, ub, ua) + out_degree(s, ua, ua)};
    r.expected = {static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(q),
                  static_cast<std::uint32_t>(q - 1), static_cast<std::uint32_t>(q + 1)};
    r.pass = r.in_aaa && r.in_bba && r.out_baa && r.out_bbb && r.sums == r.expected;
    return r;
}

PrefixSet dyadic_lift(const PrefixSet& s, bool audit, const CountOptions& opts) {
    require_triples(s);
    PrefixSet lifted(4, 2 * s.q);
    const auto q2 = static_cast<std::uint64_t>(2 * s.q);
    std::uint64_t r = 0;
    for (std::uint64_t a = 0; a < q2; ++a)
        for (std::uint64_t b = 0; b < q2; ++b)
            for (std::uint64_t c = 0; c < q2; ++c, ++r)
                if (s.test(triple_rank(s, a / 2, b / 2, c / 2))) lifted.set(r, true);
    if (audit) {
        const BigInt before = count_N(s, opts).n;
        const BigInt after = count_N(lifted, opts).n;
        if (after != 16 * before)
            throw CheckFailed("lift did not multiply the count by 16");
    }
    return lifted;
}

PrefixSet apply_gadget(const PrefixSet& lifted, const GadgetParams& params, bool audit,
                       const CountOptions& opts) {
    require_triples(lifted);
    const auto [a, b, q] = params;
    if (a == b) throw std::invalid_argument("gadget needs a != b");
    if (lifted.q != 2 * q) throw std::invalid_argument("gadget params are at the pre-lift scale");

    const std::uint64_t a0 = static_cast<std::uint64_t>(2 * a);
    const std::uint64_t a1 = a0 + 1;
    const std::uint64_t b0 = static_cast<std::uint64_t>(2 * b);
    const std::uint64_t b1 = b0 + 1;
    const std::array<std::array<std::uint64_t, 3>, 3> additions = {{
        {b0, b0, b1},
        {b1, b0, b1},
        {b1, a1, a0},
    }};
    const std::array<std::array<std::uint64_t, 3>, 4> removals = {{
        {a1, a0, a0},
        {a1, a0, a1},
        {b0, b1, a0},
        {b0, b1, a1},
    }};

    PrefixSet out = lifted;
    for (const auto& site : additions) {
        const std::uint64_t r = triple_rank(out, site[0], site[1], site[2]);
        if (out.test(r))
            throw CheckFailed("gadget addition site already present; hypothesis violated upstream");
        out.set(r, true);
    }
    for (const auto& site : removals) {
        const std::uint64_t r = triple_rank(out, site[0], site[1], site[2]);
        if (!out.test(r))
            throw CheckFailed("gadget removal site already absent; hypothesis violated upstream");
        out.set(r, false);
    }
    if (audit) {
        const BigInt before = count_N(lifted, opts).n;
        const BigInt after = count_N(out, opts).n;
        if (after != before + 1)
            throw CheckFailed("gadget did not raise the count by exactly 1");
    }
    return out;
}

PropagateResult propagate(int m_target, const PropagateOptions& opts) {
    if (m_target < 4) throw std::invalid_argument("propagation starts at m = 4");
    if (m_target > opts.max_m)
        throw InstanceTooLarge("propagation exceeds the memory guard; raise it explicitly");

    PropagateResult result;
    result.s = seed_S16();
    result.params = {8, 14, 16};
    result.n = 24849;
    result.trail.push_back(result.n);

    for (int m = 4; m < m_target; ++m) {
        const HypothesisReport h = check_hypothesis(result.s, result.params);
        if (!h.pass) throw CheckFailed("hypothesis failed before a propagation step");
        PrefixSet lifted = dyadic_lift(result.s, opts.audit, opts.count);
        result.s = apply_gadget(lifted, result.params, opts.audit, opts.count);
        result.params = {2 * result.params.a + 1, 2 * result.params.b + 1, 2 * result.params.q};
        result.n = 16 * result.n + 1;
        result.trail.push_back(result.n);
        const HypothesisReport next = check_hypothesis(result.s, result.params);
        if (!next.pass) throw CheckFailed("hypothesis did not propagate to the doubled scale");
        if (opts.audit) {
            const BigInt recount = count_N(result.s, opts.count).n;
            if (recount != result.n)
                throw CheckFailed("propagated count disagrees with full recount");
        }
    }
    if (result.n != closed_form_N4(m_target))
        throw CheckFailed("propagated count disagrees with the closed form");
    return result;
}

BigInt closed_form_N4(int m) {
    if (m < 4) throw std::invalid_argument("the closed form applies for m >= 4");
    const Rational value =
        Rational(91, 240) * big_pow(16, static_cast<unsigned>(m)) - Rational(1, 15);
    if (denominator(value) != 1) throw CheckFailed("closed form is not an integer");
    return numerator(value);
}

}  // namespace debruijn
