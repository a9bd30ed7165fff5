#include "debruijn/prefix_set.hpp"

#include "mis.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>

namespace debruijn {

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DEBRUIJN_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

constexpr std::uint64_t kMaxTupleCount = std::uint64_t{1} << 32;

}  // namespace

PrefixSet::PrefixSet(int k_, int q_) : k(k_), q(q_) {
    if (k < 2) throw std::invalid_argument("prefix sets need word length >= 2");
    if (q < 2) throw std::invalid_argument("alphabet size must be >= 2");
    const std::uint64_t n = pow_u64(static_cast<std::uint64_t>(q), static_cast<unsigned>(k - 1));
    if (n > kMaxTupleCount) throw InstanceTooLarge("prefix-set index space exceeds 2^32");
    member.assign(n, false);
}

PrefixSet PrefixSet::full_set(int k, int q) {
    PrefixSet s(k, q);
    s.member.assign(s.member.size(), true);
    s.cardinality = s.member.size();
    return s;
}

void PrefixSet::set(std::uint64_t r, bool v) {
    if (member[r] != v) {
        member[r] = v;
        cardinality += v ? 1 : -1;
    }
}

std::uint64_t PrefixSet::recount() const {
    std::uint64_t n = 0;
    for (bool b : member) n += b;
    return n;
}

Rational PrefixSet::density() const {
    return Rational(BigInt(cardinality), BigInt(tuple_count()));
}

DegreeTables degrees(const PrefixSet& s) {
    DegreeTables t;
    t.k = s.k;
    t.q = s.q;
    const std::uint64_t q = static_cast<std::uint64_t>(s.q);
    const std::uint64_t blocks = s.tuple_count() / q;  // q^(k-2)
    t.in_deg.assign(blocks, 0);
    t.out_deg.assign(blocks, 0);
    for (std::uint64_t u = 0; u < blocks; ++u) {
        std::uint32_t in = 0, out = 0;
        for (std::uint64_t a = 0; a < q; ++a) {
            in += s.member[a * blocks + u];
            out += s.member[u * q + a];
        }
        t.in_deg[u] = in;
        t.out_deg[u] = out;
    }
    return t;
}

namespace {

std::uint64_t direct_scan_count(const PrefixSet& s, int threads) {
    const std::uint64_t qk1 = s.tuple_count();
    const std::uint64_t total = qk1 * static_cast<std::uint64_t>(s.q);
    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t n = 0;
        for (std::uint64_t r = lo; r < hi; ++r)
            if (s.member[r / static_cast<std::uint64_t>(s.q)] && !s.member[r % qk1]) ++n;
        return n;
    };
    if (threads <= 1) return scan(0, total);
    std::vector<std::uint64_t> parts(static_cast<std::size_t>(threads), 0);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
        const std::uint64_t hi = std::min(total, lo + chunk);
        pool.emplace_back([&, t, lo, hi] { parts[static_cast<std::size_t>(t)] = scan(lo, hi); });
    }
    for (auto& th : pool) th.join();
    std::uint64_t n = 0;
    for (auto p : parts) n += p;
    return n;
}

}  // namespace

CountReport count_N(const PrefixSet& s, const CountOptions& opts) {
    const DegreeTables t = degrees(s);
    std::uint64_t n = 0;
    for (std::size_t u = 0; u < t.in_deg.size(); ++u)
        n += static_cast<std::uint64_t>(t.in_deg[u]) *
             (static_cast<std::uint64_t>(s.q) - t.out_deg[u]);

    const std::uint64_t total = s.tuple_count() * static_cast<std::uint64_t>(s.q);
    if (total <= opts.audit_threshold) {
        const std::uint64_t scanned = direct_scan_count(s, resolve_threads(opts.threads));
        if (scanned != n)
            throw CheckFailed("degree-formula count disagrees with direct scan");
    }

    CountReport report;
    report.n = n;
    report.lambda = Rational(BigInt(n), BigInt(s.tuple_count()) * s.q);
    report.rho = s.density();
    return report;
}

std::vector<Word> materialize_independent_set(const PrefixSet& s) {
    const std::uint64_t qk1 = s.tuple_count();
    const std::uint64_t total = qk1 * static_cast<std::uint64_t>(s.q);
    if (total > (std::uint64_t{1} << 24))
        throw InstanceTooLarge("materialization capped at q^k <= 2^24");
    std::vector<Word> out;
    for (std::uint64_t r = 0; r < total; ++r)
        if (s.member[r / static_cast<std::uint64_t>(s.q)] && !s.member[r % qk1])
            out.push_back(unrank(r, s.k, s.q));
    return out;
}

PrefixSet project_independent_set(const std::vector<Word>& j) {
    if (j.empty()) throw std::invalid_argument("cannot infer (k,q) from an empty set");
    const auto check = is_independent(j, /*loops=*/true);
    if (!check.independent)
        throw Error("input set is not independent in the looped model");
    PrefixSet s(j.front().k, j.front().q);
    for (const Word& w : j) {
        const std::uint64_t r = rank(w) / static_cast<std::uint64_t>(w.q);
        s.set(r, true);
    }
    return s;
}

IndependenceCheck is_independent(const std::vector<Word>& j, bool loops) {
    if (j.empty()) return {true, std::nullopt};
    const int k = j.front().k, q = j.front().q;
    for (const Word& w : j)
        if (w.k != k || w.q != q) throw std::invalid_argument("mixed (k,q) words");
    std::unordered_set<std::uint64_t> ranks;
    ranks.reserve(j.size() * 2);
    for (const Word& w : j) ranks.insert(rank(w));
    for (const Word& w : j) {
        if (loops && w.is_constant()) return {false, std::make_pair(w, w)};
        for (const Word& v : neighbors(w, /*include_loops=*/false))
            if (ranks.count(rank(v))) return {false, std::make_pair(w, v)};
    }
    return {true, std::nullopt};
}

BruteForceResult brute_force_M(int k, int q) {
    const std::uint64_t n =
        pow_u64(static_cast<std::uint64_t>(q), static_cast<unsigned>(k - 1));
    if (n > 24) throw InstanceTooLarge("exhaustive subset search capped at q^(k-1) <= 24");

    // Per middle block u, the membership bits of (a,u) and (u,b).
    const std::uint64_t blocks = n / static_cast<std::uint64_t>(q);  // q^(k-2)
    std::vector<std::uint32_t> in_mask(blocks, 0), out_mask(blocks, 0);
    for (std::uint64_t u = 0; u < blocks; ++u) {
        for (std::uint64_t a = 0; a < static_cast<std::uint64_t>(q); ++a) {
            in_mask[u] |= std::uint32_t{1} << (a * blocks + u);
            out_mask[u] |= std::uint32_t{1} << (u * static_cast<std::uint64_t>(q) + a);
        }
    }

    std::uint64_t best = 0;
    std::uint32_t best_mask = 0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        std::uint64_t count = 0;
        for (std::uint64_t u = 0; u < blocks; ++u) {
            const auto in = static_cast<std::uint64_t>(
                __builtin_popcount(static_cast<std::uint32_t>(mask) & in_mask[u]));
            const auto out = static_cast<std::uint64_t>(
                __builtin_popcount(static_cast<std::uint32_t>(mask) & out_mask[u]));
            count += in * (static_cast<std::uint64_t>(q) - out);
        }
        if (count > best) {
            best = count;
            best_mask = static_cast<std::uint32_t>(mask);
        }
    }

    BruteForceResult result;
    result.m = best;
    result.witness = PrefixSet(k, q);
    for (std::uint64_t r = 0; r < n; ++r)
        if (best_mask >> r & 1u) result.witness.set(r, true);
    return result;
}

namespace {

struct AlphaGraph {
    std::vector<std::vector<int>> adj;
    std::vector<std::uint64_t> vertex_rank;
};

AlphaGraph build_graph(int k, int q, bool loops, const AlphaOptions& opts) {
    const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(q), static_cast<unsigned>(k));
    if (total > opts.max_vertices)
        throw InstanceTooLarge("graph exceeds the vertex guard; raise it explicitly");
    const std::uint64_t qk1 = total / static_cast<std::uint64_t>(q);

    AlphaGraph g;
    std::vector<int> id(total, -1);
    for (std::uint64_t r = 0; r < total; ++r) {
        if (loops) {
            // Constant words carry self-loops and cannot occur.
            std::uint64_t cur = (r % qk1) * static_cast<std::uint64_t>(q) + r / qk1;
            if (cur == r) continue;
        }
        id[r] = static_cast<int>(g.vertex_rank.size());
        g.vertex_rank.push_back(r);
    }
    g.adj.resize(g.vertex_rank.size());
    for (std::size_t v = 0; v < g.vertex_rank.size(); ++v) {
        const Word w = unrank(g.vertex_rank[v], k, q);
        for (const Word& nb : neighbors(w, /*include_loops=*/false)) {
            const int u = id[rank(nb)];
            if (u >= 0 && u != static_cast<int>(v)) g.adj[v].push_back(u);
        }
        std::sort(g.adj[v].begin(), g.adj[v].end());
        g.adj[v].erase(std::unique(g.adj[v].begin(), g.adj[v].end()), g.adj[v].end());
    }
    return g;
}

}  // namespace

int exact_alpha(int k, int q, bool loops, const AlphaOptions& opts) {
    const AlphaGraph g = build_graph(k, q, loops, opts);
    return detail::max_independent_set(g.adj).size;
}

std::pair<int, std::vector<Word>> exact_alpha_witness(int k, int q, bool loops,
                                                      const AlphaOptions& opts) {
    const AlphaGraph g = build_graph(k, q, loops, opts);
    const auto result = detail::max_independent_set(g.adj);
    std::vector<Word> witness;
    witness.reserve(result.witness.size());
    for (int v : result.witness) witness.push_back(unrank(g.vertex_rank[v], k, q));
    std::sort(witness.begin(), witness.end());
    return {result.size, witness};
}

namespace {

const char* kDigits = "0123456789abcdef";

int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

}  // namespace

void write_prefix_set(std::ostream& os, const PrefixSet& s) {
    if (s.q > 16) throw Error("prefix-set text format supports q <= 16 only");
    os << "PREFIXSET k=" << s.k << " q=" << s.q << "\n";
    const int width = s.k - 1;
    std::string line(static_cast<std::size_t>(width), '0');
    for (std::uint64_t r = 0; r < s.tuple_count(); ++r) {
        if (!s.member[r]) continue;
        std::uint64_t v = r;
        for (int i = width - 1; i >= 0; --i) {
            line[static_cast<std::size_t>(i)] = kDigits[v % static_cast<std::uint64_t>(s.q)];
            v /= static_cast<std::uint64_t>(s.q);
        }
        os << line << "\n";
    }
}

PrefixSet read_prefix_set(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty prefix-set file");
    int k = 0, q = 0;
    {
        std::istringstream hs(line);
        std::string tag, kf, qf;
        hs >> tag >> kf >> qf;
        if (tag != "PREFIXSET" || kf.rfind("k=", 0) != 0 || qf.rfind("q=", 0) != 0)
            throw ParseError("invalid prefix-set header");
        try {
            k = std::stoi(kf.substr(2));
            q = std::stoi(qf.substr(2));
        } catch (const std::exception&) {
            throw ParseError("invalid prefix-set header");
        }
    }
    if (q > 16) throw ParseError("prefix-set text format supports q <= 16 only");
    PrefixSet s(k, q);
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (static_cast<int>(line.size()) != k - 1)
            throw ParseError("member line has wrong length: " + line);
        std::uint64_t r = 0;
        for (char c : line) {
            const int d = digit_value(c);
            if (d < 0 || d >= q) throw ParseError("digit out of range: " + line);
            r = r * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(d);
        }
        if (s.test(r)) throw ParseError("duplicate member: " + line);
        s.set(r, true);
    }
    return s;
}

}  // namespace debruijn
