#include "debruijn/certificate.hpp"

#include "debruijn/errors.hpp"
#include "debruijn/prefix_set.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace debruijn {

namespace {

bool is_odd_prime(int n) {
    if (n < 3 || n % 2 == 0) return false;
    for (int p = 3; p * p <= n; p += 2)
        if (n % p == 0) return false;
    return true;
}

Word binary_word(const std::string& text) {
    std::vector<std::uint32_t> digits;
    digits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw ParseError("non-binary digit in word: " + text);
        digits.push_back(static_cast<std::uint32_t>(c - '0'));
    }
    return Word(static_cast<int>(text.size()), 2, std::move(digits));
}

std::string binary_text(const Word& w) {
    std::string s;
    s.reserve(w.digits.size());
    for (auto d : w.digits) s.push_back(d ? '1' : '0');
    return s;
}

// {1, 3, ..., k-2}
std::vector<int> odd_residues(int k) {
    std::vector<int> j;
    for (int a = 1; a <= k - 2; a += 2) j.push_back(a);
    return j;
}

std::uint32_t rotate_mask(std::uint32_t mask, int shift, int k) {
    shift %= k;
    if (shift < 0) shift += k;
    const std::uint32_t all = (std::uint32_t{1} << k) - 1;
    return ((mask << shift) | (mask >> (k - shift))) & all;
}

}  // namespace

Certificate parse_certificate(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty certificate file");

    Certificate cert;
    {
        std::istringstream hs(line);
        std::string hash, tag, kf, tf, incf, excf;
        hs >> hash >> tag >> kf >> tf >> incf >> excf;
        std::string extra;
        const bool shape_ok = hash == "#" && tag == "CERTIFICATE" && kf.rfind("k=", 0) == 0 &&
                              tf.rfind("target_size=", 0) == 0 && incf.rfind("include=", 0) == 0 &&
                              excf.rfind("exclude=", 0) == 0 && !(hs >> extra);
        if (!shape_ok) throw ParseError("invalid header in certificate file");
        try {
            cert.k = std::stoi(kf.substr(2));
            cert.target_size = std::stoull(tf.substr(12));
        } catch (const std::exception&) {
            throw ParseError("invalid header in certificate file");
        }
        if (cert.k < 2 || cert.k > 62) throw ParseError("unsupported word length in header");
        const std::string inc = incf.substr(8), exc = excf.substr(8);
        if (static_cast<int>(inc.size()) != cert.k || static_cast<int>(exc.size()) != cert.k)
            throw ParseError("header words have the wrong length");
        cert.include_word = binary_word(inc);
        cert.exclude_word = binary_word(exc);
    }

    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string token;
        bool first = true;
        while (ls >> token) {
            if (first && token[0] == '#') break;  // comment line
            first = false;
            const auto colon = token.find(':');
            if (colon == std::string::npos)
                throw ParseError("malformed entry token: " + token);
            const std::string rep = token.substr(0, colon);
            const std::string phase_text = token.substr(colon + 1);
            if (static_cast<int>(rep.size()) != cert.k)
                throw ParseError("wrong representative length: " + rep);
            int phase = 0;
            try {
                std::size_t used = 0;
                phase = std::stoi(phase_text, &used);
                if (used != phase_text.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError("malformed phase for " + rep + ": " + phase_text);
            }
            if (phase < 0 || phase >= cert.k)
                throw ParseError("phase out of range for " + rep + ": " + phase_text);
            cert.entries.push_back({binary_word(rep), phase});
        }
    }
    return cert;
}

Certificate parse_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open certificate file: " + path);
    return parse_certificate(in);
}

std::string emit_certificate(const Certificate& cert) {
    std::vector<CertificateEntry> entries = cert.entries;
    std::sort(entries.begin(), entries.end(),
              [](const CertificateEntry& a, const CertificateEntry& b) {
                  const int wa = a.rep.weight(), wb = b.rep.weight();
                  if (wa != wb) return wa < wb;
                  return a.rep < b.rep;
              });
    std::ostringstream os;
    os << "# CERTIFICATE k=" << cert.k << " target_size=" << cert.target_size
       << " include=" << binary_text(cert.include_word)
       << " exclude=" << binary_text(cert.exclude_word) << "\n";
    os << "# format: representative:phase (four entries per line)\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        os << binary_text(entries[i].rep) << ':' << entries[i].phase;
        os << ((i % 4 == 3 || i + 1 == entries.size()) ? '\n' : ' ');
    }
    return os.str();
}

std::vector<Word> alternating_set(const Orbit& c, int t) {
    const int k = c.rep.k;
    if (!is_odd_prime(k)) throw std::invalid_argument("alternating sets need odd prime k");
    if (c.size() != k) throw std::invalid_argument("alternating sets need a full (non-trivial) orbit");
    std::vector<Word> out;
    for (int a : odd_residues(k))
        out.push_back(c.members[static_cast<std::size_t>(((t + a) % k + k) % k)]);
    return out;
}

std::set<int> diff_set(const Orbit& c, const Orbit& cp) {
    const int k = c.rep.k;
    if (cp.rep.k != k || cp.rep.q != c.rep.q)
        throw std::invalid_argument("mixed (k,q) orbits");
    if (c.size() != k || cp.size() != k)
        throw std::invalid_argument("difference sets need full orbits");
    std::set<int> d;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (c.members[static_cast<std::size_t>(i)] == cp.members[static_cast<std::size_t>(j)])
                continue;
            if (adjacent(c.members[static_cast<std::size_t>(i)],
                         cp.members[static_cast<std::size_t>(j)]))
                d.insert(((j - i) % k + k) % k);
        }
    return d;
}

std::set<int> forbidden_set(const std::set<int>& d, int k) {
    if (!is_odd_prime(k)) throw std::invalid_argument("forbidden sets need odd prime k");
    std::set<int> f;
    const auto j = odd_residues(k);
    for (int delta : d)
        for (int a : j)
            for (int b : j) f.insert(((delta - (b - a)) % k + k) % k);
    return f;
}

std::set<int> loop_diff_set(const Word& l, const Orbit& c) {
    const int k = c.rep.k;
    std::set<int> d;
    for (int i = 0; i < k; ++i)
        if (adjacent(l, c.members[static_cast<std::size_t>(i)])) d.insert(i);
    return d;
}

std::set<int> loop_forbidden_set(const Word& l, const Orbit& c) {
    const int k = c.rep.k;
    if (!is_odd_prime(k)) throw std::invalid_argument("forbidden sets need odd prime k");
    std::set<int> f;
    for (int delta : loop_diff_set(l, c))
        for (int a : odd_residues(k)) f.insert(((delta - a) % k + k) % k);
    return f;
}

int DiffSets::conflict_degree(int i) const {
    int deg = 0;
    for (const auto& [j, mask] : f_masks[static_cast<std::size_t>(i)])
        if (mask != 0) ++deg;
    return deg;
}

DiffSets build_diff_sets(int k, const Word& loop_word) {
    if (!is_odd_prime(k)) throw std::invalid_argument("phase reduction needs odd prime k");
    if (loop_word.k != k || loop_word.q != 2 || !loop_word.is_constant())
        throw std::invalid_argument("loop word must be a binary constant word of length k");

    DiffSets ds;
    ds.k = k;
    ds.loop_word = loop_word;
    ds.orbits = list_nontrivial_orbits(k, 2);

    // word rank -> (orbit index, member index)
    const std::uint64_t total = std::uint64_t{1} << k;
    std::vector<std::int32_t> orbit_of_rank(total, -1);
    std::vector<std::int32_t> index_of_rank(total, -1);
    for (std::size_t i = 0; i < ds.orbits.size(); ++i)
        for (int idx = 0; idx < k; ++idx) {
            const std::uint64_t r = rank(ds.orbits[i].members[static_cast<std::size_t>(idx)]);
            orbit_of_rank[r] = static_cast<std::int32_t>(i);
            index_of_rank[r] = idx;
        }

    const auto j = odd_residues(k);
    std::uint32_t pick_diffs = 0;  // masks of (b - a) mod k over a, b odd
    for (int a : j)
        for (int b : j) pick_diffs |= std::uint32_t{1} << (((b - a) % k + k) % k);

    ds.d_masks.resize(ds.orbits.size());
    ds.f_masks.resize(ds.orbits.size());
    for (std::size_t i = 0; i < ds.orbits.size(); ++i) {
        for (int idx = 0; idx < k; ++idx) {
            const Word& w = ds.orbits[i].members[static_cast<std::size_t>(idx)];
            for (const Word& nb : neighbors(w, /*include_loops=*/false)) {
                const std::uint64_t r = rank(nb);
                const std::int32_t oj = orbit_of_rank[r];
                if (oj < 0 || oj == static_cast<std::int32_t>(i)) continue;
                const int delta = ((index_of_rank[r] - idx) % k + k) % k;
                ds.d_masks[i][oj] |= std::uint32_t{1} << delta;
            }
        }
        for (const auto& [oj, dmask] : ds.d_masks[i]) {
            std::uint32_t f = 0;
            for (int delta = 0; delta < k; ++delta)
                if (dmask >> delta & 1u) f |= rotate_mask(pick_diffs, delta, k);
            ds.f_masks[i][oj] = f;
        }
    }

    // Constant-word conflicts. F(l,C) = { delta - a }, so the pick mask is
    // negated before shifting (J is not symmetric under negation).
    ds.loop_d.assign(ds.orbits.size(), 0);
    ds.loop_f.assign(ds.orbits.size(), 0);
    std::uint32_t neg_picks = 0;
    for (int a : j) neg_picks |= std::uint32_t{1} << ((k - a) % k);
    for (const Word& nb : neighbors(loop_word, /*include_loops=*/false)) {
        if (nb.is_constant()) continue;
        const std::uint64_t r = rank(nb);
        ds.loop_d[static_cast<std::size_t>(orbit_of_rank[r])] |=
            std::uint32_t{1} << index_of_rank[r];
    }
    for (std::size_t i = 0; i < ds.orbits.size(); ++i) {
        std::uint32_t f = 0;
        for (int delta = 0; delta < k; ++delta)
            if (ds.loop_d[i] >> delta & 1u) f |= rotate_mask(neg_picks, delta, k);
        ds.loop_f[i] = f;
    }
    return ds;
}

AssignmentCheck check_assignment(const PhaseAssignment& assignment, const Word& loop_word) {
    const int k = loop_word.k;
    const DiffSets ds = build_diff_sets(k, loop_word);
    for (const Orbit& c : ds.orbits)
        if (!assignment.phases.count(c.rep))
            throw std::invalid_argument("partial assignment: missing orbit " + c.rep.str());

    std::vector<int> phase(ds.orbits.size());
    for (std::size_t i = 0; i < ds.orbits.size(); ++i) {
        const int t = assignment.phases.at(ds.orbits[i].rep);
        if (t < 0 || t >= k) throw std::invalid_argument("phase out of range");
        phase[i] = t;
    }

    AssignmentCheck check;
    for (std::size_t i = 0; i < ds.orbits.size(); ++i) {
        if (ds.loop_f[i] >> phase[i] & 1u) {
            check.ok = false;
            check.violation = "phase " + std::to_string(phase[i]) + " of orbit " +
                              ds.orbits[i].rep.str() + " conflicts with " + loop_word.str();
            return check;
        }
    }
    for (std::size_t i = 0; i < ds.orbits.size(); ++i)
        for (const auto& [oj, fmask] : ds.f_masks[i]) {
            if (oj < static_cast<int>(i)) continue;  // each pair once
            const int diff = ((phase[static_cast<std::size_t>(oj)] - phase[i]) % k + k) % k;
            if (fmask >> diff & 1u) {
                check.ok = false;
                check.violation = "orbits " + ds.orbits[i].rep.str() + " (phase " +
                                  std::to_string(phase[i]) + ") and " +
                                  ds.orbits[static_cast<std::size_t>(oj)].rep.str() + " (phase " +
                                  std::to_string(phase[static_cast<std::size_t>(oj)]) +
                                  ") have a forbidden difference";
                return check;
            }
        }
    check.ok = true;
    return check;
}

SearchResult search_phases(int k, const Word& loop_word, const SearchOptions& opts) {
    if (k > opts.max_k)
        throw InstanceTooLarge("phase search guarded at k <= " + std::to_string(opts.max_k));
    const DiffSets ds = build_diff_sets(k, loop_word);
    const int n = static_cast<int>(ds.orbits.size());
    const std::uint32_t all = (std::uint32_t{1} << k) - 1;

    std::vector<std::uint32_t> domain(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) domain[static_cast<std::size_t>(i)] = all & ~ds.loop_f[static_cast<std::size_t>(i)];

    // Forward-checking neighbor lists restricted to later variables.
    std::vector<std::vector<std::pair<int, std::uint32_t>>> later(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (const auto& [oj, fmask] : ds.f_masks[static_cast<std::size_t>(i)])
            if (oj > i && fmask != 0) later[static_cast<std::size_t>(i)].push_back({oj, fmask});

    SearchResult result;
    std::vector<int> phase(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<std::pair<int, std::uint32_t>>> trail(static_cast<std::size_t>(n));

    int var = 0;
    std::vector<int> value(static_cast<std::size_t>(n), 0);
    while (true) {
        if (var == n) {
            result.status = SearchStatus::found;
            break;
        }
        bool advanced = false;
        for (int t = value[static_cast<std::size_t>(var)]; t < k; ++t) {
            if (!(domain[static_cast<std::size_t>(var)] >> t & 1u)) continue;
            if (++result.nodes > opts.node_budget) {
                result.status = SearchStatus::budget_exhausted;
                return result;
            }
            // Tentatively assign t and prune later domains.
            bool wiped = false;
            auto& undo = trail[static_cast<std::size_t>(var)];
            undo.clear();
            for (const auto& [oj, fmask] : later[static_cast<std::size_t>(var)]) {
                const std::uint32_t forbidden = rotate_mask(fmask, t, k);
                const std::uint32_t before = domain[static_cast<std::size_t>(oj)];
                const std::uint32_t after = before & ~forbidden;
                if (after != before) {
                    undo.push_back({oj, before});
                    domain[static_cast<std::size_t>(oj)] = after;
                    if (after == 0) {
                        wiped = true;
                        break;
                    }
                }
            }
            if (wiped) {
                for (auto it = undo.rbegin(); it != undo.rend(); ++it)
                    domain[static_cast<std::size_t>(it->first)] = it->second;
                undo.clear();
                continue;
            }
            phase[static_cast<std::size_t>(var)] = t;
            value[static_cast<std::size_t>(var)] = t + 1;
            ++var;
            if (var < n) value[static_cast<std::size_t>(var)] = 0;
            advanced = true;
            break;
        }
        if (advanced) continue;
        // Exhausted this variable; backtrack.
        if (var == 0) {
            result.status = SearchStatus::unsat;
            return result;
        }
        value[static_cast<std::size_t>(var)] = 0;
        --var;
        auto& undo = trail[static_cast<std::size_t>(var)];
        for (auto it = undo.rbegin(); it != undo.rend(); ++it)
            domain[static_cast<std::size_t>(it->first)] = it->second;
        undo.clear();
        phase[static_cast<std::size_t>(var)] = -1;
    }

    Certificate cert;
    cert.k = k;
    cert.include_word = loop_word;
    std::vector<std::uint32_t> other(static_cast<std::size_t>(k),
                                     loop_word.digits[0] ? 0u : 1u);
    cert.exclude_word = Word(k, 2, std::move(other));
    cert.target_size =
        1 + static_cast<std::uint64_t>((k - 1) / 2) * (((std::uint64_t{1} << k) - 2) / k);
    for (int i = 0; i < n; ++i)
        cert.entries.push_back({ds.orbits[static_cast<std::size_t>(i)].rep,
                                phase[static_cast<std::size_t>(i)]});
    result.certificate = std::move(cert);
    return result;
}

std::string VerifyReport::summary() const {
    if (kind != Kind::ok) return error;
    std::ostringstream os;
    os << "OK: k=" << k << ", selected=" << selected << ", nontrivial_orbits=" << orbit_count;
    return os.str();
}

VerifyReport verify_certificate(const Certificate& cert) {
    VerifyReport report;
    report.k = cert.k;
    report.orbit_count = cert.entries.size();
    auto fail = [&](std::string message) {
        report.kind = VerifyReport::Kind::protocol_error;
        report.error = std::move(message);
        return report;
    };

    const int k = cert.k;
    const std::uint64_t expected_orbits = ((std::uint64_t{1} << k) - 2) / static_cast<std::uint64_t>(k);
    if (cert.entries.size() != expected_orbits)
        return fail("expected " + std::to_string(expected_orbits) + " orbit entries, found " +
                    std::to_string(cert.entries.size()));

    std::unordered_set<std::uint64_t> selected;
    std::unordered_set<std::uint64_t> reps_seen;
    selected.insert(rank(cert.include_word));

    std::vector<int> picks;
    for (int a = 1; a <= k - 2; a += 2) picks.push_back(a);

    for (const CertificateEntry& entry : cert.entries) {
        if (canonical_rotation(entry.rep) != entry.rep)
            return fail("representative is not canonical: " + entry.rep.str());
        const Orbit orbit = orbit_of(entry.rep);
        if (orbit.size() != k)
            return fail("nontrivial orbit has wrong size for " + entry.rep.str());
        const std::uint64_t rep_rank = rank(entry.rep);
        if (reps_seen.count(rep_rank))
            return fail("duplicate orbit representative: " + entry.rep.str());
        reps_seen.insert(rep_rank);
        for (int a : picks)
            selected.insert(rank(orbit.members[static_cast<std::size_t>((entry.phase + a) % k)]));
    }

    if (selected.count(rank(cert.exclude_word)))
        return fail("excluded word " + cert.exclude_word.str() + " was selected");
    if (selected.size() != cert.target_size)
        return fail("wrong size: expected " + std::to_string(cert.target_size) + ", found " +
                    std::to_string(selected.size()));

    std::vector<std::uint64_t> ordered(selected.begin(), selected.end());
    std::sort(ordered.begin(), ordered.end());
    for (std::uint64_t r : ordered) {
        const Word w = unrank(r, k, 2);
        for (const Word& nb : neighbors(w, /*include_loops=*/false))
            if (selected.count(rank(nb)))
                return fail("adjacent selected vertices found: " + w.str() + " ~ " + nb.str());
    }

    report.kind = VerifyReport::Kind::ok;
    report.selected = selected.size();
    return report;
}

VerifyReport verify_certificate_file(const std::string& path) {
    Certificate cert;
    try {
        cert = parse_certificate_file(path);
    } catch (const ParseError& e) {
        VerifyReport report;
        report.kind = VerifyReport::Kind::parse_error;
        report.error = e.what();
        return report;
    }
    return verify_certificate(cert);
}

}  // namespace debruijn
