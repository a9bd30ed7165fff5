#include "debruijn/bounds.hpp"

#include "debruijn/dyadic.hpp"
#include "debruijn/errors.hpp"
#include "debruijn/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace debruijn {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

void require_odd(int k) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("defined for odd k >= 3 only");
}

}  // namespace

Rational upper_U(int k, int q) {
    require_odd(k);
    const NecklaceTable table = count_orbits(k, q);
    BigInt sum = 0;
    for (const auto& [s, eta] : table.counts) sum += BigInt(s - 1) * eta;
    return Rational(sum, 2);
}

int delta(int k) {
    require_odd(k);
    for (int p = 3; p * p <= k; p += 2)
        if (k % p == 0) return k / p;
    return 1;  // prime
}

PrimeAlpha prime_formula_alpha(int k, int q) {
    if (k != 3 && k != 5 && k != 7 && k != 11 && k != 13)
        throw std::invalid_argument("exact prime formula proven only for k in {3,5,7,11,13}");
    if (q < 2) throw std::invalid_argument("alphabet size must be >= 2");
    const BigInt qk = big_pow(q, static_cast<unsigned>(k));
    const BigInt num = BigInt(k - 1) * (qk - q);
    if (num % (2 * k) != 0) throw CheckFailed("prime formula is not integral");
    PrimeAlpha out;
    out.looped = num / (2 * k);
    out.simple_graph = out.looped + 1;
    return out;
}

BigInt binary_prime_upper(int k) {
    if (k < 3 || k % 2 == 0 || !is_prime(k))
        throw std::invalid_argument("binary upper bound needs odd prime k");
    const BigInt num = BigInt(k - 1) * (big_pow(2, static_cast<unsigned>(k)) - 2);
    if (num % (2 * k) != 0) throw CheckFailed("binary prime bound is not integral");
    return 1 + num / (2 * k);
}

SevenCycleReport seven_cycle_check() {
    SevenCycleReport report;
    report.all_hold = true;
    report.max_slack = 0;
    for (int mask = 0; mask < 128; ++mask) {
        int r1 = 0, r3 = 0;
        for (int i = 0; i < 7; ++i) {
            const int yi = mask >> i & 1;
            r1 += yi & ~(mask >> ((i + 1) % 7)) & 1;
            r3 += yi & ~(mask >> ((i + 3) % 7)) & 1;
        }
        const int slack = 1 + r3 - r1;
        if (slack < 0) report.all_hold = false;
        report.max_slack = std::max(report.max_slack, slack);
        if (slack == 0) report.tight.push_back(static_cast<std::uint8_t>(mask));
        ++report.checked;
    }
    return report;
}

K4BoundCheck k4_upper_check(const PrefixSet& s, const CountOptions& opts) {
    if (s.k != 4) throw std::invalid_argument("the k=4 bound applies to triples only");
    const CountReport count = count_N(s, opts);
    K4BoundCheck check;
    check.lambda = count.lambda;
    check.rho = count.rho;
    check.rhs = check.rho * (Rational(1) - check.rho) + Rational(1, 7);
    check.holds = check.lambda <= check.rhs;
    check.within_11_28 = check.lambda <= Rational(11, 28);
    return check;
}

PrefixSet build_S_ev(int k, int q) {
    require_odd(k);
    PrefixSet s(k, q);
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(k - 1), 0);
    for (std::uint64_t r = 0; r < s.tuple_count(); ++r) {
        std::uint64_t v = r;
        for (int i = k - 2; i >= 0; --i) {
            digits[static_cast<std::size_t>(i)] =
                static_cast<std::uint32_t>(v % static_cast<std::uint64_t>(q));
            v /= static_cast<std::uint64_t>(q);
        }
        const auto max_it = std::max_element(digits.begin(), digits.end());
        const auto first = std::find(digits.begin(), digits.end(), *max_it);
        const int position = static_cast<int>(first - digits.begin()) + 1;  // 1-based
        if (position % 2 == 0) s.set(r, true);
    }
    return s;
}

BigInt closed_form_Nev(int k, int q) {
    require_odd(k);
    if (q < 2) throw std::invalid_argument("alphabet size must be >= 2");
    BigInt total = 0;
    for (int t = 2; t <= k - 1; t += 2)
        for (int m = 0; m < q; ++m)
            total += big_pow(m, static_cast<unsigned>(t - 1)) *
                     big_pow(m + 1, static_cast<unsigned>(k - t));
    return total;
}

Lambda3Rails lambda3_rails() { return {Rational(91, 240), Rational(11, 28)}; }

Rational dyadic_lambda_value(int m) {
    if (m < 4) throw std::invalid_argument("the dyadic construction starts at m = 4");
    return Rational(91, 240) - Rational(1, 15 * big_pow(16, static_cast<unsigned>(m)));
}

BoundReport bound_report(int k, int q) {
    if (k < 2) throw std::invalid_argument("word length must be >= 2");
    if (q < 2) throw std::invalid_argument("alphabet size must be >= 2");
    BoundReport report;
    report.k = k;
    report.q = q;
    auto add = [&](std::string name, Rational value, std::string provenance) {
        report.entries.push_back({std::move(name), std::move(value), std::move(provenance)});
    };

    const BigInt qk = big_pow(q, static_cast<unsigned>(k));

    if (k == 2) {
        // alpha = alpha_loop = floor(q^2/4) for q >= 4; small cases differ.
        const BigInt floor_q24 = BigInt(q) * q / 4;
        const BigInt simple = (q == 2) ? BigInt(2) : (q == 3) ? BigInt(3) : floor_q24;
        const BigInt looped = (q == 2) ? BigInt(1) : (q == 3) ? BigInt(2) : floor_q24;
        add("alpha_simple", Rational(simple), "exact-formula");
        add("alpha_loop", Rational(looped), "exact-formula");
        return report;
    }

    if (k % 2 == 1) {
        const Rational u = upper_U(k, q);
        if (k == 3 || k == 5 || k == 7 || k == 11 || k == 13) {
            const PrimeAlpha exact = prime_formula_alpha(k, q);
            add("alpha_simple", Rational(exact.simple_graph), "exact-formula");
            add("alpha_loop", Rational(exact.looped), "exact-formula");
        } else if (is_prime(k)) {
            add("simple_upper", u + 1, "odd-prime-upper");
            add("loop_upper", u, "odd-prime-upper");
        } else {
            add("loop_upper", u, "necklace-parity-bound");
            add("simple_upper", u + q, "loop-vs-simple-sandwich");
        }
        add("necklace_loop_upper", u, "necklace-parity-bound");
        if (q == 2 && is_prime(k))
            add("binary_simple_upper", Rational(binary_prime_upper(k)), "binary-prime-upper");
        add("loop_lower_witness", Rational(closed_form_Nev(k, q)), "first-max-even-construction");
        add("asymptotic_coefficient", Rational(k - 1, 2 * k), "cited-constant");
        return report;
    }

    if (k == 4) {
        add("loop_upper", Rational(11, 28) * Rational(qk), "seven-cycle-bound");
        add("simple_upper", Rational(11, 28) * Rational(qk) + q, "seven-cycle-bound");
        int m = 0;
        for (int v = q; v > 1; v /= 2) {
            if (v % 2 != 0) { m = -1; break; }
            ++m;
        }
        if (m >= 4)
            add("loop_lower_witness", Rational(closed_form_N4(m)), "dyadic-construction");
        add("lambda3_lower_rail", Rational(91, 240), "dyadic-construction");
        add("lambda3_upper_rail", Rational(11, 28), "seven-cycle-bound");
        return report;
    }

    // Even k >= 6: no closed-form bound implemented.
    return report;
}

}  // namespace debruijn
