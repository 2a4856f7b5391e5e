#include "avoidance/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace avoidance {

std::string_view to_string(CountMethod m) {
    switch (m) {
        case CountMethod::gf: return "gf";
        case CountMethod::recurrence: return "recurrence";
        case CountMethod::automaton: return "automaton";
        case CountMethod::brute: return "brute";
    }
    return "?";
}

std::optional<CountMethod> parse_count_method(std::string_view name) {
    if (name == "gf") return CountMethod::gf;
    if (name == "recurrence") return CountMethod::recurrence;
    if (name == "automaton") return CountMethod::automaton;
    if (name == "brute") return CountMethod::brute;
    return std::nullopt;
}

RationalGF avoidance_gf(const Pattern& p) {
    const int l = p.length();
    std::vector<BigInt> border_poly(static_cast<std::size_t>(l), 0);
    for (int i : p.border_lengths()) border_poly[static_cast<std::size_t>(l - i)] += 1;
    IntPolynomial b{std::move(border_poly)};

    IntPolynomial one_minus_kx{{BigInt(1), BigInt(-p.alphabet_size())}};
    IntPolynomial denominator = one_minus_kx * b + IntPolynomial::monomial(1, l);
    return RationalGF{std::move(b), std::move(denominator)};
}

CountSeries gf_series(const RationalGF& gf, int max_n) {
    if (max_n < 0) throw std::invalid_argument("series length must be non-negative");
    const BigInt d0 = gf.denominator.coeff(0);
    if (d0 == 0)
        throw std::domain_error("denominator constant term is zero; no power series at 0");

    CountSeries out;
    out.method = CountMethod::gf;
    out.counts.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        BigInt acc = gf.numerator.coeff(n);
        const int window = std::min(n, gf.denominator.degree());
        for (int j = 1; j <= window; ++j)
            acc -= gf.denominator.coeff(j) * out.counts[static_cast<std::size_t>(n - j)];
        if (acc % d0 != 0)
            throw std::domain_error("series coefficient at degree " + std::to_string(n) +
                                    " is not an integer");
        out.counts.push_back(acc / d0);
    }
    return out;
}

CountSeries recurrence_counts(const Pattern& p, int max_n) {
    const int l = p.length();
    const BigInt k = p.alphabet_size();

    CountSeries out = gf_series(avoidance_gf(p), std::min(max_n, 2 * l - 1));
    out.method = CountMethod::recurrence;

    auto step = [&](int n) {
        auto s = [&](int m) -> const BigInt& { return out.counts[static_cast<std::size_t>(m)]; };
        BigInt acc = k * s(n - 1) - s(n - l);
        for (int i : p.border_lengths()) {
            if (i == l) continue;
            acc += k * s(n + i - l - 1) - s(n + i - l);
        }
        return acc;
    };

    // The closed form seeds [0, 2l); the recurrence must agree wherever both
    // apply. A mismatch cannot come from the inputs, only from a bug.
    for (int n = l; n <= std::min(max_n, 2 * l - 1); ++n) {
        if (step(n) != out.counts[static_cast<std::size_t>(n)])
            throw std::logic_error("recurrence disagrees with series seed at n = " + std::to_string(n));
    }
    for (int n = 2 * l; n <= max_n; ++n) out.counts.push_back(step(n));
    return out;
}

CountSeries automaton_counts(const Pattern& p, int max_n) {
    if (max_n < 0) throw std::invalid_argument("series length must be non-negative");
    const int l = p.length();
    const int k = p.alphabet_size();
    const PrefixAutomaton automaton(p);

    CountSeries out;
    out.method = CountMethod::automaton;
    out.counts.reserve(static_cast<std::size_t>(max_n) + 1);

    // walks[s] = number of length-n words ending in match-prefix state s with
    // the full-match state removed; their sum is |A_n(p)|.
    std::vector<BigInt> walks(static_cast<std::size_t>(l)), next(static_cast<std::size_t>(l));
    walks[0] = 1;
    BigInt total = 1;
    out.counts.push_back(total);
    for (int n = 1; n <= max_n; ++n) {
        for (auto& x : next) x = 0;
        for (int s = 0; s < l; ++s) {
            const BigInt& w = walks[static_cast<std::size_t>(s)];
            if (w == 0) continue;
            for (int c = 0; c < k; ++c) {
                const int t = automaton.step(s, static_cast<Symbol>(c));
                if (t < l) next[static_cast<std::size_t>(t)] += w;
            }
        }
        walks.swap(next);
        total = 0;
        for (const auto& x : walks) total += x;
        out.counts.push_back(total);
    }
    return out;
}

CountSeries brute_force_counts(const Pattern& p, int max_n, const EnumerationBudget& budget,
                               Exec mode) {
    if (max_n < 0) throw std::invalid_argument("series length must be non-negative");
    const int k = p.alphabet_size();
    const int l = p.length();
    require_within_budget(k, max_n, budget);
    const PrefixAutomaton automaton(p);

    CountSeries out;
    out.method = CountMethod::brute;
    out.counts.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        const std::uint64_t total = *checked_pow(static_cast<std::uint64_t>(k), static_cast<unsigned>(n));
        std::vector<std::uint64_t> hits(static_cast<std::size_t>(worker_count(mode)), 0);
        run_chunks(total, mode, [&](int slot, std::uint64_t begin, std::uint64_t end) {
            std::vector<Symbol> buf(static_cast<std::size_t>(n));
            std::uint64_t local = 0;
            for (std::uint64_t code = begin; code < end; ++code) {
                decode_word(code, n, k, buf.data());
                int state = 0;
                bool avoids = true;
                for (int i = 0; i < n; ++i) {
                    state = automaton.step(state, buf[static_cast<std::size_t>(i)]);
                    if (state == l) {
                        avoids = false;
                        break;
                    }
                }
                if (avoids) ++local;
            }
            hits[static_cast<std::size_t>(slot)] = local;
        });
        std::uint64_t count = 0;
        for (std::uint64_t h : hits) count += h;
        out.counts.emplace_back(count);
    }
    return out;
}

std::optional<int> first_difference_index(const Pattern& p, const Pattern& q) {
    if (p.alphabet_size() != q.alphabet_size())
        throw std::invalid_argument("patterns must share an alphabet");
    const auto& bp = p.border_lengths();
    const auto& bq = q.border_lengths();
    if (bp == bq) return std::nullopt;
    if (p.length() != q.length()) return std::min(p.length(), q.length());

    std::vector<int> sym_diff;
    std::set_symmetric_difference(bp.begin(), bp.end(), bq.begin(), bq.end(),
                                  std::back_inserter(sym_diff));
    return 2 * p.length() - sym_diff.back();
}

bool are_avoidant_equivalent(const Pattern& p, const Pattern& q) {
    if (p.alphabet_size() != q.alphabet_size())
        throw std::invalid_argument("patterns must share an alphabet");
    return p.border_lengths() == q.border_lengths();
}

}  // namespace avoidance
