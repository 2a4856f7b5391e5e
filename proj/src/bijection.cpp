#include "avoidance/bijection.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace avoidance {

namespace {

int find_first(std::span<const Symbol> text, const Pattern& p) {
    const int l = p.length();
    const auto& fail = p.failure();
    int state = 0;
    for (int i = 0; i < static_cast<int>(text.size()); ++i) {
        const Symbol c = text[static_cast<std::size_t>(i)];
        while (state > 0 && p.word()[state] != c) state = fail[static_cast<std::size_t>(state) - 1];
        if (p.word()[state] == c) ++state;
        if (state == l) return i - l + 1;
    }
    return -1;
}

int find_last(std::span<const Symbol> text, const Pattern& p) {
    const int l = p.length();
    const auto& fail = p.failure();
    int state = 0;
    int last = -1;
    for (int i = 0; i < static_cast<int>(text.size()); ++i) {
        const Symbol c = text[static_cast<std::size_t>(i)];
        while (state > 0 && (state == l || p.word()[state] != c))
            state = fail[static_cast<std::size_t>(state) - 1];
        if (p.word()[state] == c) ++state;
        if (state == l) last = i - l + 1;
    }
    return last;
}

void splice(std::vector<Symbol>& w, int at, const Word& put) {
    std::copy(put.symbols().begin(), put.symbols().end(),
              w.begin() + static_cast<std::ptrdiff_t>(at));
}

std::uint64_t default_step_limit(int alphabet_size, int n) {
    auto bound = checked_pow(static_cast<std::uint64_t>(alphabet_size), static_cast<unsigned>(n));
    return bound ? *bound : ~std::uint64_t{0};
}

// Shared fixpoint loop. Every pass rescans the whole word, per the
// definition of the scan functions.
std::uint64_t fixpoint_in_place(std::vector<Symbol>& w, const Pattern& find, const Word& put,
                                bool leftmost, std::uint64_t step_limit) {
    std::uint64_t steps = 0;
    for (;;) {
        const int at = leftmost ? find_first(w, find) : find_last(w, find);
        if (at < 0) return steps;
        if (steps >= step_limit)
            throw StepLimitExceeded("replacement fixpoint exceeded " +
                                    std::to_string(step_limit) + " steps");
        splice(w, at, put);
        ++steps;
    }
}

PhiResult run_phi(const Word& w, const Pattern& find, const Word& put, ScanDirection dir,
                  std::uint64_t max_steps, int alphabet_size) {
    const std::uint64_t limit =
        max_steps != 0 ? max_steps : default_step_limit(alphabet_size, w.length());
    PhiResult result;
    std::vector<Symbol> cur(w.symbols().begin(), w.symbols().end());
    std::uint64_t steps = 0;
    for (;;) {
        const int at = dir == ScanDirection::left ? find_first(cur, find) : find_last(cur, find);
        if (at < 0) break;
        if (steps >= limit)
            throw StepLimitExceeded("replacement fixpoint exceeded " + std::to_string(limit) +
                                    " steps");
        Word before{std::vector<Symbol>(cur)};
        splice(cur, at, put);
        Word after{std::vector<Symbol>(cur)};
        result.trace.steps.push_back({dir, at, std::move(before), std::move(after)});
        ++steps;
    }
    result.word = Word(std::move(cur));
    return result;
}

bool avoids(std::span<const Symbol> text, const PrefixAutomaton& automaton) {
    const int l = automaton.pattern_length();
    int state = 0;
    for (Symbol c : text) {
        state = automaton.step(state, c);
        if (state == l) return false;
    }
    return true;
}

}  // namespace

PatternPair::PatternPair(Pattern p, Pattern q)
    : p_(std::move(p)),
      q_(std::move(q)),
      p_rev_(Pattern::compile(reverse(p_.word()), p_.alphabet_size())),
      q_rev_(Pattern::compile(reverse(q_.word()), q_.alphabet_size())),
      same_proper_borders_(false) {
    if (p_.alphabet_size() != q_.alphabet_size())
        throw std::invalid_argument("pattern pair must share an alphabet");
    if (p_.length() != q_.length())
        throw std::invalid_argument("pattern pair must have equal lengths");
    if (p_.word() == q_.word())
        throw std::invalid_argument("pattern pair must be distinct");
    // One proper border per length, so sorted-vector equality is set equality.
    same_proper_borders_ = p_.proper_borders() == q_.proper_borders();
}

Word single_scan_l(const Word& w, const PatternPair& pair) {
    std::vector<Symbol> cur(w.symbols().begin(), w.symbols().end());
    const int at = find_first(cur, pair.q());
    if (at >= 0) splice(cur, at, pair.p().word());
    return Word(std::move(cur));
}

Word single_scan_r(const Word& w, const PatternPair& pair) {
    std::vector<Symbol> cur(w.symbols().begin(), w.symbols().end());
    const int at = find_last(cur, pair.p());
    if (at >= 0) splice(cur, at, pair.q().word());
    return Word(std::move(cur));
}

PhiResult phi_l(const Word& w, const PatternPair& pair, std::uint64_t max_steps) {
    return run_phi(w, pair.q(), pair.p().word(), ScanDirection::left, max_steps,
                   pair.alphabet_size());
}

PhiResult phi_r(const Word& w, const PatternPair& pair, std::uint64_t max_steps) {
    return run_phi(w, pair.p(), pair.q().word(), ScanDirection::right, max_steps,
                   pair.alphabet_size());
}

PhiResult phi_l_bar(const Word& w, const PatternPair& pair, std::uint64_t max_steps) {
    return run_phi(w, pair.p_reversed(), pair.q_reversed().word(), ScanDirection::left, max_steps,
                   pair.alphabet_size());
}

PhiResult phi_r_bar(const Word& w, const PatternPair& pair, std::uint64_t max_steps) {
    return run_phi(w, pair.q_reversed(), pair.p_reversed().word(), ScanDirection::right, max_steps,
                   pair.alphabet_size());
}

Word replay_trace(const Word& w, const ReplacementTrace& trace) {
    Word cur = w;
    for (const auto& step : trace.steps) {
        if (cur != step.before)
            throw std::logic_error("trace step does not chain from the current word");
        if (step.after.length() != cur.length())
            throw std::logic_error("trace step changes the word length");
        for (int i = 0; i < step.start; ++i)
            if (step.before[i] != step.after[i])
                throw std::logic_error("trace step edits before its window");
        cur = step.after;
    }
    return cur;
}

OccurrenceBalance occurrence_balance(const Word& w, const PatternPair& pair) {
    OccurrenceBalance out;
    out.q_in_input = find_occurrences(w, pair.q()).size();
    out.p_in_image = find_occurrences(phi_l(w, pair).word, pair.p()).size();
    return out;
}

BijectionReport verify_bijection(const PatternPair& pair, int n, const EnumerationBudget& budget,
                                 Exec mode) {
    const int k = pair.alphabet_size();
    const std::uint64_t total = require_within_budget(k, n, budget);
    const PrefixAutomaton match_p(pair.p());
    const PrefixAutomaton match_q(pair.q());
    const std::uint64_t step_limit = default_step_limit(k, n);

    const int workers = worker_count(mode);
    std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> images(
        static_cast<std::size_t>(workers));
    std::vector<std::vector<std::uint64_t>> codomain(static_cast<std::size_t>(workers));
    std::vector<std::vector<std::uint64_t>> round_trip(static_cast<std::size_t>(workers));

    run_chunks(total, mode, [&](int slot, std::uint64_t begin, std::uint64_t end) {
        std::vector<Symbol> w(static_cast<std::size_t>(n));
        auto& local_images = images[static_cast<std::size_t>(slot)];
        auto& local_codomain = codomain[static_cast<std::size_t>(slot)];
        auto& local_round_trip = round_trip[static_cast<std::size_t>(slot)];
        for (std::uint64_t code = begin; code < end; ++code) {
            decode_word(code, n, k, w.data());
            if (avoids(w, match_q)) local_codomain.push_back(code);
            if (!avoids(w, match_p)) continue;
            std::vector<Symbol> image = w;
            fixpoint_in_place(image, pair.q(), pair.p().word(), /*leftmost=*/true, step_limit);
            local_images.emplace_back(encode_word(Word{std::vector<Symbol>(image)}, k), code);
            std::vector<Symbol> back = image;
            fixpoint_in_place(back, pair.p(), pair.q().word(), /*leftmost=*/false, step_limit);
            if (back != w) local_round_trip.push_back(code);
        }
    });

    BijectionReport report;
    report.n = n;

    std::vector<std::pair<std::uint64_t, std::uint64_t>> all_images;
    for (auto& part : images) all_images.insert(all_images.end(), part.begin(), part.end());
    std::sort(all_images.begin(), all_images.end());
    report.domain_size = all_images.size();

    std::vector<std::uint64_t> codomain_codes;
    for (auto& part : codomain) codomain_codes.insert(codomain_codes.end(), part.begin(), part.end());
    report.codomain_size = codomain_codes.size();

    for (auto& part : round_trip)
        for (std::uint64_t code : part)
            report.round_trip_failures.push_back(decode_word(code, n, k));

    for (std::size_t i = 0; i < all_images.size();) {
        std::size_t j = i;
        while (j < all_images.size() && all_images[j].first == all_images[i].first) ++j;
        if (j - i > 1) {
            Collision c;
            c.image = decode_word(all_images[i].first, n, k);
            for (std::size_t m = i; m < j; ++m)
                c.preimages.push_back(decode_word(all_images[m].second, n, k));
            report.collisions.push_back(std::move(c));
        }
        i = j;
    }

    // Images always avoid q, so gaps are codomain codes the image misses.
    std::size_t ai = 0;
    for (std::uint64_t code : codomain_codes) {
        while (ai < all_images.size() && all_images[ai].first < code) ++ai;
        if (ai >= all_images.size() || all_images[ai].first != code)
            report.image_gaps.push_back(decode_word(code, n, k));
    }

    report.bijective = report.collisions.empty() && report.image_gaps.empty();
    return report;
}

ConjugationReport verify_conjugation(const PatternPair& pair, int n,
                                     const EnumerationBudget& budget, Exec mode) {
    const int k = pair.alphabet_size();
    const std::uint64_t total = require_within_budget(k, n, budget);
    const PrefixAutomaton match_p(pair.p());
    const PrefixAutomaton match_q(pair.q());
    const std::uint64_t step_limit = default_step_limit(k, n);

    const int workers = worker_count(mode);
    std::vector<std::vector<std::uint64_t>> bad_r(static_cast<std::size_t>(workers));
    std::vector<std::vector<std::uint64_t>> bad_l(static_cast<std::size_t>(workers));
    std::vector<std::uint64_t> seen_q(static_cast<std::size_t>(workers), 0);
    std::vector<std::uint64_t> seen_p(static_cast<std::size_t>(workers), 0);

    run_chunks(total, mode, [&](int slot, std::uint64_t begin, std::uint64_t end) {
        std::vector<Symbol> w(static_cast<std::size_t>(n));
        for (std::uint64_t code = begin; code < end; ++code) {
            decode_word(code, n, k, w.data());
            std::vector<Symbol> rev(w.rbegin(), w.rend());
            if (avoids(w, match_q)) {
                ++seen_q[static_cast<std::size_t>(slot)];
                std::vector<Symbol> lhs = w;
                fixpoint_in_place(lhs, pair.p(), pair.q().word(), /*leftmost=*/false, step_limit);
                std::vector<Symbol> rhs = rev;
                fixpoint_in_place(rhs, pair.p_reversed(), pair.q_reversed().word(),
                                  /*leftmost=*/true, step_limit);
                std::reverse(rhs.begin(), rhs.end());
                if (lhs != rhs) bad_r[static_cast<std::size_t>(slot)].push_back(code);
            }
            if (avoids(w, match_p)) {
                ++seen_p[static_cast<std::size_t>(slot)];
                std::vector<Symbol> lhs = w;
                fixpoint_in_place(lhs, pair.q(), pair.p().word(), /*leftmost=*/true, step_limit);
                std::vector<Symbol> rhs = rev;
                fixpoint_in_place(rhs, pair.q_reversed(), pair.p_reversed().word(),
                                  /*leftmost=*/false, step_limit);
                std::reverse(rhs.begin(), rhs.end());
                if (lhs != rhs) bad_l[static_cast<std::size_t>(slot)].push_back(code);
            }
        }
    });

    ConjugationReport report;
    report.n = n;
    for (int t = 0; t < workers; ++t) {
        report.checked_q_avoiders += seen_q[static_cast<std::size_t>(t)];
        report.checked_p_avoiders += seen_p[static_cast<std::size_t>(t)];
        for (std::uint64_t code : bad_r[static_cast<std::size_t>(t)])
            report.phi_r_violations.push_back(decode_word(code, n, k));
        for (std::uint64_t code : bad_l[static_cast<std::size_t>(t)])
            report.phi_l_violations.push_back(decode_word(code, n, k));
    }
    return report;
}

}  // namespace avoidance
