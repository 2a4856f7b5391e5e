#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "avoidance/bijection.hpp"
#include "avoidance/counting.hpp"
#include "avoidance/enumerate.hpp"

using namespace avoidance;

namespace {

Pattern pat(const char* text) { return Pattern::compile(Word::parse(text, 2), 2); }

Word word(const char* text) { return Word::parse(text, 2); }

PatternPair make_pair(const char* p, const char* q) { return PatternPair(pat(p), pat(q)); }

std::vector<int> starts(const ReplacementTrace& trace) {
    std::vector<int> out;
    for (const auto& step : trace.steps) out.push_back(step.start);
    return out;
}

std::vector<Word> avoiders(const Pattern& p, int n) {
    std::vector<Word> out;
    const std::uint64_t total = *checked_pow(2, static_cast<unsigned>(n));
    for (std::uint64_t code = 0; code < total; ++code) {
        const Word w = decode_word(code, n, 2);
        if (!contains(w, p)) out.push_back(w);
    }
    return out;
}

std::vector<PatternPair> same_proper_border_pairs(int max_length) {
    std::vector<PatternPair> out;
    for (int l = 1; l <= max_length; ++l) {
        const std::uint64_t total = *checked_pow(2, static_cast<unsigned>(l));
        for (std::uint64_t a = 0; a < total; ++a)
            for (std::uint64_t b = 0; b < total; ++b) {
                if (a == b) continue;
                PatternPair pair(Pattern::compile(decode_word(a, l, 2), 2),
                                 Pattern::compile(decode_word(b, l, 2), 2));
                if (pair.same_proper_borders()) out.push_back(std::move(pair));
            }
    }
    return out;
}

}  // namespace

TEST_CASE("pattern pairs validate their invariants") {
    CHECK_THROWS_AS(make_pair("0110", "0110"), std::invalid_argument);
    CHECK_THROWS_AS(make_pair("011", "0110"), std::invalid_argument);
    CHECK_THROWS_AS(PatternPair(pat("01"), Pattern::compile(Word::parse("02", 3), 3)),
                    std::invalid_argument);
    CHECK(make_pair("1001", "1101").same_proper_borders());
    CHECK(make_pair("0110", "0010").same_proper_borders());
    CHECK_FALSE(make_pair("0110", "1011").same_proper_borders());
    CHECK_FALSE(make_pair("1011", "0100").same_proper_borders());
}

TEST_CASE("single scans edit one window") {
    const PatternPair pair = make_pair("011", "001");
    CHECK(single_scan_l(word("0001001"), pair) == word("0011001"));
    CHECK(single_scan_l(word("0111011"), pair) == word("0111011"));  // no q
    CHECK(single_scan_r(word("0111011"), pair) == word("0111001"));
    CHECK(single_scan_r(word("0001001"), pair) == word("0001001"));  // no p

    const PatternPair wide = make_pair("0110", "0010");
    CHECK(single_scan_l(word("1001001011"), wide) == word("1011001011"));
    CHECK(single_scan_r(word("1011011011"), wide) == word("1011001011"));
}

TEST_CASE("phi_L and phi_R reproduce the worked replacement runs") {
    const PatternPair pair = make_pair("011", "001");

    const PhiResult forward = phi_l(word("0001001"), pair);
    CHECK(forward.word == word("0111011"));
    CHECK(starts(forward.trace) == std::vector<int>{1, 0, 4});

    const PhiResult backward = phi_r(word("0111011"), pair);
    CHECK(backward.word == word("0001001"));
    CHECK(starts(backward.trace) == std::vector<int>{4, 0, 1});

    const PatternPair wide = make_pair("0110", "0010");
    const PhiResult wide_forward = phi_l(word("1001001011"), wide);
    CHECK(wide_forward.word == word("1011011011"));
    CHECK(starts(wide_forward.trace) == std::vector<int>{1, 4});
    const PhiResult wide_back = phi_r(wide_forward.word, wide);
    CHECK(wide_back.word == word("1001001011"));
    CHECK(starts(wide_back.trace) == std::vector<int>{4, 1});
}

TEST_CASE("reversed-scan variants and the conjugation identities") {
    const PatternPair pair = make_pair("011", "001");

    const PhiResult barred = phi_r_bar(word("1001000"), pair);
    CHECK(barred.word == word("1101110"));
    CHECK(starts(barred.trace) == std::vector<int>{3, 4, 0});

    CHECK(reverse(phi_r_bar(reverse(word("0001001")), pair).word) == word("0111011"));
    CHECK(reverse(phi_l_bar(reverse(word("0111011")), pair).word) ==
          phi_r(word("0111011"), pair).word);
}

TEST_CASE("collision example at the swapped orientation") {
    // This collision example replaces the leftmost 1011 with 0100, so the
    // scanned pattern q is 1011 and the replacement p is 0100.
    const PatternPair pair = make_pair("0100", "1011");
    const PhiResult a = phi_l(word("0101011"), pair);
    const PhiResult b = phi_l(word("1011100"), pair);
    CHECK(a.word == word("0100100"));
    CHECK(b.word == word("0100100"));
    CHECK(starts(a.trace) == std::vector<int>{3});
    CHECK(starts(b.trace) == std::vector<int>{0});
}

TEST_CASE("occurrence balance fixtures") {
    const PatternPair unbalanced = make_pair("001", "110");
    const PhiResult result = phi_l(word("1101110"), unbalanced);
    CHECK(result.word == word("0000101"));
    CHECK(result.trace.step_count() == 3);
    CHECK(starts(result.trace) == std::vector<int>{0, 4, 2});

    const OccurrenceBalance balance = occurrence_balance(word("1101110"), unbalanced);
    CHECK(balance.q_in_input == 2);
    CHECK(balance.p_in_image == 1);

    const OccurrenceBalance even = occurrence_balance(word("0001001"), make_pair("011", "001"));
    CHECK(even.q_in_input == 2);
    CHECK(even.p_in_image == 2);

    const OccurrenceBalance none = occurrence_balance(word("1111111"), make_pair("011", "001"));
    CHECK(none.q_in_input == 0);
    CHECK(none.p_in_image == 0);
}

TEST_CASE("words avoiding both patterns are fixed points") {
    const PatternPair pair = make_pair("011", "001");
    for (const Word& w : avoiders(pair.p(), 6)) {
        if (contains(w, pair.q())) continue;
        const PhiResult result = phi_l(w, pair);
        CHECK(result.word == w);
        CHECK(result.trace.steps.empty());
    }
}

TEST_CASE("every L step preserves length and moves strictly lexicographically") {
    for (const PatternPair& pair : same_proper_border_pairs(3)) {
        const bool decreasing = pair.p().word() < pair.q().word();
        for (int n = 0; n <= 7; ++n)
            for (const Word& w : avoiders(pair.p(), n)) {
                const PhiResult result = phi_l(w, pair);
                for (const auto& step : result.trace.steps) {
                    CHECK(step.before.length() == w.length());
                    CHECK(step.after.length() == w.length());
                    if (decreasing)
                        CHECK(step.after < step.before);
                    else
                        CHECK(step.before < step.after);
                }
            }
    }
}

TEST_CASE("trace replay reproduces the image and rejects mismatches") {
    const PatternPair pair = make_pair("011", "001");
    for (const Word& w : avoiders(pair.p(), 8)) {
        const PhiResult result = phi_l(w, pair);
        CHECK(replay_trace(w, result.trace) == result.word);
    }
    const PhiResult result = phi_l(word("0001001"), pair);
    CHECK_THROWS_AS(replay_trace(word("0001000"), result.trace), std::logic_error);
}

TEST_CASE("phi_R undoes phi_L step by step in reverse order") {
    for (const PatternPair& pair :
         {make_pair("011", "001"), make_pair("0110", "0010"), make_pair("1001", "1101")}) {
        for (const Word& w : avoiders(pair.p(), 8)) {
            const PhiResult forward = phi_l(w, pair);
            const PhiResult backward = phi_r(forward.word, pair);
            CHECK(backward.word == w);
            std::vector<int> mirrored = starts(forward.trace);
            std::reverse(mirrored.begin(), mirrored.end());
            CHECK(starts(backward.trace) == mirrored);
        }
    }
}

TEST_CASE("the image avoids the scanned pattern for every pair") {
    for (int l = 1; l <= 4; ++l) {
        const std::uint64_t total = *checked_pow(2, static_cast<unsigned>(l));
        for (std::uint64_t a = 0; a < total; ++a)
            for (std::uint64_t b = 0; b < total; ++b) {
                if (a == b) continue;
                const PatternPair pair(Pattern::compile(decode_word(a, l, 2), 2),
                                       Pattern::compile(decode_word(b, l, 2), 2));
                for (int n = 0; n <= 7; ++n)
                    for (const Word& w : avoiders(pair.p(), n))
                        CHECK_FALSE(contains(phi_l(w, pair).word, pair.q()));
            }
    }
}

TEST_CASE("equal proper borders give a bijection at small scale") {
    for (const PatternPair& pair : same_proper_border_pairs(3)) {
        for (int n = 0; n <= 8; ++n) {
            const BijectionReport report = verify_bijection(pair, n);
            CAPTURE(pair.p().word().str(2));
            CAPTURE(pair.q().word().str(2));
            CAPTURE(n);
            CHECK(report.bijective);
            CHECK(report.collisions.empty());
            CHECK(report.image_gaps.empty());
            CHECK(report.round_trip_failures.empty());
            CHECK(report.domain_size == report.codomain_size);
        }
    }
}

TEST_CASE("verify_bijection confirms the worked pair and sizes") {
    const PatternPair pair = make_pair("1001", "1101");
    const BijectionReport report = verify_bijection(pair, 6);
    CHECK(report.bijective);
    const auto series_p = automaton_counts(pair.p(), 6);
    const auto series_q = automaton_counts(pair.q(), 6);
    CHECK(BigInt(report.domain_size) == series_p.counts.back());
    CHECK(BigInt(report.codomain_size) == series_q.counts.back());
}

TEST_CASE("verify_bijection reports the collision witnesses") {
    const BijectionReport report = verify_bijection(make_pair("0100", "1011"), 7);
    CHECK_FALSE(report.bijective);
    bool found = false;
    for (const auto& collision : report.collisions) {
        if (collision.image != word("0100100")) continue;
        found = true;
        CHECK(collision.preimages == std::vector<Word>{word("0101011"), word("1011100")});
    }
    CHECK(found);

    // The mirrored orientation fails too, with different witnesses.
    const BijectionReport mirrored = verify_bijection(make_pair("1011", "0100"), 7);
    CHECK_FALSE(mirrored.bijective);
    CHECK_FALSE(mirrored.collisions.empty());
}

TEST_CASE("verify_bijection is trivial below the pattern length") {
    const BijectionReport report = verify_bijection(make_pair("0110", "1011"), 2);
    CHECK(report.bijective);
    CHECK(report.domain_size == 4);
    CHECK(report.codomain_size == 4);
}

TEST_CASE("verify_bijection is deterministic across execution modes") {
    const PatternPair pair = make_pair("1011", "0100");
    const BijectionReport serial = verify_bijection(pair, 7, {}, Exec::serial);
    const BijectionReport parallel = verify_bijection(pair, 7, {}, Exec::parallel);
    CHECK(serial.bijective == parallel.bijective);
    CHECK(serial.domain_size == parallel.domain_size);
    REQUIRE(serial.collisions.size() == parallel.collisions.size());
    for (std::size_t i = 0; i < serial.collisions.size(); ++i) {
        CHECK(serial.collisions[i].image == parallel.collisions[i].image);
        CHECK(serial.collisions[i].preimages == parallel.collisions[i].preimages);
    }
    CHECK(serial.image_gaps == parallel.image_gaps);
}

TEST_CASE("conjugation identities verify exhaustively") {
    const PatternPair pair = make_pair("011", "001");
    for (int n : {0, 4, 7}) {
        const ConjugationReport report = verify_conjugation(pair, n);
        CHECK(report.ok());
        CHECK(report.phi_r_violations.empty());
        CHECK(report.phi_l_violations.empty());
    }
    const ConjugationReport asym = verify_conjugation(make_pair("1011", "0100"), 7);
    CHECK(asym.ok());  // the identities need no border hypothesis
}

TEST_CASE("budget and step limits guard the sweeps") {
    CHECK_THROWS_AS(verify_bijection(make_pair("011", "001"), 30, EnumerationBudget{1024}),
                    BudgetExceeded);
    CHECK_THROWS_AS(verify_conjugation(make_pair("011", "001"), 30, EnumerationBudget{1024}),
                    BudgetExceeded);
    CHECK_THROWS_AS(phi_l(word("0001001"), make_pair("011", "001"), 1), StepLimitExceeded);
    CHECK(phi_l(word("0001001"), make_pair("011", "001"), 3).word == word("0111011"));
}
