#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "avoidance/census.hpp"
#include "avoidance/counting.hpp"
#include "avoidance/enumerate.hpp"

using namespace avoidance;

namespace {

Pattern pat(const char* text) { return Pattern::compile(Word::parse(text, 2), 2); }

Word word(const char* text) { return Word::parse(text, 2); }

struct TableRow {
    int length;
    std::uint64_t phi_l, composition, equivalent;
};

// The published pair counts for the binary alphabet.
constexpr TableRow kTable[] = {
    {1, 1, 1, 1},          {2, 1, 2, 2},          {3, 6, 8, 8},
    {4, 21, 32, 32},       {5, 88, 120, 120},     {6, 312, 460, 460},
    {7, 1212, 1708, 1716}, {8, 4649, 6764, 6780}, {9, 18264, 26072, 26168},
    {10, 71058, 103460, 103764},
};

std::vector<Word> avoiders(const Pattern& p, int n) {
    std::vector<Word> out;
    const std::uint64_t total = *checked_pow(2, static_cast<unsigned>(n));
    for (std::uint64_t code = 0; code < total; ++code) {
        const Word w = decode_word(code, n, 2);
        if (!contains(w, p)) out.push_back(w);
    }
    return out;
}

}  // namespace

TEST_CASE("fractions reduce and render") {
    CHECK(Fraction::of(2, 4) == Fraction{1, 2});
    CHECK(Fraction::of(0, 5) == Fraction{0, 1});
    CHECK(Fraction::of(1, 2).decimal() == "0.500000");
    CHECK(Fraction::of(1, 3).decimal() == "0.333333");
    CHECK(Fraction::of(2, 3).decimal() == "0.666667");
    CHECK(Fraction::of(1, 1).decimal(2) == "1.00");
    CHECK(Fraction::of(5, 4).decimal(1) == "1.3");
    CHECK(Fraction::of(999999, 1000000).decimal(3) == "1.000");
    CHECK(Fraction::of(3, 2).decimal(0) == "2");
    CHECK_THROWS_AS(Fraction::of(1, 0), std::invalid_argument);
}

TEST_CASE("census matches the expected pair counts") {
    for (const TableRow& row : kTable) {
        const CensusReport report = census(row.length, 2);
        CAPTURE(row.length);
        CHECK(report.phi_l_pairs == row.phi_l);
        CHECK(report.composition_pairs == row.composition);
        CHECK(report.equivalent_pairs == row.equivalent);
        CHECK(report.phi_l_pairs <= report.composition_pairs);
        CHECK(report.composition_pairs <= report.equivalent_pairs);
        CHECK(report.unexplained.size() ==
              report.equivalent_pairs - report.composition_pairs);
    }
}

TEST_CASE("unexplained pairs appear first at length 7") {
    for (int l = 1; l <= 6; ++l) CHECK(unexplained_pairs(l, 2).empty());

    const auto pairs = unexplained_pairs(7, 2);
    REQUIRE(pairs.size() == 8);
    CHECK(std::is_sorted(pairs.begin(), pairs.end()));
    const std::vector<std::pair<Word, Word>> expected = {
        {word("0010010"), word("0110110")}, {word("0010010"), word("1001001")},
        {word("0100100"), word("0110110")}, {word("0100100"), word("1001001")},
        {word("0110110"), word("1011011")}, {word("0110110"), word("1101101")},
        {word("1001001"), word("1011011")}, {word("1001001"), word("1101101")},
    };
    CHECK(pairs == expected);
    for (const auto& [p, q] : pairs)
        CHECK(pat(p.str(2).c_str()).border_lengths() == pat(q.str(2).c_str()).border_lengths());
}

TEST_CASE("borderless statistics at small lengths") {
    const auto [b2, o2] = borderless_stats(2, 2);
    CHECK(b2 == Fraction{1, 2});  // 01 and 10
    CHECK(o2 == Fraction{1, 2});  // 00 and 11

    const auto [b3, o3] = borderless_stats(3, 2);
    CHECK(b3 == Fraction{1, 2});  // 001, 011, 100, 110
    CHECK(o3 == Fraction{1, 4});  // 010, 101

    const auto [b1, o1] = borderless_stats(1, 2);
    CHECK(b1 == Fraction{1, 1});
    CHECK(o1 == Fraction{0, 1});
}

TEST_CASE("census report fractions agree with borderless_stats") {
    const CensusReport report = census(6, 2);
    const auto [borderless, one_l] = borderless_stats(6, 2);
    CHECK(report.borderless_fraction == borderless);
    CHECK(report.profile_one_l_fraction == one_l);
}

TEST_CASE("classification fixtures") {
    const PairClassification a = classify_pair(pat("1001"), pat("1101"));
    CHECK(a.equivalent);
    CHECK(a.phi_l_bijective);
    CHECK(a.composition_bijective);

    const PairClassification b = classify_pair(pat("0110"), pat("1101"));
    CHECK(b.equivalent);
    CHECK_FALSE(b.phi_l_bijective);
    CHECK(b.composition_bijective);

    const PairClassification c = classify_pair(pat("0010010"), pat("0110110"));
    CHECK(c.equivalent);
    CHECK_FALSE(c.phi_l_bijective);
    CHECK_FALSE(c.composition_bijective);

    const PairClassification d = classify_pair(pat("00"), pat("01"));
    CHECK_FALSE(d.equivalent);
    CHECK_FALSE(d.phi_l_bijective);
    CHECK_FALSE(d.composition_bijective);

    CHECK_THROWS_AS(classify_pair(pat("00"), pat("00")), std::invalid_argument);
    CHECK_THROWS_AS(classify_pair(pat("00"), pat("011")), std::invalid_argument);
}

TEST_CASE("classification implications hold for every pair at length 4") {
    const ClosureGraph graph(4, 2);
    const std::uint64_t total = 16;
    for (std::uint64_t a = 0; a < total; ++a)
        for (std::uint64_t b = a + 1; b < total; ++b) {
            const Pattern p = Pattern::compile(decode_word(a, 4, 2), 2);
            const Pattern q = Pattern::compile(decode_word(b, 4, 2), 2);
            const bool equivalent = are_avoidant_equivalent(p, q);
            const bool phi_l = PatternPair(p, q).same_proper_borders();
            const bool composition = graph.connected(p.word(), q.word());
            if (phi_l) CHECK(composition);
            if (composition) CHECK(equivalent);
        }
}

TEST_CASE("closure graph connectivity basics") {
    const ClosureGraph graph(7, 2);
    CHECK(graph.connected(word("0010010"), word("0010010")));
    CHECK(graph.connected(word("0010010"), word("0100100")));   // reversal
    CHECK_FALSE(graph.connected(word("0010010"), word("0110110")));
    CHECK_FALSE(graph.connected(word("0010010"), word("0010011")));  // different borders
    CHECK_THROWS_AS(graph.connected(word("00100"), word("00111")), std::invalid_argument);

    CHECK(graph.chain(word("0010010"), word("0110110")) == std::nullopt);
    const auto self_chain = graph.chain(word("0010010"), word("0010010"));
    REQUIRE(self_chain.has_value());
    CHECK(self_chain->empty());
}

TEST_CASE("chains compose elementary steps from p to q") {
    const ClosureGraph graph(4, 2);
    const auto chain = graph.chain(word("0110"), word("1101"));
    REQUIRE(chain.has_value());
    REQUIRE_FALSE(chain->empty());
    CHECK(chain->front().from == word("0110"));
    CHECK(chain->back().to == word("1101"));
    for (std::size_t i = 0; i + 1 < chain->size(); ++i)
        CHECK((*chain)[i].to == (*chain)[i + 1].from);
    for (const auto& step : *chain) {
        switch (step.kind) {
            case ClosureGraph::Step::Kind::replacement:
                CHECK(PatternPair(Pattern::compile(step.from, 2), Pattern::compile(step.to, 2))
                          .same_proper_borders());
                break;
            case ClosureGraph::Step::Kind::reversal:
                CHECK(step.to == reverse(step.from));
                break;
            case ClosureGraph::Step::Kind::relabeling:
                CHECK(step.sigma.apply(step.from) == step.to);
                break;
        }
    }
}

TEST_CASE("sampled chains are bijections between avoider sets") {
    std::mt19937 rng(101);
    std::vector<std::pair<Word, Word>> connected_pairs;
    std::vector<ClosureGraph> graphs;
    for (int l : {4, 5, 6}) graphs.emplace_back(l, 2);

    for (const ClosureGraph& graph : graphs) {
        const int l = graph.length();
        const std::uint64_t total = *checked_pow(2, static_cast<unsigned>(l));
        for (std::uint64_t a = 0; a < total; ++a)
            for (std::uint64_t b = a + 1; b < total; ++b) {
                const Word p = decode_word(a, l, 2);
                const Word q = decode_word(b, l, 2);
                if (graph.connected(p, q)) connected_pairs.emplace_back(p, q);
            }
    }
    std::shuffle(connected_pairs.begin(), connected_pairs.end(), rng);
    connected_pairs.resize(100);

    for (const auto& [p, q] : connected_pairs) {
        const int l = p.length();
        const ClosureGraph& graph = graphs[static_cast<std::size_t>(l - 4)];
        const auto chain = graph.chain(p, q);
        REQUIRE(chain.has_value());

        const int n = l + 2;
        const auto domain = avoiders(Pattern::compile(p, 2), n);
        const auto codomain = avoiders(Pattern::compile(q, 2), n);
        std::set<Word> images;
        for (const Word& w : domain) {
            Word image = w;
            for (const auto& step : *chain) image = apply_chain_step(step, image);
            images.insert(image);
        }
        CAPTURE(p.str(2));
        CAPTURE(q.str(2));
        CHECK(images.size() == domain.size());
        CHECK(images == std::set<Word>(codomain.begin(), codomain.end()));
    }
}

TEST_CASE("census is deterministic across execution modes") {
    const CensusReport serial = census(6, 2, {}, Exec::serial);
    const CensusReport parallel = census(6, 2, {}, Exec::parallel);
    CHECK(serial.phi_l_pairs == parallel.phi_l_pairs);
    CHECK(serial.composition_pairs == parallel.composition_pairs);
    CHECK(serial.equivalent_pairs == parallel.equivalent_pairs);
    CHECK(serial.unexplained == parallel.unexplained);
    CHECK(serial.borderless_fraction == parallel.borderless_fraction);
}

TEST_CASE("census guards its inputs and budget") {
    CHECK_THROWS_AS(ClosureGraph(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(ClosureGraph(63, 2), std::invalid_argument);
    CHECK_THROWS_AS(ClosureGraph(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(ClosureGraph(30, 2, EnumerationBudget{1 << 20}), BudgetExceeded);
    CHECK_THROWS_AS(borderless_stats(30, 2, EnumerationBudget{1 << 20}), BudgetExceeded);
}
