#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "avoidance/bijection.hpp"
#include "avoidance/enumerate.hpp"
#include "avoidance/pattern.hpp"

namespace avoidance {

// Exact reduced fraction with a fixed-point decimal rendering.
struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Fraction of(std::uint64_t num, std::uint64_t den);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string decimal(int places = 6) const;

    bool operator==(const Fraction&) const = default;
};

struct PairClassification {
    bool equivalent = false;             // b(p) = b(q)
    bool phi_l_bijective = false;        // equal proper-border word sets
    bool composition_bijective = false;  // connected in the closure graph
};

// Graph on all k^l patterns of one length whose edges are the elementary
// bijections: equal-proper-border pairs (leftmost replacement), reversal
// pairs, and letter-relabeling pairs. Every edge connects patterns with the
// same border length set, so components refine the border-profile grouping.
class ClosureGraph {
public:
    ClosureGraph(int length, int alphabet_size,
                 const EnumerationBudget& budget = {}, Exec mode = Exec::parallel);

    int length() const { return length_; }
    int alphabet_size() const { return alphabet_size_; }

    bool connected(const Word& p, const Word& q) const;

    std::uint64_t equivalent_pairs() const { return equivalent_pairs_; }
    std::uint64_t phi_l_pairs() const { return phi_l_pairs_; }
    std::uint64_t composition_pairs() const { return composition_pairs_; }

    std::uint64_t borderless_count() const { return borderless_count_; }
    std::uint64_t profile_one_l_count() const { return profile_one_l_count_; }

    // Equivalent pairs in different components, each pair ordered, the list
    // sorted lexicographically.
    std::vector<std::pair<Word, Word>> unexplained_pairs() const;

    // One elementary bijection A_n(from) -> A_n(to).
    struct Step {
        enum class Kind { replacement, reversal, relabeling };
        Kind kind;
        Word from;
        Word to;
        LetterPermutation sigma;  // identity except for relabeling steps
    };

    // Chain of elementary bijections composing to A_n(p) -> A_n(q), found by
    // breadth-first search; nullopt when p and q are disconnected.
    std::optional<std::vector<Step>> chain(const Word& p, const Word& q) const;

private:
    std::vector<std::uint64_t> group_of(std::uint64_t mask) const;

    int length_;
    int alphabet_size_;
    std::uint64_t total_;
    std::vector<std::uint64_t> masks_;  // border length set per pattern code
    std::vector<std::uint64_t> roots_;  // component representative per code
    std::uint64_t equivalent_pairs_ = 0;
    std::uint64_t phi_l_pairs_ = 0;
    std::uint64_t composition_pairs_ = 0;
    std::uint64_t borderless_count_ = 0;
    std::uint64_t profile_one_l_count_ = 0;
};

// Applies one chain step to a word of matching length.
Word apply_chain_step(const ClosureGraph::Step& step, const Word& w);

struct CensusReport {
    int pattern_length = 0;
    int alphabet_size = 0;
    std::uint64_t phi_l_pairs = 0;
    std::uint64_t composition_pairs = 0;
    std::uint64_t equivalent_pairs = 0;
    std::vector<std::pair<Word, Word>> unexplained;
    Fraction borderless_fraction;
    Fraction profile_one_l_fraction;  // patterns with border length set {1, l}
};

// Full pair census over all patterns of the given length.
CensusReport census(int length, int alphabet_size,
                    const EnumerationBudget& budget = {}, Exec mode = Exec::parallel);

std::vector<std::pair<Word, Word>> unexplained_pairs(int length, int alphabet_size,
                                                     const EnumerationBudget& budget = {},
                                                     Exec mode = Exec::parallel);

// (borderless fraction, {1,l}-profile fraction). Cheaper than census(): no
// pair grouping, just a parallel profile scan.
std::pair<Fraction, Fraction> borderless_stats(int length, int alphabet_size,
                                               const EnumerationBudget& budget = {},
                                               Exec mode = Exec::parallel);

// Classification of one pair; the composition check enumerates the closure
// graph of the pair's length. Throws std::invalid_argument on mismatched
// lengths or alphabets, or p = q.
PairClassification classify_pair(const Pattern& p, const Pattern& q,
                                 const EnumerationBudget& budget = {},
                                 Exec mode = Exec::parallel);

}  // namespace avoidance
