#pragma once

#include <cstdint>
#include <vector>

#include "avoidance/word.hpp"

namespace avoidance {

// A nonempty word compiled for matching: KMP failure table plus the border
// structure (border length set, proper borders). A border is a nonempty word
// that is both a prefix and a suffix; the pattern is always a border of
// itself, so length() is always in border_lengths().
class Pattern {
public:
    // Throws std::invalid_argument on an empty word, an alphabet size outside
    // [1, 256], or a symbol outside the alphabet.
    static Pattern compile(const Word& w, int alphabet_size);

    const Word& word() const { return word_; }
    int length() const { return word_.length(); }
    int alphabet_size() const { return alphabet_size_; }

    // failure()[i] = length of the longest proper border of the prefix of
    // length i+1 (the classical string-matching table).
    const std::vector<int>& failure() const { return failure_; }

    // Ascending; the last entry is always length().
    const std::vector<int>& border_lengths() const { return border_lengths_; }

    // The proper borders as words (prefixes at every border length < l).
    std::vector<Word> proper_borders() const;

    bool is_borderless() const { return border_lengths_.size() == 1; }

    // Bit i set iff i is a border length. Requires length() <= 63.
    std::uint64_t border_mask() const;

    bool operator==(const Pattern& o) const {
        return word_ == o.word_ && alphabet_size_ == o.alphabet_size_;
    }

private:
    Word word_;
    int alphabet_size_ = 0;
    std::vector<int> failure_;
    std::vector<int> border_lengths_;
};

// All start indices i with w[i..i+l) = p, ascending; overlapping occurrences
// are all reported.
std::vector<int> find_occurrences(const Word& w, const Pattern& p);

bool contains(const Word& w, const Pattern& p);

// Dense KMP transition table. A state in [0, l] is the length of the longest
// pattern prefix matching a suffix of the text consumed so far; state l marks
// a complete occurrence. Row l continues the scan as if from failure(l), so
// overlapping occurrences chain naturally.
class PrefixAutomaton {
public:
    explicit PrefixAutomaton(const Pattern& p);

    int pattern_length() const { return length_; }
    int alphabet_size() const { return alphabet_size_; }

    int step(int state, Symbol c) const {
        return delta_[static_cast<std::size_t>(state) * alphabet_size_ + c];
    }

private:
    int length_;
    int alphabet_size_;
    std::vector<int> delta_;  // (l+1) x k
};

}  // namespace avoidance
