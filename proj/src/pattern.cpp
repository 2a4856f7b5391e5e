#include "avoidance/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace avoidance {

Pattern Pattern::compile(const Word& w, int alphabet_size) {
    if (w.empty()) throw std::invalid_argument("cannot compile the empty word as a pattern");
    if (alphabet_size < 1 || alphabet_size > kMaxAlphabet)
        throw std::invalid_argument("alphabet size must be in [1, 256]");
    if (w.max_symbol() >= alphabet_size)
        throw std::invalid_argument("pattern symbol outside the alphabet");

    Pattern p;
    p.word_ = w;
    p.alphabet_size_ = alphabet_size;

    const int l = w.length();
    p.failure_.assign(static_cast<std::size_t>(l), 0);
    for (int i = 1; i < l; ++i) {
        int b = p.failure_[static_cast<std::size_t>(i) - 1];
        while (b > 0 && w[i] != w[b]) b = p.failure_[static_cast<std::size_t>(b) - 1];
        if (w[i] == w[b]) ++b;
        p.failure_[static_cast<std::size_t>(i)] = b;
    }

    // Border lengths are the failure chain of the whole word, plus l itself.
    p.border_lengths_.push_back(l);
    for (int b = p.failure_[static_cast<std::size_t>(l) - 1]; b > 0;
         b = p.failure_[static_cast<std::size_t>(b) - 1])
        p.border_lengths_.push_back(b);
    std::sort(p.border_lengths_.begin(), p.border_lengths_.end());
    return p;
}

std::vector<Word> Pattern::proper_borders() const {
    std::vector<Word> out;
    for (int b : border_lengths_) {
        if (b == length()) continue;
        auto symbols = word_.symbols();
        out.emplace_back(std::vector<Symbol>(symbols.begin(), symbols.begin() + b));
    }
    return out;
}

std::uint64_t Pattern::border_mask() const {
    if (length() > 63) throw std::invalid_argument("border_mask requires pattern length <= 63");
    std::uint64_t mask = 0;
    for (int b : border_lengths_) mask |= std::uint64_t{1} << b;
    return mask;
}

std::vector<int> find_occurrences(const Word& w, const Pattern& p) {
    std::vector<int> out;
    const int l = p.length();
    const auto& fail = p.failure();
    int state = 0;
    for (int i = 0; i < w.length(); ++i) {
        Symbol c = w[i];
        while (state > 0 && (state == l || p.word()[state] != c))
            state = fail[static_cast<std::size_t>(state) - 1];
        if (p.word()[state] == c) ++state;
        if (state == l) out.push_back(i - l + 1);
    }
    return out;
}

bool contains(const Word& w, const Pattern& p) {
    const int l = p.length();
    const auto& fail = p.failure();
    int state = 0;
    for (int i = 0; i < w.length(); ++i) {
        Symbol c = w[i];
        while (state > 0 && p.word()[state] != c)
            state = fail[static_cast<std::size_t>(state) - 1];
        if (p.word()[state] == c) ++state;
        if (state == l) return true;
    }
    return false;
}

PrefixAutomaton::PrefixAutomaton(const Pattern& p)
    : length_(p.length()), alphabet_size_(p.alphabet_size()) {
    const int l = length_;
    const int k = alphabet_size_;
    delta_.assign(static_cast<std::size_t>(l + 1) * k, 0);
    for (int state = 0; state < l; ++state) {
        for (int c = 0; c < k; ++c) {
            if (static_cast<Symbol>(c) == p.word()[state]) {
                delta_[static_cast<std::size_t>(state) * k + c] = state + 1;
            } else if (state == 0) {
                delta_[static_cast<std::size_t>(state) * k + c] = 0;
            } else {
                const int b = p.failure()[static_cast<std::size_t>(state) - 1];
                delta_[static_cast<std::size_t>(state) * k + c] = delta_[static_cast<std::size_t>(b) * k + c];
            }
        }
    }
    // Row l continues the scan past a full match (overlap-aware).
    const int b = p.failure()[static_cast<std::size_t>(l) - 1];
    for (int c = 0; c < k; ++c)
        delta_[static_cast<std::size_t>(l) * k + c] = delta_[static_cast<std::size_t>(b) * k + c];
}

}  // namespace avoidance
