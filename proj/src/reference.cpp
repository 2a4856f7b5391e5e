#include "avoidance/reference.hpp"

#include <stdexcept>

namespace avoidance::reference {

namespace {

bool matches_at(const Word& w, const Word& p, int at) {
    for (int i = 0; i < p.length(); ++i)
        if (w[at + i] != p[i]) return false;
    return true;
}

bool contains(const Word& w, const Word& p) {
    for (int at = 0; at + p.length() <= w.length(); ++at)
        if (matches_at(w, p, at)) return true;
    return false;
}

// Odometer increment over base-k digit vectors; false once it wraps.
bool next_word(std::vector<Symbol>& w, int alphabet_size) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (static_cast<int>(*it) + 1 < alphabet_size) {
            ++*it;
            return true;
        }
        *it = 0;
    }
    return false;
}

}  // namespace

std::vector<int> find_occurrences(const Word& w, const Word& p) {
    if (p.empty()) throw std::invalid_argument("pattern must be nonempty");
    std::vector<int> out;
    for (int at = 0; at + p.length() <= w.length(); ++at)
        if (matches_at(w, p, at)) out.push_back(at);
    return out;
}

std::vector<int> border_lengths(const Word& p) {
    if (p.empty()) throw std::invalid_argument("pattern must be nonempty");
    std::vector<int> out;
    for (int b = 1; b <= p.length(); ++b) {
        bool border = true;
        for (int i = 0; i < b; ++i)
            if (p[i] != p[p.length() - b + i]) {
                border = false;
                break;
            }
        if (border) out.push_back(b);
    }
    return out;
}

BigInt count_avoiding(const Word& p, int alphabet_size, int n) {
    if (n < 0) throw std::invalid_argument("word length must be nonnegative");
    BigInt count = 0;
    std::vector<Symbol> digits(static_cast<std::size_t>(n), 0);
    do {
        if (!contains(Word{std::vector<Symbol>(digits)}, p)) ++count;
    } while (next_word(digits, alphabet_size));
    return count;
}

CountSeries series(const Word& p, int alphabet_size, int max_n) {
    CountSeries out;
    out.method = CountMethod::brute;
    for (int n = 0; n <= max_n; ++n) out.counts.push_back(count_avoiding(p, alphabet_size, n));
    return out;
}

}  // namespace avoidance::reference
