#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace avoidance {

// Symbols are the integers 0..k-1. Integer order on symbols induces the
// lexicographic order on words of equal length.
using Symbol = std::uint8_t;

constexpr int kMaxAlphabet = 256;

struct Alphabet {
    int size = 2;

    bool contains(Symbol s) const { return static_cast<int>(s) < size; }
};

// Immutable finite word. The empty word is valid.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

    // Digit string ("0110") for alphabets of size <= 10, comma-separated
    // integers otherwise. Throws std::invalid_argument on bad symbols.
    static Word parse(std::string_view text, int alphabet_size);

    int length() const { return static_cast<int>(symbols_.size()); }
    bool empty() const { return symbols_.empty(); }
    Symbol operator[](int i) const { return symbols_[static_cast<std::size_t>(i)]; }
    std::span<const Symbol> symbols() const { return symbols_; }

    int max_symbol() const;  // -1 for the empty word

    // Inverse of parse for the same alphabet size.
    std::string str(int alphabet_size) const;

    auto operator<=>(const Word&) const = default;

private:
    std::vector<Symbol> symbols_;
};

Word reverse(const Word& w);

// Bijection on the symbols of a fixed alphabet.
class LetterPermutation {
public:
    // image[s] = sigma(s); throws std::invalid_argument unless a bijection.
    explicit LetterPermutation(std::vector<Symbol> image);
    static LetterPermutation identity(int alphabet_size);

    int alphabet_size() const { return static_cast<int>(image_.size()); }
    Symbol operator()(Symbol s) const { return image_[s]; }
    LetterPermutation inverse() const;
    Word apply(const Word& w) const;

    bool operator==(const LetterPermutation&) const = default;

private:
    std::vector<Symbol> image_;
};

inline Word permute_letters(const Word& w, const LetterPermutation& sigma) {
    return sigma.apply(w);
}

}  // namespace avoidance
