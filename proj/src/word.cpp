#include "avoidance/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace avoidance {

namespace {

void check_alphabet_size(int k) {
    if (k < 1 || k > kMaxAlphabet)
        throw std::invalid_argument("alphabet size must be in [1, " +
                                    std::to_string(kMaxAlphabet) + "], got " + std::to_string(k));
}

}  // namespace

Word Word::parse(std::string_view text, int alphabet_size) {
    check_alphabet_size(alphabet_size);
    std::vector<Symbol> symbols;
    if (alphabet_size <= 10) {
        symbols.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c >= '0' + alphabet_size)
                throw std::invalid_argument("bad symbol '" + std::string(1, c) +
                                            "' for alphabet of size " + std::to_string(alphabet_size));
            symbols.push_back(static_cast<Symbol>(c - '0'));
        }
    } else if (!text.empty()) {
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
            int value = -1;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0 || value >= alphabet_size)
                throw std::invalid_argument("bad symbol token '" + std::string(tok) + "'");
            symbols.push_back(static_cast<Symbol>(value));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    return Word(std::move(symbols));
}

int Word::max_symbol() const {
    int m = -1;
    for (Symbol s : symbols_) m = std::max(m, static_cast<int>(s));
    return m;
}

std::string Word::str(int alphabet_size) const {
    check_alphabet_size(alphabet_size);
    std::string out;
    if (alphabet_size <= 10) {
        out.reserve(symbols_.size());
        for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
    } else {
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(static_cast<int>(symbols_[i]));
        }
    }
    return out;
}

Word reverse(const Word& w) {
    std::vector<Symbol> symbols(w.symbols().begin(), w.symbols().end());
    std::reverse(symbols.begin(), symbols.end());
    return Word(std::move(symbols));
}

LetterPermutation::LetterPermutation(std::vector<Symbol> image) : image_(std::move(image)) {
    check_alphabet_size(static_cast<int>(image_.size()));
    std::vector<bool> seen(image_.size(), false);
    for (Symbol s : image_) {
        if (s >= image_.size() || seen[s])
            throw std::invalid_argument("letter permutation image is not a bijection");
        seen[s] = true;
    }
}

LetterPermutation LetterPermutation::identity(int alphabet_size) {
    check_alphabet_size(alphabet_size);
    std::vector<Symbol> image(static_cast<std::size_t>(alphabet_size));
    for (std::size_t s = 0; s < image.size(); ++s) image[s] = static_cast<Symbol>(s);
    return LetterPermutation(std::move(image));
}

LetterPermutation LetterPermutation::inverse() const {
    std::vector<Symbol> inv(image_.size());
    for (std::size_t s = 0; s < image_.size(); ++s) inv[image_[s]] = static_cast<Symbol>(s);
    return LetterPermutation(std::move(inv));
}

Word LetterPermutation::apply(const Word& w) const {
    std::vector<Symbol> symbols;
    symbols.reserve(static_cast<std::size_t>(w.length()));
    for (Symbol s : w.symbols()) {
        if (s >= image_.size())
            throw std::invalid_argument("word symbol outside the permutation's alphabet");
        symbols.push_back(image_[s]);
    }
    return Word(std::move(symbols));
}

}  // namespace avoidance
