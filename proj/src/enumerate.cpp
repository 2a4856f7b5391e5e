#include "avoidance/enumerate.hpp"

#include <stdexcept>

namespace avoidance {

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
    const std::uint64_t limit = std::uint64_t{1} << 63;
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > limit / base) return std::nullopt;
        result *= base;
        if (result > limit) return std::nullopt;
    }
    return result;
}

std::uint64_t require_within_budget(int alphabet_size, int n, const EnumerationBudget& budget) {
    if (n < 0) throw std::invalid_argument("word length must be non-negative");
    auto total = checked_pow(static_cast<std::uint64_t>(alphabet_size), static_cast<unsigned>(n));
    if (!total || *total > budget.max_words)
        throw BudgetExceeded("enumerating " + std::to_string(alphabet_size) + "^" +
                             std::to_string(n) + " words exceeds the budget of " +
                             std::to_string(budget.max_words));
    return *total;
}

void decode_word(std::uint64_t code, int n, int alphabet_size, Symbol* out) {
    const auto k = static_cast<std::uint64_t>(alphabet_size);
    for (int i = n - 1; i >= 0; --i) {
        out[i] = static_cast<Symbol>(code % k);
        code /= k;
    }
}

Word decode_word(std::uint64_t code, int n, int alphabet_size) {
    std::vector<Symbol> symbols(static_cast<std::size_t>(n));
    decode_word(code, n, alphabet_size, symbols.data());
    return Word(std::move(symbols));
}

std::uint64_t encode_word(const Word& w, int alphabet_size) {
    const auto k = static_cast<std::uint64_t>(alphabet_size);
    std::uint64_t code = 0;
    for (Symbol s : w.symbols()) code = code * k + s;
    return code;
}

}  // namespace avoidance
