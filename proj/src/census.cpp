#include "avoidance/census.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstring>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace avoidance {

namespace {

std::uint64_t pairs_among(std::uint64_t n) { return n * (n - 1) / 2; }

struct Dsu {
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> size;

    explicit Dsu(std::size_t n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), std::uint32_t{0});
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

std::uint64_t reversed_code(std::span<const Symbol> w, int k) {
    std::uint64_t code = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        code = code * static_cast<std::uint64_t>(k) + *it;
    return code;
}

// Relabels by order of first occurrence; the canonical member of the
// letter-permutation orbit.
std::uint64_t canonical_code(std::span<const Symbol> w, int k) {
    std::array<int, kMaxAlphabet> relabel;
    relabel.fill(-1);
    int next = 0;
    std::uint64_t code = 0;
    for (Symbol s : w) {
        if (relabel[s] < 0) relabel[s] = next++;
        code = code * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(relabel[s]);
    }
    return code;
}

int max_proper_border(std::uint64_t mask, int length) {
    const std::uint64_t proper = mask & ~(std::uint64_t{1} << length);
    return proper == 0 ? 0 : std::bit_width(proper) - 1;
}

std::uint64_t pow_u64(int base, int exp) {
    auto value = checked_pow(static_cast<std::uint64_t>(base), static_cast<unsigned>(exp));
    if (!value) throw std::overflow_error("power does not fit in 64 bits");
    return *value;
}

// sigma with sigma(from) = to pointwise, unconstrained symbols filled in
// ascending order.
LetterPermutation derive_sigma(const Word& from, const Word& to, int k) {
    std::vector<int> image(static_cast<std::size_t>(k), -1);
    std::vector<bool> used(static_cast<std::size_t>(k), false);
    for (int i = 0; i < from.length(); ++i) {
        const Symbol a = from[i];
        const Symbol b = to[i];
        if (image[a] >= 0) {
            if (image[a] != static_cast<int>(b))
                throw std::logic_error("no letter permutation maps the words onto each other");
        } else {
            if (used[b]) throw std::logic_error("no letter permutation maps the words onto each other");
            image[a] = static_cast<int>(b);
            used[b] = true;
        }
    }
    int next_free = 0;
    std::vector<Symbol> full(static_cast<std::size_t>(k));
    for (int s = 0; s < k; ++s) {
        if (image[s] >= 0) {
            full[static_cast<std::size_t>(s)] = static_cast<Symbol>(image[s]);
        } else {
            while (used[next_free]) ++next_free;
            full[static_cast<std::size_t>(s)] = static_cast<Symbol>(next_free);
            used[next_free] = true;
        }
    }
    return LetterPermutation(std::move(full));
}

}  // namespace

Fraction Fraction::of(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw std::invalid_argument("fraction denominator must be nonzero");
    const std::uint64_t g = std::gcd(num, den);
    return Fraction{num / g, den / g};
}

std::string Fraction::decimal(int places) const {
    if (places < 0) throw std::invalid_argument("decimal places must be nonnegative");
    std::uint64_t integer = num / den;
    unsigned __int128 rem = num % den;
    std::string digits;
    digits.reserve(static_cast<std::size_t>(places));
    for (int i = 0; i < places; ++i) {
        rem *= 10;
        digits.push_back(static_cast<char>('0' + static_cast<int>(rem / den)));
        rem %= den;
    }
    // Round half up on the remainder, carrying through the digit string.
    if (2 * rem >= den) {
        int i = places - 1;
        for (; i >= 0 && digits[static_cast<std::size_t>(i)] == '9'; --i)
            digits[static_cast<std::size_t>(i)] = '0';
        if (i >= 0)
            ++digits[static_cast<std::size_t>(i)];
        else
            ++integer;
    }
    std::string out = std::to_string(integer);
    if (places > 0) {
        out.push_back('.');
        out += digits;
    }
    return out;
}

ClosureGraph::ClosureGraph(int length, int alphabet_size, const EnumerationBudget& budget,
                           Exec mode)
    : length_(length), alphabet_size_(alphabet_size) {
    if (length < 1) throw std::invalid_argument("pattern length must be positive");
    if (length > 62) throw std::invalid_argument("pattern length exceeds the 62-bit border mask");
    if (alphabet_size < 1 || alphabet_size > kMaxAlphabet)
        throw std::invalid_argument("alphabet size out of range");
    total_ = require_within_budget(alphabet_size, length, budget);
    if (total_ > ~std::uint32_t{0})
        throw std::invalid_argument("pattern space too large for the census engine");

    masks_.assign(total_, 0);
    std::vector<std::uint64_t> rev(total_);
    std::vector<std::uint64_t> canon(total_);

    run_chunks(total_, mode, [&](int, std::uint64_t begin, std::uint64_t end) {
        std::vector<Symbol> w(static_cast<std::size_t>(length_));
        for (std::uint64_t code = begin; code < end; ++code) {
            decode_word(code, length_, alphabet_size_, w.data());
            const Pattern pattern = Pattern::compile(Word{std::vector<Symbol>(w)}, alphabet_size_);
            masks_[code] = pattern.border_mask();
            rev[code] = reversed_code(w, alphabet_size_);
            canon[code] = canonical_code(w, alphabet_size_);
        }
    });

    std::map<std::uint64_t, std::vector<std::uint32_t>> groups;
    for (std::uint64_t code = 0; code < total_; ++code)
        groups[masks_[code]].push_back(static_cast<std::uint32_t>(code));

    const std::uint64_t borderless_mask = std::uint64_t{1} << length_;
    const std::uint64_t one_l_mask = borderless_mask | 2;

    Dsu dsu(total_);
    for (const auto& [mask, members] : groups) {
        equivalent_pairs_ += pairs_among(members.size());
        if (mask == borderless_mask) borderless_count_ = members.size();
        if (length_ > 1 && mask == one_l_mask) profile_one_l_count_ = members.size();

        // Codes ascend in lexicographic order, so equal prefixes of length
        // max_proper_border form contiguous runs under integer division.
        const std::uint64_t divisor =
            pow_u64(alphabet_size_, length_ - max_proper_border(mask, length_));
        std::size_t i = 0;
        while (i < members.size()) {
            std::size_t j = i;
            while (j < members.size() && members[j] / divisor == members[i] / divisor) ++j;
            phi_l_pairs_ += pairs_among(j - i);
            for (std::size_t m = i + 1; m < j; ++m) dsu.unite(members[i], members[m]);
            i = j;
        }

        for (std::uint32_t code : members) {
            assert(masks_[rev[code]] == mask);
            assert(masks_[canon[code]] == mask);
            dsu.unite(code, static_cast<std::uint32_t>(rev[code]));
            dsu.unite(code, static_cast<std::uint32_t>(canon[code]));
        }
    }

    roots_.resize(total_);
    std::vector<std::uint64_t> component_size(total_, 0);
    for (std::uint64_t code = 0; code < total_; ++code) {
        roots_[code] = dsu.find(static_cast<std::uint32_t>(code));
        ++component_size[roots_[code]];
    }
    for (std::uint64_t size : component_size) composition_pairs_ += pairs_among(size);
}

std::vector<std::uint64_t> ClosureGraph::group_of(std::uint64_t mask) const {
    std::vector<std::uint64_t> members;
    for (std::uint64_t code = 0; code < total_; ++code)
        if (masks_[code] == mask) members.push_back(code);
    return members;
}

namespace {

void check_member(const ClosureGraph& graph, const Pattern& pattern) {
    if (pattern.length() != graph.length() || pattern.alphabet_size() != graph.alphabet_size())
        throw std::invalid_argument("pattern does not belong to this closure graph");
}

}  // namespace

bool ClosureGraph::connected(const Word& p, const Word& q) const {
    const Pattern pp = Pattern::compile(p, alphabet_size_);
    const Pattern pq = Pattern::compile(q, alphabet_size_);
    check_member(*this, pp);
    check_member(*this, pq);
    return roots_[encode_word(p, alphabet_size_)] == roots_[encode_word(q, alphabet_size_)];
}

std::vector<std::pair<Word, Word>> ClosureGraph::unexplained_pairs() const {
    std::map<std::uint64_t, std::vector<std::uint64_t>> groups;
    for (std::uint64_t code = 0; code < total_; ++code) groups[masks_[code]].push_back(code);

    std::vector<std::pair<Word, Word>> out;
    for (const auto& [mask, members] : groups) {
        (void)mask;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (roots_[members[i]] != roots_[members[j]])
                    out.emplace_back(decode_word(members[i], length_, alphabet_size_),
                                     decode_word(members[j], length_, alphabet_size_));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<ClosureGraph::Step>> ClosureGraph::chain(const Word& p,
                                                                   const Word& q) const {
    const Pattern pp = Pattern::compile(p, alphabet_size_);
    const Pattern pq = Pattern::compile(q, alphabet_size_);
    check_member(*this, pp);
    check_member(*this, pq);
    const std::uint64_t source = encode_word(p, alphabet_size_);
    const std::uint64_t target = encode_word(q, alphabet_size_);
    if (roots_[source] != roots_[target]) return std::nullopt;
    if (source == target) return std::vector<Step>{};

    const std::uint64_t mask = masks_[source];
    const std::vector<std::uint64_t> members = group_of(mask);
    std::unordered_map<std::uint64_t, std::size_t> index;
    index.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = i;

    const std::uint64_t divisor =
        pow_u64(alphabet_size_, length_ - max_proper_border(mask, length_));
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> orbits;
    std::vector<std::uint64_t> rev(members.size());
    std::vector<std::uint64_t> canon(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        const Word w = decode_word(members[i], length_, alphabet_size_);
        rev[i] = reversed_code(w.symbols(), alphabet_size_);
        canon[i] = canonical_code(w.symbols(), alphabet_size_);
        buckets[members[i] / divisor].push_back(i);
        orbits[canon[i]].push_back(i);
    }

    constexpr std::size_t kUnvisited = ~std::size_t{0};
    std::vector<std::size_t> parent(members.size(), kUnvisited);
    std::vector<Step::Kind> via(members.size(), Step::Kind::replacement);
    std::deque<std::size_t> queue;
    const std::size_t start = index.at(source);
    const std::size_t goal = index.at(target);
    parent[start] = start;
    queue.push_back(start);
    while (!queue.empty() && parent[goal] == kUnvisited) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        auto visit = [&](std::size_t next, Step::Kind kind) {
            if (parent[next] != kUnvisited) return;
            parent[next] = cur;
            via[next] = kind;
            queue.push_back(next);
        };
        for (std::size_t next : buckets.at(members[cur] / divisor))
            if (next != cur) visit(next, Step::Kind::replacement);
        for (std::size_t next : orbits.at(canon[cur]))
            if (next != cur) visit(next, Step::Kind::relabeling);
        if (auto it = index.find(rev[cur]); it != index.end() && it->second != cur)
            visit(it->second, Step::Kind::reversal);
    }
    if (parent[goal] == kUnvisited) return std::nullopt;  // unreachable: roots matched

    std::vector<Step> steps;
    for (std::size_t cur = goal; cur != start; cur = parent[cur]) {
        const Word from = decode_word(members[parent[cur]], length_, alphabet_size_);
        const Word to = decode_word(members[cur], length_, alphabet_size_);
        LetterPermutation sigma = via[cur] == Step::Kind::relabeling
                                      ? derive_sigma(from, to, alphabet_size_)
                                      : LetterPermutation::identity(alphabet_size_);
        steps.push_back(Step{via[cur], from, to, std::move(sigma)});
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

Word apply_chain_step(const ClosureGraph::Step& step, const Word& w) {
    const int k = step.sigma.alphabet_size();
    switch (step.kind) {
        case ClosureGraph::Step::Kind::replacement: {
            PatternPair pair(Pattern::compile(step.from, k), Pattern::compile(step.to, k));
            return phi_l(w, pair).word;
        }
        case ClosureGraph::Step::Kind::reversal:
            return reverse(w);
        case ClosureGraph::Step::Kind::relabeling:
            return step.sigma.apply(w);
    }
    throw std::logic_error("unknown chain step kind");
}

CensusReport census(int length, int alphabet_size, const EnumerationBudget& budget, Exec mode) {
    ClosureGraph graph(length, alphabet_size, budget, mode);
    CensusReport report;
    report.pattern_length = length;
    report.alphabet_size = alphabet_size;
    report.phi_l_pairs = graph.phi_l_pairs();
    report.composition_pairs = graph.composition_pairs();
    report.equivalent_pairs = graph.equivalent_pairs();
    report.unexplained = graph.unexplained_pairs();
    const std::uint64_t total = pow_u64(alphabet_size, length);
    report.borderless_fraction = Fraction::of(graph.borderless_count(), total);
    report.profile_one_l_fraction = Fraction::of(graph.profile_one_l_count(), total);
    return report;
}

std::vector<std::pair<Word, Word>> unexplained_pairs(int length, int alphabet_size,
                                                     const EnumerationBudget& budget, Exec mode) {
    return ClosureGraph(length, alphabet_size, budget, mode).unexplained_pairs();
}

std::pair<Fraction, Fraction> borderless_stats(int length, int alphabet_size,
                                               const EnumerationBudget& budget, Exec mode) {
    if (length < 1) throw std::invalid_argument("pattern length must be positive");
    if (alphabet_size < 1 || alphabet_size > kMaxAlphabet)
        throw std::invalid_argument("alphabet size out of range");
    const std::uint64_t total = require_within_budget(alphabet_size, length, budget);

    const int workers = worker_count(mode);
    std::vector<std::uint64_t> borderless(static_cast<std::size_t>(workers), 0);
    std::vector<std::uint64_t> one_l(static_cast<std::size_t>(workers), 0);
    run_chunks(total, mode, [&](int slot, std::uint64_t begin, std::uint64_t end) {
        std::vector<Symbol> w(static_cast<std::size_t>(length));
        for (std::uint64_t code = begin; code < end; ++code) {
            decode_word(code, length, alphabet_size, w.data());
            const Pattern pattern = Pattern::compile(Word{std::vector<Symbol>(w)}, alphabet_size);
            const auto& borders = pattern.border_lengths();
            if (borders.size() == 1) ++borderless[static_cast<std::size_t>(slot)];
            if (length > 1 && borders.size() == 2 && borders.front() == 1)
                ++one_l[static_cast<std::size_t>(slot)];
        }
    });

    const std::uint64_t n_borderless = std::accumulate(borderless.begin(), borderless.end(),
                                                       std::uint64_t{0});
    const std::uint64_t n_one_l = std::accumulate(one_l.begin(), one_l.end(), std::uint64_t{0});
    return {Fraction::of(n_borderless, total), Fraction::of(n_one_l, total)};
}

PairClassification classify_pair(const Pattern& p, const Pattern& q,
                                 const EnumerationBudget& budget, Exec mode) {
    PatternPair pair(p, q);  // validates the pairing
    PairClassification out;
    out.equivalent = p.border_lengths() == q.border_lengths();
    out.phi_l_bijective = pair.same_proper_borders();
    ClosureGraph graph(p.length(), p.alphabet_size(), budget, mode);
    out.composition_bijective = graph.connected(p.word(), q.word());
    return out;
}

}  // namespace avoidance
