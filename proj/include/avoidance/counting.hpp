#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "avoidance/enumerate.hpp"
#include "avoidance/pattern.hpp"
#include "avoidance/poly.hpp"

namespace avoidance {

enum class CountMethod { gf, recurrence, automaton, brute };

std::string_view to_string(CountMethod m);
std::optional<CountMethod> parse_count_method(std::string_view name);

// s(0..N) with s(n) = |A_n(p)|, the number of length-n words over the
// pattern's alphabet containing no occurrence of p.
struct CountSeries {
    std::vector<BigInt> counts;
    CountMethod method = CountMethod::gf;

    int max_n() const { return static_cast<int>(counts.size()) - 1; }
    bool same_counts(const CountSeries& o) const { return counts == o.counts; }
};

// The rational generating function of (|A_n(p)|): with B(x) the border
// polynomial sum of x^(l-i) over border lengths i, the series equals
// B(x) / ((1-kx)B(x) + x^l).
RationalGF avoidance_gf(const Pattern& p);

// Exact series coefficients up to degree max_n via the linear recurrence the
// denominator induces. Throws std::domain_error if the denominator's constant
// term is zero or a coefficient fails to be an integer.
CountSeries gf_series(const RationalGF& gf, int max_n);

// The explicit border-set recurrence
//   s(n) = k s(n-1) - s(n-l) + sum over proper border lengths i of
//          (k s(n+i-l-1) - s(n+i-l)),
// applied for n >= 2l with s(0..2l-1) seeded from the generating function.
// The recurrence is also evaluated on the overlap region [l, 2l-1]; a
// mismatch with the seed values throws std::logic_error.
CountSeries recurrence_counts(const Pattern& p, int max_n);

// Independent validation path: walks counted in the KMP prefix automaton with
// the full-match state removed (l live states).
CountSeries automaton_counts(const Pattern& p, int max_n);

// Full enumeration of all k^n words per n. OpenMP-parallel over the word
// space by default; Exec::serial runs the identical kernel on one chunk.
CountSeries brute_force_counts(const Pattern& p, int max_n,
                               const EnumerationBudget& budget = {},
                               Exec mode = Exec::parallel);

// Index where the two avoidance series first differ, or nullopt when they
// are identical (equal border length sets). For b(p) != b(q) this is
//   min(|p|, |q|)                     when |p| != |q|,
//   2|p| - max(b(p) symdiff b(q))     when |p| = |q|.
std::optional<int> first_difference_index(const Pattern& p, const Pattern& q);

// True iff b(p) = b(q).
bool are_avoidant_equivalent(const Pattern& p, const Pattern& q);

}  // namespace avoidance
