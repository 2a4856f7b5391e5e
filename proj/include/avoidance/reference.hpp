#pragma once

#include <vector>

#include "avoidance/counting.hpp"
#include "avoidance/word.hpp"

// Deliberately naive serial implementations. They share no code with the
// optimized kernels and serve as the independent oracle in tests and as the
// baseline in the benchmark harness.
namespace avoidance::reference {

// O(n*l) sliding-window comparison.
std::vector<int> find_occurrences(const Word& w, const Word& p);

// O(l^2) direct prefix/suffix comparison, ascending, includes |p|.
std::vector<int> border_lengths(const Word& p);

// |A_n(p)| by serial enumeration of all k^n words with the naive scanner.
BigInt count_avoiding(const Word& p, int alphabet_size, int n);

CountSeries series(const Word& p, int alphabet_size, int max_n);

}  // namespace avoidance::reference
