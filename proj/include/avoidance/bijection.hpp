#pragma once

#include <cstdint>
#include <vector>

#include "avoidance/enumerate.hpp"
#include "avoidance/pattern.hpp"

namespace avoidance {

// Two distinct equal-length patterns over the same alphabet. Equal lengths
// keep replacement windows length-preserving; p = q would make the leftmost
// scan loop forever, so it is rejected at construction.
class PatternPair {
public:
    PatternPair(Pattern p, Pattern q);

    const Pattern& p() const { return p_; }
    const Pattern& q() const { return q_; }
    // Compiled reverses, used by the barred scan functions.
    const Pattern& p_reversed() const { return p_rev_; }
    const Pattern& q_reversed() const { return q_rev_; }

    int length() const { return p_.length(); }
    int alphabet_size() const { return p_.alphabet_size(); }

    // True iff the proper borders of p and q coincide as word sets; the
    // hypothesis under which the leftmost-replacement fixpoint is bijective.
    bool same_proper_borders() const { return same_proper_borders_; }

private:
    Pattern p_, q_, p_rev_, q_rev_;
    bool same_proper_borders_;
};

enum class ScanDirection { left, right };

struct ReplacementStep {
    ScanDirection dir;
    int start;  // window [start, start + l)
    Word before;
    Word after;
};

struct ReplacementTrace {
    std::vector<ReplacementStep> steps;

    std::size_t step_count() const { return steps.size(); }
};

struct PhiResult {
    Word word;
    ReplacementTrace trace;
};

// One scan step. Identity when the scanned pattern is absent.
Word single_scan_l(const Word& w, const PatternPair& pair);  // leftmost q -> p
Word single_scan_r(const Word& w, const PatternPair& pair);  // rightmost p -> q

// Fixpoints of the scan functions. max_steps = 0 selects the theoretical
// lexicographic bound k^n (saturated); exceeding the limit throws
// StepLimitExceeded. Each restarts its scan from the word boundary after
// every replacement.
//
// phi_l maps A_n(p) into A_n(q) and phi_r maps A_n(q) into A_n(p); both are
// callable on any word (the result merely contains no scanned pattern).
PhiResult phi_l(const Word& w, const PatternPair& pair, std::uint64_t max_steps = 0);
PhiResult phi_r(const Word& w, const PatternPair& pair, std::uint64_t max_steps = 0);
// Reversed-pattern variants: phi_l_bar replaces leftmost reverse(p) with
// reverse(q) until none remain; phi_r_bar replaces rightmost reverse(q) with
// reverse(p). They conjugate phi_r and phi_l under word reversal.
PhiResult phi_l_bar(const Word& w, const PatternPair& pair, std::uint64_t max_steps = 0);
PhiResult phi_r_bar(const Word& w, const PatternPair& pair, std::uint64_t max_steps = 0);

// Replays trace steps on w: each step's before word must equal the current
// word and may only be edited from its window start onward. Throws
// std::logic_error on any mismatch.
Word replay_trace(const Word& w, const ReplacementTrace& trace);

struct OccurrenceBalance {
    std::size_t q_in_input = 0;  // overlapping q occurrences in w
    std::size_t p_in_image = 0;  // overlapping p occurrences in phi_l(w)
};

OccurrenceBalance occurrence_balance(const Word& w, const PatternPair& pair);

struct Collision {
    Word image;
    std::vector<Word> preimages;  // ascending, at least two
};

struct BijectionReport {
    int n = 0;
    std::uint64_t domain_size = 0;    // |A_n(p)|
    std::uint64_t codomain_size = 0;  // |A_n(q)|
    bool bijective = false;           // image is exactly A_n(q), no collisions
    std::vector<Collision> collisions;
    std::vector<Word> image_gaps;          // words of A_n(q) never hit
    std::vector<Word> round_trip_failures; // w with phi_r(phi_l(w)) != w
};

// Applies phi_l to every w in A_n(p) and checks image coverage, injectivity,
// and the pointwise round trip through phi_r. Violations are report content,
// not errors. Deterministic for either Exec mode.
BijectionReport verify_bijection(const PatternPair& pair, int n,
                                 const EnumerationBudget& budget = {},
                                 Exec mode = Exec::parallel);

struct ConjugationReport {
    int n = 0;
    std::uint64_t checked_q_avoiders = 0;
    std::uint64_t checked_p_avoiders = 0;
    // v in A_n(q) with phi_r(v) != reverse(phi_l_bar(reverse(v)))
    std::vector<Word> phi_r_violations;
    // w in A_n(p) with phi_l(w) != reverse(phi_r_bar(reverse(w)))
    std::vector<Word> phi_l_violations;

    bool ok() const { return phi_r_violations.empty() && phi_l_violations.empty(); }
};

// Checks both reversal-conjugation identities pointwise over A_n(q) and
// A_n(p).
ConjugationReport verify_conjugation(const PatternPair& pair, int n,
                                     const EnumerationBudget& budget = {},
                                     Exec mode = Exec::parallel);

}  // namespace avoidance
