#pragma once

#include <stdexcept>

namespace avoidance {

// Enumeration would visit more words than the configured budget allows.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A replacement fixpoint did not settle within the step limit. The default
// limit is the theoretical lexicographic bound k^n, so hitting it indicates
// a usage bug (e.g. a caller bypassing PatternPair validation).
struct StepLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace avoidance
