#pragma once

#include <stdexcept>
#include <string>

namespace rlab {

// Malformed or out-of-contract input (dimension mismatch, bad index, bad config).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The requested exact computation is larger than the configured budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A learner was fed data no concept of its class can explain.
struct RealizabilityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An oracle query broke the locality / anchoring rules of the model.
struct ProtocolViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rlab
