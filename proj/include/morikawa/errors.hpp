#pragma once

#include <stdexcept>
#include <string>

namespace morikawa {

// Input outside an operation's stated domain (bad radius, angle, radicand, ...).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// An iterative solver failed to bracket or converge. For valid inputs this
// signals a tolerance misconfiguration or an internal bug, not a user error.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// classify() was handed a pose whose clearance to the line or a circle
// exceeds the contact tolerance.
struct NotInscribed : std::runtime_error {
    explicit NotInscribed(const std::string& what) : std::runtime_error(what) {}
};

// Zero polynomial where a nonzero one is required (resultants).
struct DegenerateInput : std::invalid_argument {
    explicit DegenerateInput(const std::string& what) : std::invalid_argument(what) {}
};

// Specialization lost the expected degree (leading coefficient vanished).
struct DegreeDrop : std::runtime_error {
    explicit DegreeDrop(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyHistogram : std::invalid_argument {
    explicit EmptyHistogram(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace morikawa
