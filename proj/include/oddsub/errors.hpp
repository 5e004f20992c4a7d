#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oddsub {

struct InvalidEdgeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t offset)
        : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
    size_t byte_offset;
};

struct TooLargeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Raised when the constructive engine cannot reduce a graph that the
// guarantee says must be reducible; carries the instance for triage.
struct ProofGapError : std::runtime_error {
    explicit ProofGapError(std::string g6)
        : std::runtime_error("no reduction rule applies; irreducible instance: " + g6),
          graph6(std::move(g6)) {}
    std::string graph6;
};

}  // namespace oddsub
