#ifndef DIAMCRIT_ERRORS_HPP
#define DIAMCRIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diamcrit {

// Three error families, matching the CLI exit-code contract:
//   UsageError         -> exit 1 (malformed input, bad parameters, IO)
//   VerdictError       -> exit 2 (the input fails a required property)
//   InvariantViolation -> exit 3 (a statement that is proven to hold for all
//                                 valid inputs failed at runtime; always a bug
//                                 or a violated precondition upstream)

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfRange : UsageError {
    using UsageError::UsageError;
};

struct SelfLoop : UsageError {
    using UsageError::UsageError;
};

struct ParseError : UsageError {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t byte_offset)
        : UsageError(what + " (byte " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
};

struct BadParams : UsageError {
    using UsageError::UsageError;
};

struct TooLarge : UsageError {
    using UsageError::UsageError;
};

struct NotATriangle : UsageError {
    using UsageError::UsageError;
};

struct VerdictError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionFailed : VerdictError {
    using VerdictError::VerdictError;
};

struct NotDiameterCritical : VerdictError {
    using VerdictError::VerdictError;
};

struct SamplingExhausted : VerdictError {
    using VerdictError::VerdictError;
};

struct NotFound : VerdictError {
    using VerdictError::VerdictError;
};

struct Unreachable : VerdictError {
    using VerdictError::VerdictError;
};

struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct CountingViolation : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

struct ChargingViolation : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

struct TheoremViolation : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

struct LemmaViolation : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

struct BoundViolation : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

struct InternalInvariant : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

}  // namespace diamcrit

#endif  // DIAMCRIT_ERRORS_HPP
