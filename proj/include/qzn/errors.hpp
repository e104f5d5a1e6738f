#pragma once

#include <stdexcept>
#include <string>

namespace qzn {

/// A register would exceed the configured qubit capacity (the amplitude
/// array would not fit). Thrown by tensor products and circuit builders.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Conditioning on a measurement outcome whose probability is zero.
class DegenerateMeasurementError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Pearson correlation against a zero-variance vector. The coefficient is
/// undefined there; callers decide whether to skip or abort.
class UndefinedCorrelationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed input document (syntax level). Message carries position info.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a semantic rule (membership out of range,
/// ragged rows, duplicate labels). Message names the offending cell.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qzn
