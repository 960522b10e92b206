#pragma once

#include <stdexcept>
#include <string>

namespace tsgen {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller passed parameters outside the supported domain (bad n, odd lambda, ...).
struct InvalidParams : Error {
    using Error::Error;
};

// A block list that must be duplicate-free contains a repeated block.
struct DuplicateBlocks : Error {
    using Error::Error;
};

// A bounded search ran out of candidates without finding a witness.
struct SearchExhausted : Error {
    using Error::Error;
};

// An internal invariant of the construction failed to materialize.
struct ConstructionFailure : Error {
    using Error::Error;
};

// A coordinate or index lies outside its documented range.
struct IndexOutOfRange : Error {
    using Error::Error;
};

// No path with the requested endpoints exists.
struct NoPath : Error {
    using Error::Error;
};

// A requested endpoint is not a vertex of the graph in question.
struct InvalidEndpoint : Error {
    using Error::Error;
};

// A lookup (block index, file section, ...) found nothing.
struct NotFound : Error {
    using Error::Error;
};

// An oracle exceeded its node budget.
struct Timeout : Error {
    using Error::Error;
};

} // namespace tsgen
