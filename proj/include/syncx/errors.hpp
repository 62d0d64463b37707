#pragma once

#include <stdexcept>
#include <string>

namespace syncx {

/// Invalid automaton table, family parameter or serialized document.
class ConstructionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (e.g. extending the empty set).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The request exceeds a configured size bound.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Two independent computations disagreed. Always an implementation bug.
class ConsistencyFault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace syncx
