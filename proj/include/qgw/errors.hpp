#pragma once

#include <stdexcept>
#include <string>

namespace qgw {

/// Malformed or out-of-contract input (bad shapes, non-finite entries, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An object failed a defining axiom (not a projector, not a quantum graph).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation called on an object in the wrong state (e.g. add_loops on a graph with loops).
class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class SingularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exhaustive search refused because the instance exceeds the search budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A 2x2 block of an ABC instance fits none of the strange-graph edge shapes.
class ClassificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two routes that must agree disagreed; indicates a convention or numerical bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace qgw
