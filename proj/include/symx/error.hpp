#pragma once

#include <stdexcept>
#include <string>

namespace symx {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument violated a documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A datum is malformed (wrong list lengths, out-of-range residues).
class StructuralError : public Error {
public:
    using Error::Error;
};

// A predicate was applied to a datum of the wrong orientation class.
class TypeMismatchError : public Error {
public:
    using Error::Error;
};

// No periodic map realizes the requested data.
class UnrealizableError : public Error {
public:
    using Error::Error;
};

// An exhaustive search was asked to exceed its configured bounds.
class BoundError : public Error {
public:
    using Error::Error;
};

} // namespace symx
