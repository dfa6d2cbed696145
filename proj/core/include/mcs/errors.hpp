#ifndef MCS_ERRORS_HPP
#define MCS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mcs {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad ids, duplicate endpoints, parse failures).
class InputError : public Error {
public:
    using Error::Error;
};

/// The graph is disconnected where nearest-neighbor semantics need a single component.
class DisconnectedError : public Error {
public:
    using Error::Error;
};

/// An exhaustive solver was asked to run past its size guard.
class SizeError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold for its arguments.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The cover search finished without an accepting chain.
class NoCoverFound : public Error {
public:
    using Error::Error;
};

}  // namespace mcs

#endif
