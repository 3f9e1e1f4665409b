#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weitz {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in polynomial rings with different (n, k), or a variable
/// falls outside the declared ring.
class AmbientMismatch : public Error {
public:
    using Error::Error;
};

class UnknownVariable : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : Error("syntax error at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// No generator family is known for this k.
class UnsupportedK : public Error {
public:
    using Error::Error;
};

class InvalidKey : public Error {
public:
    using Error::Error;
};

class NonHomogeneous : public Error {
public:
    using Error::Error;
};

class NotInKernel : public Error {
public:
    using Error::Error;
};

class NotInSpan : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class NegativeOrder : public Error {
public:
    using Error::Error;
};

/// A polynomial is not homogeneous in the covariant variables CX, CY.
class NonHomogeneousOrder : public Error {
public:
    using Error::Error;
};

} // namespace weitz
