#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mbt {

// Base class for all failures of a mathematical precondition. The CLI maps
// these to exit code 1; anything else escaping is a bug.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ZeroCurveError : public Error {
public:
    ZeroCurveError() : Error("curve is (0,0)") {}
};

class NotReducedError : public Error {
public:
    explicit NotReducedError(const std::string& what) : Error(what) {}
};

class NotOneSidedSlopeError : public Error {
public:
    explicit NotOneSidedSlopeError(const std::string& what) : Error(what) {}
};

class NotTreeVertexError : public Error {
public:
    explicit NotTreeVertexError(const std::string& what) : Error(what) {}
};

class NoParentsError : public Error {
public:
    explicit NoParentsError(const std::string& what) : Error(what) {}
};

class RootHasNoParentError : public Error {
public:
    RootHasNoParentError() : Error("0:1 is the root and has no parent") {}
};

class BoundaryIncompressibleError : public Error {
public:
    BoundaryIncompressibleError()
        : Error("slope 0/1 bounds a meridian disc; nothing to compress") {}
};

class NotZ2CompatibleError : public Error {
public:
    explicit NotZ2CompatibleError(const std::string& what) : Error(what) {}
};

class NotUnimodularError : public Error {
public:
    explicit NotUnimodularError(const std::string& what) : Error(what) {}
};

class NotPrimitiveError : public Error {
public:
    explicit NotPrimitiveError(const std::string& what) : Error(what) {}
};

class BoundsTooLargeError : public Error {
public:
    explicit BoundsTooLargeError(const std::string& what) : Error(what) {}
};

class InvalidBoundsError : public Error {
public:
    explicit InvalidBoundsError(const std::string& what) : Error(what) {}
};

// Text input that does not match the documented grammar. Carries the byte
// offset of the first offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace mbt
