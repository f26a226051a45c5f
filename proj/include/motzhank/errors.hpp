#pragma once

#include <stdexcept>
#include <string>

namespace motzhank {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class NotDivisible : public Error {
public:
    NotDivisible() : Error("no exact quotient exists") {}
};

class DuplicateNode : public Error {
public:
    DuplicateNode() : Error("interpolation nodes are not pairwise distinct") {}
};

class NonIntegral : public Error {
public:
    explicit NonIntegral(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

class TableTooSmall : public Error {
public:
    explicit TableTooSmall(const std::string& what) : Error(what) {}
};

class InsufficientTerms : public Error {
public:
    InsufficientTerms(std::size_t have, std::size_t need)
        : Error("insufficient terms: have " + std::to_string(have) + ", need " +
                std::to_string(need)) {}
};

class InconsistentFits : public Error {
public:
    explicit InconsistentFits(const std::string& what) : Error(what) {}
};

class NetworkUnavailable : public Error {
public:
    explicit NetworkUnavailable(const std::string& what) : Error(what) {}
};

class UnknownSequence : public Error {
public:
    explicit UnknownSequence(const std::string& id) : Error("unknown sequence: " + id) {}
};

class NoOverlap : public Error {
public:
    NoOverlap() : Error("computed terms do not overlap the b-file") {}
};

} // namespace motzhank
