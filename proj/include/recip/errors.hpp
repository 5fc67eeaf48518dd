#pragma once

#include <stdexcept>
#include <string>

namespace recip {

// Base of every domain error thrown by the library.  Messages name the
// violated precondition; the CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ZeroArgumentError : public Error {
public:
    explicit ZeroArgumentError(const std::string& what = "argument must be nonzero")
        : Error(what) {}
};

class UndefinedValuationError : public Error {
public:
    explicit UndefinedValuationError(const std::string& what = "valuation of zero is undefined")
        : Error(what) {}
};

class InvalidModulusError : public Error {
public:
    explicit InvalidModulusError(const std::string& what = "invalid modulus")
        : Error(what) {}
};

class NonCoprimeError : public Error {
public:
    explicit NonCoprimeError(const std::string& what = "arguments must be coprime")
        : Error(what) {}
};

class IncompatibleOrderError : public Error {
public:
    explicit IncompatibleOrderError(const std::string& what = "cyclotomic orders are incompatible")
        : Error(what) {}
};

class NonTransverseError : public Error {
public:
    explicit NonTransverseError(const std::string& what = "slopes must be pairwise distinct")
        : Error(what) {}
};

class OutOfDomainError : public Error {
public:
    explicit OutOfDomainError(const std::string& what = "argument outside the operation's domain")
        : Error(what) {}
};

class StabilizationError : public Error {
public:
    explicit StabilizationError(const std::string& what = "oracle failed to stabilize")
        : Error(what) {}
};

// Input exceeds the desk-scale bounds the library promises to handle.
class LimitError : public Error {
public:
    explicit LimitError(const std::string& what = "input exceeds configured bound")
        : Error(what) {}
};

// Malformed request (unknown law, bad syntax).  The CLI maps this to exit 2.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& what = "malformed request")
        : Error(what) {}
};

}  // namespace recip
