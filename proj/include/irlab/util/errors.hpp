#ifndef IRLAB_UTIL_ERRORS_HPP
#define IRLAB_UTIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace irlab {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad argument (invalid index, mismatched grids, malformed input).
class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& msg) : Error(msg) {}
};

// Input outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Requested object would exceed a configured size limit.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& msg) : Error(msg) {}
};

// A numerical procedure finished but failed its quality target.
// Carries the achieved value so callers can decide what to do.
class DiagnosticError : public Error {
public:
    DiagnosticError(const std::string& msg, double achieved)
        : Error(msg), achieved_(achieved) {}
    double achieved() const { return achieved_; }
private:
    double achieved_;
};

// Configuration file problems (reported with line/key context).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

} // namespace irlab

#endif
