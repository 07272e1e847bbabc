#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gapprob {

/// Base class for every error this library reports.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ZeroDenominatorError : public Error {
public:
    ZeroDenominatorError() : Error("denominator is zero") {}
};

class OutOfRangeError : public Error {
public:
    explicit OutOfRangeError(const std::string& what) : Error(what) {}
};

class InvalidKError : public Error {
public:
    explicit InvalidKError(int k) : Error("gap bound k must be >= 1, got " + std::to_string(k)) {}
};

class GapTooSmallError : public Error {
public:
    explicit GapTooSmallError(const std::string& what) : Error(what) {}
};

class InvalidDrawSpecError : public Error {
public:
    explicit InvalidDrawSpecError(const std::string& what) : Error(what) {}
};

class InvalidSubsetError : public Error {
public:
    explicit InvalidSubsetError(const std::string& what) : Error(what) {}
};

class DegenerateDrawError : public Error {
public:
    explicit DegenerateDrawError(int m)
        : Error("draw of m = " + std::to_string(m) + " numbers has no pair to bet on") {}
};

/// Enumeration refused because C(n,m) exceeds the configured budget.
class BudgetExceededError : public Error {
public:
    BudgetExceededError(std::string refused_count, std::uint64_t budget)
        : Error("refusing to enumerate " + refused_count + " subsets (budget " +
                std::to_string(budget) + ")"),
          refused_count_(std::move(refused_count)) {}

    /// Exact number of subsets that was refused, as a decimal string.
    const std::string& refused_count() const { return refused_count_; }

private:
    std::string refused_count_;
};

class EmptyHistoryError : public Error {
public:
    EmptyHistoryError() : Error("draw history is empty") {}
};

/// Parse errors carry the 1-based line number of the offending input line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

class MalformedLineError : public ParseError {
public:
    MalformedLineError(int line, const std::string& reason) : ParseError(line, reason) {}
};

class OutOfRangeNumberError : public ParseError {
public:
    OutOfRangeNumberError(int line, const std::string& reason) : ParseError(line, reason) {}
};

class DuplicateNumberError : public ParseError {
public:
    DuplicateNumberError(int line, const std::string& reason) : ParseError(line, reason) {}
};

class WrongCountError : public ParseError {
public:
    WrongCountError(int line, const std::string& reason) : ParseError(line, reason) {}
};

}  // namespace gapprob
