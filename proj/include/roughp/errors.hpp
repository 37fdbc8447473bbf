#pragma once

#include <stdexcept>
#include <string>

namespace roughp {

// Enumeration or decide work would exceed a configured budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A verified property failed; the message names the witness string.
class CorrectnessError : public std::runtime_error {
public:
    CorrectnessError(const std::string& what, std::string witness)
        : std::runtime_error(what), witness_(std::move(witness)) {}
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

// An ancestor chain failed to shrink; indicates a plugin that violates the
// length-growth contract on pad.
class ChainGuardError : public std::runtime_error {
public:
    explicit ChainGuardError(const std::string& what) : std::runtime_error(what) {}
};

class UnknownLanguageError : public std::runtime_error {
public:
    explicit UnknownLanguageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace roughp
