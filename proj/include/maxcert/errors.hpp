#pragma once

#include <stdexcept>
#include <string>

namespace maxcert {

// Malformed input documents, rational strings or term strings.
// The message carries the offending location, e.g. "op[1][2]: ...".
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A theorem hypothesis the caller was required to establish does not hold
// (non-convex input function, objective not vanishing at the candidate
// solution, ...). Thrown instead of silently producing meaningless output.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Ratio synthesis exceeded the caller-imposed term-depth guard.
class DepthGuardError : public std::runtime_error {
public:
    explicit DepthGuardError(const std::string& what) : std::runtime_error(what) {}
};

// An instance generator exhausted its attempt budget. Carries yield statistics.
class GenerationError : public std::runtime_error {
public:
    explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace maxcert
