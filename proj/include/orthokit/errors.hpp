#pragma once

#include <stdexcept>
#include <string>

namespace orthokit {

/// A caller violated an operation's precondition (bad field parameters,
/// non-orthomorphism input, element outside the required set, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The requested object provably does not exist (e.g. a distance-3 pair over F_8).
class NonexistenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A backtracking search finished without a solution. `exhaustive` is true
/// when the whole space was explored, false when a node budget ran out.
class SearchExhausted : public std::runtime_error {
public:
    SearchExhausted(const std::string& what, bool exhaustive)
        : std::runtime_error(what), exhaustive_(exhaustive) {}
    bool exhaustive() const noexcept { return exhaustive_; }

private:
    bool exhaustive_;
};

/// An internal consistency check failed. Always a defect.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void check_internal(bool ok, const char* what) {
    if (!ok) throw InternalError(what);
}

} // namespace orthokit
