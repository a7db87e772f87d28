#pragma once

#include <stdexcept>
#include <string>

namespace springer {

/// Bad user-facing input (malformed partition, wrong l, ...). CLI exit 2.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

/// A size guard was exceeded without an explicit override. CLI exit 3.
struct guard_exceeded : std::runtime_error {
    explicit guard_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed; indicates a bug, not bad input. CLI exit 4.
struct internal_check : std::logic_error {
    explicit internal_check(const std::string& what) : std::logic_error(what) {}
};

/// The generic-element procedure found fewer independent tableaux than the
/// multiplicity requires. Reported as a failing check, never patched over.
struct procedure_failure : std::runtime_error {
    explicit procedure_failure(const std::string& what) : std::runtime_error(what) {}
};

inline void check_internal(bool ok, const std::string& what) {
    if (!ok) throw internal_check(what);
}

}  // namespace springer
