#pragma once

#include <stdexcept>
#include <string>

namespace sumorder {

/// Bad user-facing input: malformed set syntax, composite moduli, zero
/// elements, out-of-range magnitudes. Maps to CLI exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// An Ordering that violates its own contract (duplicate or zero element).
/// Kept distinct from plain input_error so callers can tell a bad ordering
/// apart from unparseable text.
class malformed_ordering : public input_error {
 public:
  explicit malformed_ordering(const std::string& what) : input_error(what) {}
};

/// A size or resource guard tripped without an override.
class guard_error : public input_error {
 public:
  explicit guard_error(const std::string& what) : input_error(what) {}
};

/// No valid ordering exists for the given set. For prime-field inputs this
/// would contradict the conjecture the sweep machinery probes, so callers
/// report it loudly. Maps to CLI exit code 1.
class no_ordering_found : public std::runtime_error {
 public:
  explicit no_ordering_found(const std::string& what)
      : std::runtime_error(what) {}
};

/// An internal invariant failed. Always a bug, never a recoverable input
/// condition.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sumorder
