#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace convexval {

// Exact rational scalar. Always kept in canonical form (gcd 1, positive denominator).
using Rat = mpq_class;

// Raised on malformed external input (JSON shape, number syntax, dimension mismatch).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation's mathematical precondition fails (empty polytope support,
// point outside effective domain, origin not contained, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Raised for operations a representation class does not support.
struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// Parses "p", "-p", or "p/q" with q > 0 after canonicalization. Rejects anything else.
Rat parse_rat(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& q);

double rat_to_double(const Rat& q);

// Shorthand for small constants.
inline Rat rat(long p, long q = 1) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

}  // namespace convexval
