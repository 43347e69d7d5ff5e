#pragma once

// JSON exchange format for vector sets:
//   {"dim": d, "vectors": [["p/q", ...], ...]}
// Entries are rational strings ("3", "-1/2") or JSON integers.

#include <string>

#include "psskit/vecset.hpp"

namespace psskit {

/// Throws Error for malformed JSON or a bad "dim", and VecSetError (index of
/// the offending vector) for a bad vector, zero vector or duplicate.
VecSet parse_vecset(const std::string& text);

/// Canonical text: entries in lowest terms, fixed key order, trailing newline.
/// parse_vecset(format_vecset(x)) == x.
std::string format_vecset(const VecSet& x);

}  // namespace psskit
