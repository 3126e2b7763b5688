#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace plshark {

// The only scalar in the core: an arbitrary-precision rational, kept canonical
// (lowest terms, positive denominator).  GMP preserves canonical form through
// arithmetic; only text input needs explicit care, see parse_rat.
using Rat = mpq_class;

// num/den in canonical form.  mpq_class's two-argument constructor does not
// canonicalize; this always does.
Rat make_rat(long num, long den);

// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rat& q);

// Strict parse of the canonical form: optional '-', digits, optional "/digits".
// Non-canonical input ("4/6", "2/-3", "0/5") is rejected, not normalized.
std::optional<Rat> parse_rat(std::string_view text);

// Rounded convenience value; never used by the core.
double to_double(const Rat& q);

} // namespace plshark
