#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ahg {

// Exact rational scalar used throughout the trusted path. No floating point.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "7", "-3/4". Result is canonicalized (gcd 1, positive denominator).
Rat parse_rat(const std::string& s);

// Canonical text form: integers without "/1", otherwise "num/den".
std::string rat_str(const Rat& q);

// max(|num|, den). Heights beyond long range report budget exhaustion.
long rat_height(const Rat& q);

// Deterministic enumeration of all rationals with height <= h, ordered by
// (height, den, |num|, sign): 0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, 3/2, ...
std::vector<Rat> rats_up_to_height(int h);

uint64_t fnv1a(const std::string& bytes);
std::string fnv1a_hex(const std::string& bytes);

}  // namespace ahg
