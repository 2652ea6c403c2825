#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace johnson {

// Arbitrary-precision integers and rationals (GMP-backed). Rationals are
// kept canonical throughout: lowest terms, positive denominator, zero as 0/1.
using Int = mpz_class;
using Rat = mpq_class;

/// Canonicalized rational num/den; throws std::domain_error on den == 0.
Rat make_rat(const Int& num, const Int& den);

std::string to_string(const Int& v);

/// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string to_string(const Rat& v);

Int int_from_string(std::string_view s);

/// Accepts "p" and "p/q"; result is canonicalized.
Rat rat_from_string(std::string_view s);

}  // namespace johnson
