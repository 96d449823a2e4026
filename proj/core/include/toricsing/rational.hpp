#pragma once
// Exact integers and rationals (GMP) plus the canonical text rendering.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace toricsing {

using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(const Int& p, const Int& q);

// "p/q" in lowest terms, q > 0; zero renders as "0/1".
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

// Accepts "p", "p/q" (any sign placement on p).
Rat parse_rat(const std::string& s);
Int parse_int(const std::string& s);

Int floor_of(const Rat& x);
Int gcd(const Int& a, const Int& b);
Int abs_of(const Int& a);

// Narrowing for loop bounds; throws std::overflow_error when out of range.
long to_long(const Int& x);

// Comma separated integer list, e.g. "9,1,4,7".
std::vector<Int> parse_int_list(const std::string& s);

}  // namespace toricsing
