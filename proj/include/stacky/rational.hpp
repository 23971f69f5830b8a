#pragma once

#include <gmpxx.h>

#include <string>

#include "stacky/error.hpp"

namespace stacky {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    require(den != 0, "zero_denominator", "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// Reduced decimal form, denominator positive; "num" when the value is integral.
std::string rat_to_string(const Rat& q);

std::string int_to_string(const Int& n);

// Accepts "a" or "a/b" with optional leading '-'.
Rat parse_rat(const std::string& s);

Int parse_int(const std::string& s);

// Representative of n mod m in [0, m), m > 0.
Int mod_floor(const Int& n, const Int& m);

} // namespace stacky
