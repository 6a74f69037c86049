#pragma once

#include <gmpxx.h>

#include <string>

namespace hecke {

// Arbitrary-precision rational, canonical form maintained by GMP
// (gcd(num, den) = 1, den > 0, zero = 0/1).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace hecke
