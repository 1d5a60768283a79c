#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace toricdef {

// Universal exact coefficient types. Rationals are kept in lowest terms
// with positive denominator by the backend; nothing here ever rounds.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

// Floor/ceil division for b > 0.
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

// Representative of a mod n in [0, n), n > 0.
Int mod_reduce(const Int& a, const Int& n);

// Inverse of a mod n; requires gcd(a, n) = 1.
Int mod_inverse(const Int& a, const Int& n);

std::string int_to_string(const Int& n);
// "p/q" for non-integers, plain decimal otherwise.
std::string rat_to_string(const Rat& q);

}  // namespace toricdef
