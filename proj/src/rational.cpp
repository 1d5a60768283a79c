#include "toricdef/rational.hpp"

#include <stdexcept>

namespace toricdef {

Int floor_div(const Int& a, const Int& b) {
    if (b <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
    Int q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

Int rat_floor(const Rat& q) { return floor_div(num(q), den(q)); }

Int rat_ceil(const Rat& q) { return ceil_div(num(q), den(q)); }

Int mod_reduce(const Int& a, const Int& n) {
    if (n <= 0) throw std::invalid_argument("mod_reduce: modulus must be positive");
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

Int mod_inverse(const Int& a, const Int& n) {
    // Extended Euclid on (a mod n, n).
    Int r0 = mod_reduce(a, n), r1 = n;
    Int s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return mod_reduce(s0, n);
}

std::string int_to_string(const Int& n) { return n.str(); }

std::string rat_to_string(const Rat& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

}  // namespace toricdef
