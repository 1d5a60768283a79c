#pragma once

#include <vector>

#include "toricdef/rational.hpp"

namespace toricdef {

// h^i(P^k, O(d)) in closed form: binom(d+k, k) at i = 0 for d >= 0,
// binom(-d-1, k) at i = k for d <= -k-1, zero elsewhere.
Int bott_projective(int k, const Int& d, int i);

// Full table (h^0, ..., h^k) of O(d) on P^k.
std::vector<Int> bott_table(int k, const Int& d);

// Degree-i piece of the product: sum of hA[j] * hB[i-j].
Int kunneth(const std::vector<Int>& hA, const std::vector<Int>& hB, int i);

// h^i(O(d)) == h^{k-i}(O(-d-k-1)) for all i.
bool serre_duality_check(int k, const Int& d);

Int binomial(const Int& n, int k);

}  // namespace toricdef
