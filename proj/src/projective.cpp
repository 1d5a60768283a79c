#include "toricdef/projective.hpp"

#include <stdexcept>

namespace toricdef {

Int binomial(const Int& n, int k) {
    if (k < 0 || n < 0 || n < k) return 0;
    Int acc = 1;
    for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return acc;
}

Int bott_projective(int k, const Int& d, int i) {
    if (k < 1) throw std::invalid_argument("bott_projective: dimension must be >= 1");
    if (i < 0 || i > k) return 0;
    if (i == 0 && d >= 0) return binomial(d + k, k);
    if (i == k && d <= -k - 1) return binomial(-d - 1, k);
    return 0;
}

std::vector<Int> bott_table(int k, const Int& d) {
    std::vector<Int> t(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) t[static_cast<std::size_t>(i)] = bott_projective(k, d, i);
    return t;
}

Int kunneth(const std::vector<Int>& hA, const std::vector<Int>& hB, int i) {
    if (i < 0) return 0;
    Int acc = 0;
    for (std::size_t j = 0; j < hA.size(); ++j) {
        int rest = i - static_cast<int>(j);
        if (rest < 0 || rest >= static_cast<int>(hB.size())) continue;
        acc += hA[j] * hB[static_cast<std::size_t>(rest)];
    }
    return acc;
}

bool serre_duality_check(int k, const Int& d) {
    for (int i = 0; i <= k; ++i)
        if (bott_projective(k, d, i) != bott_projective(k, -d - k - 1, k - i)) return false;
    return true;
}

}  // namespace toricdef
