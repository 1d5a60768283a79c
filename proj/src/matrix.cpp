#include "toricdef/matrix.hpp"

#include <algorithm>

namespace toricdef {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// Locate the entry of minimal nonzero absolute value in A[t.., t..].
bool find_pivot(const IntMatrix& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            Int a = abs(s(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

std::vector<Int> SNFDecomposition::invariant_factors() const {
    std::vector<Int> d;
    std::size_t n = std::min(s.rows(), s.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (s(i, i) != 0) d.push_back(s(i, i));
    return d;
}

SNFDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SNFDecomposition out{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& s = out.s;
    IntMatrix& u = out.u;
    IntMatrix& v = out.v;

    auto row_op = [&](std::size_t dst, std::size_t src, const Int& q) {
        // row dst -= q * row src, mirrored in U
        for (std::size_t j = 0; j < n; ++j) s(dst, j) -= q * s(src, j);
        for (std::size_t j = 0; j < m; ++j) u(dst, j) -= q * u(src, j);
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < m; ++i) s(i, dst) -= q * s(i, src);
        for (std::size_t i = 0; i < n; ++i) v(i, dst) -= q * v(i, src);
    };

    std::size_t bound = std::min(m, n);
    for (std::size_t t = 0; t < bound; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(s, t, pi, pj)) break;
        if (pi != t) { s.swap_rows(t, pi); u.swap_rows(t, pi); }
        if (pj != t) { s.swap_cols(t, pj); v.swap_cols(t, pj); }

        for (;;) {
            // Clear column t below the pivot, restarting whenever a smaller
            // remainder appears (it becomes the new pivot).
            bool restarted = false;
            for (std::size_t i = t + 1; i < m && !restarted; ++i) {
                if (s(i, t) == 0) continue;
                Int q = s(i, t) / s(t, t);
                row_op(i, t, q);
                if (s(i, t) != 0) {
                    s.swap_rows(t, i);
                    u.swap_rows(t, i);
                    restarted = true;
                }
            }
            if (restarted) continue;
            for (std::size_t j = t + 1; j < n && !restarted; ++j) {
                if (s(t, j) == 0) continue;
                Int q = s(t, j) / s(t, t);
                col_op(j, t, q);
                if (s(t, j) != 0) {
                    s.swap_cols(t, j);
                    v.swap_cols(t, j);
                    restarted = true;
                }
            }
            if (restarted) continue;

            // Enforce the divisibility chain: pivot must divide the rest.
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        // Fold the offending row into row t and re-eliminate.
                        for (std::size_t jj = 0; jj < n; ++jj) s(t, jj) += s(i, jj);
                        for (std::size_t jj = 0; jj < m; ++jj) u(t, jj) += u(i, jj);
                        fixed = false;
                    }
            if (fixed) break;
        }

        if (s(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j) s(t, j) = -s(t, j);
            for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
        }
    }
    return out;
}

Int int_det(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("int_det: square matrix required");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix w = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t piv = k;
            while (piv < n && w(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            w.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

namespace {

// Fraction-free row echelon form; returns pivot columns. The input is
// scaled row-wise to integers first (row scaling preserves the kernel).
struct Echelon {
    IntMatrix m;
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> pivot_rows;  // pivot_rows[k] pairs with pivot_cols[k]
};

Echelon bareiss_echelon(const RatMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    Echelon e;
    e.m = IntMatrix(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        Int scale = 1;
        for (std::size_t j = 0; j < cols; ++j) scale = lcm(scale, den(a(i, j)));
        for (std::size_t j = 0; j < cols; ++j) {
            Rat q = a(i, j) * Rat(scale);
            e.m(i, j) = num(q);
        }
    }

    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && e.m(piv, c) == 0) ++piv;
        if (piv == rows) continue;  // free column
        if (piv != r) e.m.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                e.m(i, j) = (e.m(i, j) * e.m(r, c) - e.m(i, c) * e.m(r, j)) / prev;
            e.m(i, c) = 0;
        }
        prev = e.m(r, c);
        e.pivot_cols.push_back(c);
        e.pivot_rows.push_back(r);
        ++r;
    }
    return e;
}

}  // namespace

std::size_t rat_rank(const RatMatrix& a) { return bareiss_echelon(a).pivot_cols.size(); }

std::vector<std::vector<Rat>> rat_kernel(const RatMatrix& a) {
    const std::size_t cols = a.cols();
    Echelon e = bareiss_echelon(a);

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> x(cols, Rat(0));
        x[fc] = Rat(1);
        // Back-substitute through the pivot rows in reverse.
        for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
            std::size_t pr = e.pivot_rows[k], pc = e.pivot_cols[k];
            Rat acc(0);
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (x[j] != 0) acc += Rat(e.m(pr, j)) * x[j];
            x[pc] = -acc / Rat(e.m(pr, pc));
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

RatMatrix to_rat(const IntMatrix& a) {
    RatMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
    return r;
}

}  // namespace toricdef
