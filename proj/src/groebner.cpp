#include "toricdef/groebner.hpp"

#include <algorithm>
#include <list>
#include <stdexcept>

namespace toricdef {

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Monomial L = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = f.multiplied_by(L / f.leading_monomial(), Rat(1) / f.leading_coefficient());
    Polynomial b = g.multiplied_by(L / g.leading_monomial(), Rat(1) / g.leading_coefficient());
    return a - b;
}

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis) {
    Polynomial work = p;
    Polynomial remainder = Polynomial::zero(p.ring());
    while (!work.is_zero()) {
        bool divided = false;
        const Monomial& lm = work.leading_monomial();
        for (const Polynomial& g : basis) {
            if (g.is_zero()) continue;
            if (g.leading_monomial().divides(lm)) {
                Rat c = work.leading_coefficient() / g.leading_coefficient();
                work = work - g.multiplied_by(lm / g.leading_monomial(), c);
                divided = true;
                break;
            }
        }
        if (!divided) {
            remainder = remainder + Polynomial::term(p.ring(), lm, work.leading_coefficient());
            work = work - Polynomial::term(p.ring(), lm, work.leading_coefficient());
        }
    }
    return remainder;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int degree;
};

// Gebauer-Moller update: add generator t to the basis, pruning the pair set.
void update_pairs(std::vector<Pair>& pairs, const std::vector<Polynomial>& basis,
                  std::size_t t, const MonomialOrder& ord) {
    const Monomial& lt = basis[t].leading_monomial();

    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < t; ++i) {
        if (basis[i].is_zero()) continue;
        fresh.push_back({i, t, Monomial::lcm(basis[i].leading_monomial(), lt), 0});
        fresh.back().degree = fresh.back().lcm.total_degree();
    }

    // Criterion M: drop (i,t) if some (j,t) has lcm properly dividing lcm(i,t).
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
        for (std::size_t b = 0; b < fresh.size() && keep[a]; ++b) {
            if (a == b || !keep[b]) continue;
            if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm))
                keep[a] = false;
        }
    }
    // Criterion F: among equal lcms keep a single representative.
    for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (!keep[a]) continue;
        for (std::size_t b = a + 1; b < fresh.size(); ++b)
            if (keep[b] && fresh[b].lcm == fresh[a].lcm) keep[b] = false;
    }
    // Buchberger's product criterion.
    for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (!keep[a]) continue;
        if (basis[fresh[a].i].leading_monomial().coprime(lt)) keep[a] = false;
    }

    // Criterion B: prune old pairs whose lcm is a proper multiple of lt.
    std::vector<Pair> survivors;
    for (const Pair& p : pairs) {
        const Monomial& li = basis[p.i].leading_monomial();
        const Monomial& lj = basis[p.j].leading_monomial();
        if (lt.divides(p.lcm) && !(Monomial::lcm(li, lt) == p.lcm) &&
            !(Monomial::lcm(lj, lt) == p.lcm))
            continue;
        survivors.push_back(p);
    }
    for (std::size_t a = 0; a < fresh.size(); ++a)
        if (keep[a]) survivors.push_back(fresh[a]);

    std::sort(survivors.begin(), survivors.end(), [&](const Pair& a, const Pair& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        int c = ord.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    });
    pairs = std::move(survivors);
}

}  // namespace

bool GroebnerBasis::contains_one() const {
    return generators.size() == 1 && generators[0].total_degree() == 0;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const Ring& ring) {
    const MonomialOrder& ord = ring.order();

    std::vector<Polynomial> basis;
    std::vector<Pair> pairs;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        if (g.ring().nvars() != ring.nvars())
            throw std::invalid_argument("buchberger: generators from a different ring");
        basis.push_back(g.monic());
        update_pairs(pairs, basis, basis.size() - 1, ord);
    }

    while (!pairs.empty()) {
        Pair p = pairs.front();
        pairs.erase(pairs.begin());
        Polynomial s = reduce(s_polynomial(basis[p.i], basis[p.j]), basis);
        if (s.is_zero()) continue;
        basis.push_back(s.monic());
        update_pairs(pairs, basis, basis.size() - 1, ord);
    }

    // Minimalize: drop generators whose leading monomial another divides.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& li = basis[i].leading_monomial();
            const Monomial& lj = basis[j].leading_monomial();
            if (lj.divides(li) && (!(li == lj) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Full inter-reduction: reduce each generator by the others until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = reduce(minimal[i], others);
            if (!(r == minimal[i])) {
                changed = true;
                if (r.is_zero()) {
                    minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
                    --i;
                } else {
                    minimal[i] = r.monic();
                }
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return GroebnerBasis{ring, std::move(minimal), true};
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (p.ring().nvars() != gb.ring.nvars())
        throw std::invalid_argument("normal_form: ring mismatch");
    return reduce(p, gb.generators);
}

std::optional<Int> quotient_dimension(const GroebnerBasis& gb) {
    if (gb.contains_one()) return Int(0);
    const std::size_t n = gb.ring.nvars();

    std::vector<Monomial> leads;
    for (const Polynomial& g : gb.generators) leads.push_back(g.leading_monomial());

    // Finite iff every variable has a pure-power leading term.
    std::vector<int> bound(n, -1);
    for (const Monomial& m : leads) {
        int support = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (m.e[i] == 0) continue;
            if (support >= 0) { pure = false; break; }
            support = static_cast<int>(i);
        }
        if (pure && support >= 0) {
            std::size_t i = static_cast<std::size_t>(support);
            if (bound[i] < 0 || m.e[i] < bound[i]) bound[i] = m.e[i];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] < 0) return std::nullopt;

    // Count standard monomials inside the pure-power box.
    Int count = 0;
    Monomial probe(n);
    auto is_standard = [&](const Monomial& m) {
        for (const Monomial& l : leads)
            if (l.divides(m)) return false;
        return true;
    };
    std::size_t level = 0;
    // Iterative odometer over the box.
    for (;;) {
        if (is_standard(probe)) ++count;
        level = 0;
        while (level < n) {
            probe.e[level] += 1;
            if (probe.e[level] < bound[level]) break;
            probe.e[level] = 0;
            ++level;
        }
        if (level == n) break;
    }
    return count;
}

std::vector<Monomial> monomials_of_weighted_degree(std::size_t nvars, const Int& degree,
                                                   const std::vector<Int>& weights,
                                                   const MonomialOrder& ord) {
    if (weights.size() != nvars)
        throw std::invalid_argument("monomials_of_weighted_degree: weight count mismatch");
    for (const Int& w : weights)
        if (w <= 0) throw std::invalid_argument("weights must be positive");

    std::vector<Monomial> out;
    if (degree < 0) return out;
    Monomial cur(nvars);
    // Depth-first over exponents of variables 0..n-1 with exact remaining degree.
    auto rec = [&](auto&& self, std::size_t var, const Int& remaining) -> void {
        if (var + 1 == nvars) {
            if (remaining % weights[var] == 0) {
                cur.e[var] = static_cast<int>(remaining / weights[var]);
                out.push_back(cur);
                cur.e[var] = 0;
            }
            return;
        }
        Int maxExp = remaining / weights[var];
        for (Int k = 0; k <= maxExp; ++k) {
            cur.e[var] = static_cast<int>(k);
            self(self, var + 1, remaining - k * weights[var]);
        }
        cur.e[var] = 0;
    };
    if (nvars == 0) {
        if (degree == 0) out.push_back(Monomial(std::size_t{0}));
        return out;
    }
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
    return out;
}

std::vector<Monomial> graded_piece_basis(const GroebnerBasis& gb, const Int& degree,
                                         const std::vector<Int>& weights) {
    for (const Polynomial& g : gb.generators)
        if (!g.homogeneous_degree(weights))
            throw std::invalid_argument("graded_piece_basis: ideal not homogeneous for weights");

    std::vector<Monomial> all =
        monomials_of_weighted_degree(gb.ring.nvars(), degree, weights, gb.ring.order());
    std::vector<Monomial> out;
    for (const Monomial& m : all) {
        bool standard = true;
        for (const Polynomial& g : gb.generators)
            if (g.leading_monomial().divides(m)) { standard = false; break; }
        if (standard) out.push_back(m);
    }
    return out;
}

}  // namespace toricdef
