#include "toricdef/quotient.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace toricdef {

using boost::multiprecision::gcd;

CyclicActionSpec::CyclicActionSpec(Int n, std::vector<Int> w) : order(std::move(n)) {
    if (order < 1) throw std::invalid_argument("cyclic action: order must be >= 1");
    weights.reserve(w.size());
    for (const Int& x : w) weights.push_back(mod_reduce(x, order));
}

std::string CyclicQuotientType::to_string() const {
    if (is_smooth()) return "smooth";
    std::ostringstream os;
    os << "1/" << order << "(" << a << "," << b << ")";
    return os.str();
}

StabilizerReport stabilizer(const TorusActionSpec& spec,
                            const std::vector<std::size_t>& support) {
    const std::size_t r = spec.rank;
    if (spec.weights.rows() != r) throw std::invalid_argument("stabilizer: bad weight matrix");

    StabilizerReport rep;
    if (support.empty()) {
        // The origin: stabilized by the whole torus.
        rep.infinite = (r > 0);
        rep.cyclic = (r == 0);
        return rep;
    }

    // Rows of M are the weight columns of the supported coordinates.
    IntMatrix m(support.size(), r);
    for (std::size_t s = 0; s < support.size(); ++s) {
        if (support[s] >= spec.ncoords())
            throw std::invalid_argument("stabilizer: support index out of range");
        for (std::size_t i = 0; i < r; ++i) m(s, i) = spec.weights(i, support[s]);
    }

    SNFDecomposition snf = smith_normal_form(m);
    std::vector<Int> diag = snf.invariant_factors();
    if (diag.size() < r) {
        rep.infinite = true;
        return rep;
    }

    rep.order = 1;
    std::size_t generator_col = 0;
    std::size_t nontrivial = 0;
    for (std::size_t k = 0; k < diag.size(); ++k) {
        rep.order *= diag[k];
        if (diag[k] > 1) {
            rep.invariant_factors.push_back(diag[k]);
            generator_col = k;
            ++nontrivial;
        }
    }
    rep.cyclic = (nontrivial <= 1);

    if (rep.cyclic) {
        // Generator cocharacter: the matching column of V (from S = U M V).
        rep.induced_weights.assign(spec.ncoords(), Int(0));
        if (rep.order > 1) {
            for (std::size_t c = 0; c < spec.ncoords(); ++c) {
                Int acc = 0;
                for (std::size_t i = 0; i < r; ++i)
                    acc += snf.v(i, generator_col) * spec.weights(i, c);
                rep.induced_weights[c] = mod_reduce(acc, rep.order);
            }
        }
    }
    return rep;
}

CyclicQuotientType canonicalize(const CyclicActionSpec& spec) {
    if (spec.weights.size() != 2)
        throw std::invalid_argument("canonicalize: exactly two coordinates expected");
    Int n = spec.order;
    Int w1 = mod_reduce(spec.weights[0], n);
    Int w2 = mod_reduce(spec.weights[1], n);

    // (i) factor out the kernel of the action.
    Int g = gcd(n, gcd(w1, w2));
    n /= g;
    if (n == 1) return CyclicQuotientType::smooth();
    w1 = mod_reduce(w1 / g, n);
    w2 = mod_reduce(w2 / g, n);

    // (ii) factor pseudo-reflection subgroups until none remain. The
    // subgroup acting only on one coordinate is replaced by the invariant
    // power of that coordinate; the group order strictly decreases.
    for (;;) {
        Int c1 = gcd(n, w2);  // fixes the second coordinate hyperplane pointwise
        if (c1 > 1) {
            n /= c1;
            if (n == 1) return CyclicQuotientType::smooth();
            w1 = mod_reduce(w1, n);
            w2 = mod_reduce(w2 / c1, n);
            continue;
        }
        Int c2 = gcd(n, w1);
        if (c2 > 1) {
            n /= c2;
            if (n == 1) return CyclicQuotientType::smooth();
            w2 = mod_reduce(w2, n);
            w1 = mod_reduce(w1 / c2, n);
            continue;
        }
        break;
    }

    // (iii) normalize the faithful, reflection-free action to 1/m(1,q).
    Int q = mod_reduce(w2 * mod_inverse(w1, n), n);
    Int qi = mod_inverse(q, n);
    return CyclicQuotientType{n, 1, std::min(q, qi)};
}

Int monomial_weight(const CyclicActionSpec& spec, const std::vector<Int>& exponents) {
    if (exponents.size() != spec.weights.size())
        throw std::invalid_argument("monomial_weight: exponent count mismatch");
    Int acc = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) acc += spec.weights[i] * exponents[i];
    return mod_reduce(acc, spec.order);
}

std::vector<Monomial> invariant_generators(const CyclicActionSpec& spec) {
    const Int& n = spec.order;
    Int g = n;
    for (const Int& w : spec.weights) g = gcd(g, w);
    if (g != 1) throw std::invalid_argument("invariant_generators: action not faithful");

    const std::size_t m = spec.weights.size();
    const int nb = static_cast<int>(n);  // Noether bound

    // All invariant exponent vectors of total degree 1..n.
    std::vector<Monomial> invariants;
    Monomial cur(m);
    auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
        if (var == m) {
            if (remaining == nb) return;  // skip the empty monomial
            Int w = 0;
            for (std::size_t i = 0; i < m; ++i) w += spec.weights[i] * cur.e[i];
            if (mod_reduce(w, n) == 0) invariants.push_back(cur);
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            cur.e[var] = k;
            self(self, var + 1, remaining - k);
        }
        cur.e[var] = 0;
    };
    rec(rec, 0, nb);

    // Hilbert basis: drop every invariant that splits as a sum of two
    // smaller invariants (the difference of invariants is invariant).
    std::vector<Monomial> gens;
    for (const Monomial& e : invariants) {
        bool decomposable = false;
        for (const Monomial& f : invariants) {
            if (f.total_degree() >= e.total_degree()) continue;
            if (f.divides(e)) { decomposable = true; break; }
        }
        if (!decomposable) gens.push_back(e);
    }
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.e > b.e;
    });
    return gens;
}

TorusActionSpec weierstrass_action() {
    TorusActionSpec spec;
    spec.rank = 2;
    spec.coordinates = {"x", "y", "z", "a", "b"};
    spec.weights = IntMatrix(2, 5);
    const int row0[5] = {1, 1, 1, 0, 0};
    const int row1[5] = {2, 3, 0, 4, 6};
    for (std::size_t j = 0; j < 5; ++j) {
        spec.weights(0, j) = row0[j];
        spec.weights(1, j) = row1[j];
    }
    return spec;
}

namespace {

struct ChartFixture {
    std::string slice;                     // coordinate set to 1
    std::vector<std::string> coordinates;  // surviving chart coordinates
    // locus tags keyed by the singular support coordinate
    std::vector<std::pair<std::string, std::string>> loci;
};

// Rank-1 action on the chart coordinates obtained by slicing the rank-2
// torus along the given coordinate's character.
TorusActionSpec slice_chart(const TorusActionSpec& action, const ChartFixture& chart) {
    if (action.rank != 2)
        throw std::invalid_argument("atlas: rank-2 action expected");
    int slice_idx = -1;
    for (std::size_t j = 0; j < action.coordinates.size(); ++j)
        if (action.coordinates[j] == chart.slice) slice_idx = static_cast<int>(j);
    if (slice_idx < 0) throw std::invalid_argument("atlas: slice coordinate missing");

    Int alpha = action.weights(0, static_cast<std::size_t>(slice_idx));
    Int beta = action.weights(1, static_cast<std::size_t>(slice_idx));
    if (gcd(alpha, beta) != 1)
        throw std::invalid_argument("atlas: slice character must be primitive");
    // Primitive cocharacter spanning the kernel of (alpha, beta).
    Int k0 = -beta, k1 = alpha;

    TorusActionSpec out;
    out.rank = 1;
    out.coordinates = chart.coordinates;
    out.weights = IntMatrix(1, chart.coordinates.size());
    for (std::size_t c = 0; c < chart.coordinates.size(); ++c) {
        int idx = -1;
        for (std::size_t j = 0; j < action.coordinates.size(); ++j)
            if (action.coordinates[j] == chart.coordinates[c]) idx = static_cast<int>(j);
        if (idx < 0) throw std::invalid_argument("atlas: chart coordinate missing");
        out.weights(0, c) = k0 * action.weights(0, static_cast<std::size_t>(idx)) +
                            k1 * action.weights(1, static_cast<std::size_t>(idx));
    }
    return out;
}

}  // namespace

std::vector<AtlasEntry> atlas_m12() { return atlas_m12(weierstrass_action()); }

std::vector<AtlasEntry> atlas_m12(const TorusActionSpec& action) {
    const std::vector<ChartFixture> charts = {
        {"z",
         {"x", "y", "a"},
         {{"y", "image of (0,1,1,0,1): smooth curve y^2 = x^3 + 1, markings [0:1:0] and [0:1:1]"},
          {"a", "image of (0,0,1,1,0): smooth curve y^2 = x^3 + x, markings [0:1:0] and [0:0:1]"}}},
        {"y",
         {"x", "a", "b"},
         {{"a", "image of (0,1,0,1,0): tail y^2 = x^3 + x joined to a rational bridge at a node"},
          {"b", "image of (0,1,0,0,1): tail y^2 = x^3 + 1 joined to a rational bridge at a node"}}},
    };

    std::vector<AtlasEntry> out;
    for (const ChartFixture& chart : charts) {
        TorusActionSpec reduced = slice_chart(action, chart);
        for (std::size_t s = 0; s < chart.coordinates.size(); ++s) {
            StabilizerReport rep = stabilizer(reduced, {s});
            if (rep.infinite || !rep.cyclic || rep.order == 1) continue;

            std::vector<Int> transverse;
            for (std::size_t c = 0; c < chart.coordinates.size(); ++c)
                if (c != s) transverse.push_back(rep.induced_weights[c]);
            if (transverse.size() != 2) continue;

            CyclicQuotientType type =
                canonicalize(CyclicActionSpec(rep.order, transverse));
            if (type.is_smooth()) continue;

            AtlasEntry entry;
            entry.chart = chart.slice;
            entry.support = {chart.coordinates[s]};
            entry.stab = rep;
            entry.type = type;
            entry.locus = "unlabelled";
            for (const auto& [coord, tag] : chart.loci)
                if (coord == chart.coordinates[s]) entry.locus = tag;
            out.push_back(std::move(entry));
        }
    }
    return out;
}

}  // namespace toricdef
