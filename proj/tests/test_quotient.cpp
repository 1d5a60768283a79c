#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "toricdef/fan.hpp"
#include "toricdef/quotient.hpp"

using namespace toricdef;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

// Quotient type of cone(u, v) read off the lattice quotient N / (Zu + Zv):
// Smith form of [u v] exposes the cyclic generator, whose coordinates in
// the (u, v) basis give the residues of the diagonal action.
CyclicQuotientType lattice_quotient_oracle(const LatticeVector& u, const LatticeVector& v) {
    using boost::multiprecision::abs;
    Int d = det2(u, v);
    REQUIRE(d != 0);
    Int m = abs(d);
    if (m == 1) return CyclicQuotientType::smooth();

    IntMatrix cols(2, 2);
    cols(0, 0) = u.x; cols(1, 0) = u.y;
    cols(0, 1) = v.x; cols(1, 1) = v.y;
    SNFDecomposition snf = smith_normal_form(cols);
    REQUIRE(snf.s(0, 0) == 1);
    REQUIRE(snf.s(1, 1) == m);

    // Generator of the cyclic quotient: preimage of the second basis
    // vector under the row transform.
    Int det_u = int_det(snf.u);
    IntMatrix uinv(2, 2);
    uinv(0, 0) = snf.u(1, 1) * det_u;
    uinv(0, 1) = -snf.u(0, 1) * det_u;
    uinv(1, 0) = -snf.u(1, 0) * det_u;
    uinv(1, 1) = snf.u(0, 0) * det_u;
    Int gx = uinv(0, 1), gy = uinv(1, 1);

    // Coordinates of the generator in the (u, v) basis, times m.
    Int a1 = (gx * v.y - gy * v.x) * (d > 0 ? 1 : -1);
    Int a2 = (u.x * gy - u.y * gx) * (d > 0 ? 1 : -1);
    return canonicalize(CyclicActionSpec(m, {a1, a2}));
}

LatticeVector random_primitive(std::mt19937& rng) {
    std::uniform_int_distribution<int> coord(-10, 10);
    for (;;) {
        Int x = coord(rng), y = coord(rng);
        if (x == 0 && y == 0) continue;
        return primitive({x, y});
    }
}

}  // namespace

TEST_CASE("stabilizers from the weight matrix") {
    // Chart with the slice coordinate scaled away: residual weights
    // (2, 3, 4) on (x, y, a).
    TorusActionSpec chart;
    chart.rank = 1;
    chart.coordinates = {"x", "y", "a"};
    chart.weights = IntMatrix(1, 3);
    chart.weights(0, 0) = 2;
    chart.weights(0, 1) = 3;
    chart.weights(0, 2) = 4;

    StabilizerReport at_a = stabilizer(chart, {2});
    CHECK(!at_a.infinite);
    CHECK(at_a.cyclic);
    CHECK(at_a.order == 4);
    CHECK(mod_reduce(at_a.induced_weights[0], 4) == 2);
    CHECK(mod_reduce(at_a.induced_weights[1], 4) == 3);

    StabilizerReport at_xy = stabilizer(chart, {0, 1});
    CHECK(!at_xy.infinite);
    CHECK(at_xy.order == 1);

    StabilizerReport origin = stabilizer(weierstrass_action(), {});
    CHECK(origin.infinite);
}

TEST_CASE("stabilizer invariant factors are unimodular-row-operation invariants") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> wdist(-6, 6), pick(0, 1), shear(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        TorusActionSpec spec;
        spec.rank = 2;
        spec.coordinates = {"c0", "c1", "c2", "c3"};
        spec.weights = IntMatrix(2, 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j) spec.weights(i, j) = wdist(rng);

        TorusActionSpec sheared = spec;
        // random unimodular row operation plus an optional swap
        Int k = shear(rng);
        for (std::size_t j = 0; j < 4; ++j) sheared.weights(0, j) += k * sheared.weights(1, j);
        if (pick(rng)) {
            for (std::size_t j = 0; j < 4; ++j)
                std::swap(sheared.weights(0, j), sheared.weights(1, j));
        }

        std::vector<std::size_t> support = {0, static_cast<std::size_t>(1 + pick(rng))};
        StabilizerReport a = stabilizer(spec, support);
        StabilizerReport b = stabilizer(sheared, support);
        CHECK(a.infinite == b.infinite);
        if (!a.infinite) CHECK(a.invariant_factors == b.invariant_factors);
    }
}

TEST_CASE("canonical quotient types from cyclic actions") {
    CHECK(canonicalize(CyclicActionSpec(4, {2, 3})).to_string() == "1/2(1,1)");
    CHECK(canonicalize(CyclicActionSpec(6, {5, 4})).to_string() == "1/3(1,1)");
    CHECK(canonicalize(CyclicActionSpec(2, {1, 0})).is_smooth());
    CHECK(canonicalize(CyclicActionSpec(3, {1, 2})).to_string() == "1/3(1,2)");
    CHECK(canonicalize(CyclicActionSpec(3, {2, 1})).to_string() == "1/3(1,2)");
    CHECK(canonicalize(CyclicActionSpec(3, {1, 1})).to_string() == "1/3(1,1)");
    CHECK(canonicalize(CyclicActionSpec(12, {4, 3})).is_smooth());
    CHECK(canonicalize(CyclicActionSpec(1, {0, 0})).is_smooth());
}

TEST_CASE("canonicalize is idempotent") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> order_dist(1, 24), weight_dist(0, 23);
    for (int trial = 0; trial < 200; ++trial) {
        Int n = order_dist(rng);
        CyclicActionSpec spec(n, {Int(weight_dist(rng)) % n, Int(weight_dist(rng)) % n});
        CyclicQuotientType t = canonicalize(spec);
        if (t.is_smooth()) continue;
        CyclicQuotientType again = canonicalize(CyclicActionSpec(t.order, {t.a, t.b}));
        CHECK(again == t);
        CHECK(boost::multiprecision::gcd(t.order, t.b) == 1);
        Int binv = mod_inverse(t.b, t.order);
        CHECK(t.b <= binv);
    }
}

TEST_CASE("cone classification agrees with the lattice quotient") {
    std::mt19937 rng(37);
    int checked = 0;
    while (checked < 120) {
        LatticeVector u = random_primitive(rng);
        LatticeVector v = random_primitive(rng);
        if (det2(u, v) == 0) continue;
        CHECK(cone_quotient_type(u, v) == lattice_quotient_oracle(u, v));
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("invariant monomial generators") {
    CyclicActionSpec a(3, {1, 2});
    std::vector<Monomial> g1 = invariant_generators(a);
    std::set<std::vector<int>> s1;
    for (const Monomial& m : g1) s1.insert(m.e);
    CHECK(s1 == std::set<std::vector<int>>{{3, 0}, {0, 3}, {1, 1}});

    CyclicActionSpec b(3, {1, 1});
    std::vector<Monomial> g2 = invariant_generators(b);
    std::set<std::vector<int>> s2;
    for (const Monomial& m : g2) s2.insert(m.e);
    CHECK(s2 == std::set<std::vector<int>>{{3, 0}, {2, 1}, {1, 2}, {0, 3}});

    CyclicActionSpec c(2, {1, 1});
    std::vector<Monomial> g3 = invariant_generators(c);
    std::set<std::vector<int>> s3;
    for (const Monomial& m : g3) s3.insert(m.e);
    CHECK(s3 == std::set<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
}

TEST_CASE("invariant generators are minimal and complete up to the group order") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> order_dist(2, 7), weight_dist(0, 6);
    int checked = 0;
    while (checked < 25) {
        Int n = order_dist(rng);
        Int w1 = Int(weight_dist(rng)) % n, w2 = Int(weight_dist(rng)) % n;
        if (boost::multiprecision::gcd(n, boost::multiprecision::gcd(w1, w2)) != 1) continue;
        CyclicActionSpec spec(n, {w1, w2});
        std::vector<Monomial> gens = invariant_generators(spec);

        // minimal: no generator is a product of two others
        for (const Monomial& g : gens)
            for (const Monomial& h : gens) {
                if (h.total_degree() >= g.total_degree()) continue;
                if (h.divides(g)) {
                    std::vector<Int> rest;
                    for (std::size_t i = 0; i < 2; ++i)
                        rest.push_back(Int((g / h).e[i]));
                    CHECK(monomial_weight(spec, rest) != 0);
                }
            }

        // complete: every invariant of degree <= n factors through a generator
        int nb = static_cast<int>(n);
        for (int d1 = 0; d1 <= nb; ++d1)
            for (int d2 = 0; d1 + d2 <= nb; ++d2) {
                if (d1 + d2 == 0) continue;
                if (monomial_weight(spec, {Int(d1), Int(d2)}) != 0) continue;
                Monomial inv(std::vector<int>{d1, d2});
                bool covered = false;
                for (const Monomial& g : gens)
                    if (g.divides(inv)) covered = true;
                CHECK(covered);
            }
        ++checked;
    }
}

TEST_CASE("tangent and cotangent residues at the fixed points") {
    // Order-four symmetry of the quartic-type curve: local coordinate x/y,
    // cotangent residue -1, tangent residue 1, quadratic differentials -2.
    CyclicActionSpec mu4(4, {2, 3});
    CHECK(monomial_weight(mu4, {1, -1}) == 3);       // x/y
    CHECK(monomial_weight(mu4, {-1, 1}) == 1);       // dual: tangent line
    CHECK(monomial_weight(mu4, {2, -2}) == 2);       // (x/y)^2
    CHECK(mod_reduce(-monomial_weight(mu4, {2, -2}), 4) == 2);  // dual of quadratic forms

    CyclicActionSpec mu6(6, {2, 3});
    CHECK(monomial_weight(mu6, {1, -1}) == 5);
    CHECK(monomial_weight(mu6, {-1, 1}) == 1);
    CHECK(mod_reduce(-monomial_weight(mu6, {2, -2}), 6) == 2);
}

TEST_CASE("atlas of the two-pointed genus-one moduli surface") {
    std::vector<AtlasEntry> atlas = atlas_m12();
    REQUIRE(atlas.size() == 4);

    auto find = [&](const std::string& chart, const std::string& support) -> const AtlasEntry& {
        for (const AtlasEntry& e : atlas)
            if (e.chart == chart && e.support.size() == 1 && e.support[0] == support) return e;
        FAIL("missing atlas entry");
        return atlas[0];
    };

    const AtlasEntry& interior_quartic = find("z", "a");
    CHECK(interior_quartic.type.to_string() == "1/2(1,1)");
    CHECK(interior_quartic.stab.order == 4);
    CHECK(interior_quartic.locus.find("(0,0,1,1,0)") != std::string::npos);

    const AtlasEntry& interior_sextic = find("z", "y");
    CHECK(interior_sextic.type.to_string() == "1/3(1,2)");
    CHECK(interior_sextic.stab.order == 3);

    const AtlasEntry& boundary_quartic = find("y", "a");
    CHECK(boundary_quartic.type.to_string() == "1/2(1,1)");
    CHECK(boundary_quartic.stab.order == 4);

    const AtlasEntry& boundary_sextic = find("y", "b");
    CHECK(boundary_sextic.type.to_string() == "1/3(1,1)");
    CHECK(boundary_sextic.stab.order == 6);
    CHECK(boundary_sextic.locus.find("(0,1,0,0,1)") != std::string::npos);

    // the remaining chart supports are smooth: x on either chart
    TorusActionSpec action = weierstrass_action();
    std::vector<AtlasEntry> again = atlas_m12(action);
    CHECK(again.size() == 4);
}
