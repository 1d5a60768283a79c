#pragma once

#include <string>
#include <vector>

#include "toricdef/matrix.hpp"
#include "toricdef/polynomial.hpp"

namespace toricdef {

// Diagonal torus action: column j of `weights` lists the character weights
// of coordinate j under the rank-many torus factors.
struct TorusActionSpec {
    std::size_t rank = 0;
    IntMatrix weights;  // rank x ncoords
    std::vector<std::string> coordinates;

    std::size_t ncoords() const { return weights.cols(); }
};

// mu_n acting diagonally with one residue per coordinate (0 <= w < n).
struct CyclicActionSpec {
    Int order = 1;
    std::vector<Int> weights;

    CyclicActionSpec() = default;
    CyclicActionSpec(Int n, std::vector<Int> w);
};

// Canonical form 1/m(1,q), q = min(q, q^-1 mod m), both weights coprime
// to m; m = 1 encodes a smooth point.
struct CyclicQuotientType {
    Int order = 1;
    Int a = 1;
    Int b = 0;

    static CyclicQuotientType smooth() { return {1, 1, 0}; }
    bool is_smooth() const { return order == 1; }
    std::string to_string() const;

    bool operator==(const CyclicQuotientType& o) const {
        return order == o.order && a == o.a && b == o.b;
    }
};

struct StabilizerReport {
    bool infinite = false;
    std::vector<Int> invariant_factors;  // nontrivial factors d1 | d2 | ...
    bool cyclic = false;                 // finite with at most one factor
    Int order = 1;                       // group order when finite
    // For finite cyclic stabilizers: residue of the generator on every
    // coordinate (mod order), indexed like the action's coordinates.
    std::vector<Int> induced_weights;
};

// Stabilizer of a point whose nonzero coordinates are exactly `support`.
StabilizerReport stabilizer(const TorusActionSpec& spec, const std::vector<std::size_t>& support);

// Chevalley-Shephard-Todd reduction of a two-coordinate cyclic action:
// factor the kernel, then iteratively the pseudo-reflection subgroups,
// then normalize the faithful reflection-free action to 1/m(1,q).
CyclicQuotientType canonicalize(const CyclicActionSpec& spec);

// Residue of the action on a Laurent monomial with the given exponents
// (negative entries allowed); plain residue arithmetic.
Int monomial_weight(const CyclicActionSpec& spec, const std::vector<Int>& exponents);

// Minimal generating set of the monoid of invariant monomials.
std::vector<Monomial> invariant_generators(const CyclicActionSpec& spec);

struct AtlasEntry {
    std::string chart;            // coordinate used to slice the torus
    std::vector<std::string> support;
    StabilizerReport stab;
    CyclicQuotientType type;
    std::string locus;            // representative point + curve description
};

// The Weierstrass-family torus action used by the surface atlas:
// rank 2 on (x, y, z, a, b) with weight rows (1,1,1,0,0) and (2,3,0,4,6).
TorusActionSpec weierstrass_action();

// Chart-by-chart singular-point atlas of the two-pointed genus-one moduli
// surface: exactly four singular entries. Passing a different action spec
// recomputes the table against the same chart reductions.
std::vector<AtlasEntry> atlas_m12();
std::vector<AtlasEntry> atlas_m12(const TorusActionSpec& action);

}  // namespace toricdef
