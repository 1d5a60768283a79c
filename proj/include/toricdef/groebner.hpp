#pragma once

#include <optional>
#include <vector>

#include "toricdef/polynomial.hpp"

namespace toricdef {

// Reduced basis: generators monic, pairwise fully reduced, sorted with the
// largest leading monomial first. Unique for a given (ideal, order).
struct GroebnerBasis {
    Ring ring;
    std::vector<Polynomial> generators;
    bool reduced = true;

    bool contains_one() const;
};

// Buchberger with Gebauer-Moller pair elimination and a full
// inter-reduction pass at the end.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const Ring& ring);

// Unique remainder of p modulo gb; zero iff p lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// Vector-space dimension of ring/ideal via standard-monomial counting;
// nullopt encodes INFINITE (some variable has no pure-power leading term).
std::optional<Int> quotient_dimension(const GroebnerBasis& gb);

// Standard monomials of the given weighted degree. Throws if a generator
// is not homogeneous under the weights.
std::vector<Monomial> graded_piece_basis(const GroebnerBasis& gb, const Int& degree,
                                         const std::vector<Int>& weights);

// All monomials in nvars variables of exact weighted degree d (weights > 0),
// ordered descending under ord. Exposed for the brute-force test oracles.
std::vector<Monomial> monomials_of_weighted_degree(std::size_t nvars, const Int& degree,
                                                   const std::vector<Int>& weights,
                                                   const MonomialOrder& ord);

}  // namespace toricdef
