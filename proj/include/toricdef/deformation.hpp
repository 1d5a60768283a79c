#pragma once

#include <map>
#include <string>
#include <vector>

#include "toricdef/groebner.hpp"
#include "toricdef/matrix.hpp"
#include "toricdef/polynomial.hpp"

namespace toricdef {

// Matrix of homogeneous polynomials over the ambient ring. Shifts may be
// declared or left empty to be inferred from entry degrees; nonzero entry
// (i, j) has degree col_shift[j] - row_shift[i].
struct GradedMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Polynomial> entries;  // row-major
    std::vector<Int> row_shifts, col_shifts;

    static GradedMatrix from_rows(const Ring& ring,
                                  const std::vector<std::vector<std::string>>& rows);

    const Polynomial& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
    Polynomial& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    GradedMatrix transpose() const;
};

// Ambient variables, homogeneous ideal generators and grading weights,
// plus named matrix fixtures (syzygy, jacobian, resolution maps).
struct SingularityPresentation {
    std::string label;
    Ring ring;
    std::vector<Polynomial> generators;
    std::vector<Int> weights;  // one positive weight per variable
    std::map<std::string, GradedMatrix> matrices;

    void validate() const;  // homogeneity + declared matrix identities
};

// Matrix of partial derivatives: row per variable, column per generator.
GradedMatrix jacobian(const std::vector<Polynomial>& gens);

enum class T1Status { Ok, Infinite, NoStabilization, ComplexFailure };

struct T1Report {
    T1Status status = T1Status::Ok;
    std::string method;
    Int total = 0;
    std::vector<std::pair<Int, Int>> per_degree;  // (internal degree, contribution)
    int stabilization_window = 0;
    bool ext2_known = false;
    Int ext2 = 0;
    std::string note;
};

// First-order deformations of a hypersurface: dimension of the quotient
// by (f, all partials); obstructions vanish.
T1Report hypersurface_t1(const Polynomial& f);

struct SubquotientOptions {
    Int degree_bound = 12;
    int window = 4;
};

// Sum over internal degrees of dim ker(outer_d) - dim im(inner_d) on the
// graded pieces of ring/ideal, with a trailing zero-window certificate.
// outer*inner must vanish modulo the ideal (checked first).
T1Report graded_subquotient_dim(const GradedMatrix& outer, const GradedMatrix& inner,
                                const SingularityPresentation& pres,
                                const SubquotientOptions& opt = {});

// Per vector: does matrix * v vanish modulo the ideal?
std::vector<bool> verify_membership(const std::vector<std::vector<Polynomial>>& vectors,
                                    const GradedMatrix& matrix,
                                    const SingularityPresentation& pres);

struct CompositeResidue {
    std::size_t map_index;  // composite of maps[map_index+1] o maps[map_index]
    std::size_t row, col;
    std::string residue;
};

struct ComplexReport {
    bool ok = true;
    std::vector<CompositeResidue> residues;
};

// Checks every consecutive composite of the chain against the ideal;
// failures are data, not errors.
ComplexReport verify_complex(const std::vector<GradedMatrix>& maps,
                             const SingularityPresentation& pres);

struct DeformationLedger {
    Int h1_tangent = 0, h2_tangent = 0;
    std::vector<Int> local_t1, local_ext2;
    Int ext1_lo = 0, ext1_hi = 0;
    bool ext1_exact = false;
    Int ext2_lo = 0, ext2_hi = 0;
    bool ext2_exact = false;
};

// Assemble global Ext^1/Ext^2 bounds from the local-to-global sequence
// H^1(T) -> Ext^1 -> H^0(local T^1) -> H^2(T); exact values only when the
// flanking vanishing determines them.
DeformationLedger local_to_global(const Int& h1_tangent, const Int& h2_tangent,
                                  const std::vector<Int>& local_t1,
                                  const std::vector<Int>& local_ext2);

}  // namespace toricdef
