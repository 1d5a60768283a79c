#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricdef/matrix.hpp"
#include "toricdef/quotient.hpp"

namespace toricdef {

// Point of the rank-2 lattice N; ray generators are stored primitive.
struct LatticeVector {
    Int x = 0, y = 0;

    bool operator==(const LatticeVector& o) const { return x == o.x && y == o.y; }
    LatticeVector operator+(const LatticeVector& o) const { return {x + o.x, y + o.y}; }
    LatticeVector operator-() const { return {-x, -y}; }
    LatticeVector scaled(const Int& k) const { return {k * x, k * y}; }
};

Int det2(const LatticeVector& u, const LatticeVector& v);
LatticeVector primitive(const LatticeVector& v);

// Complete fan: primitive rays in strictly increasing counterclockwise
// angular order (up to rotation of the list); maximal cones are the
// consecutive ray pairs.
class Fan2 {
public:
    static Fan2 from_rays(std::vector<LatticeVector> rays);

    // Sorts the rays into counterclockwise order (duplicates dropped)
    // before validating; still throws if the result is not complete.
    static Fan2 from_unsorted_rays(std::vector<LatticeVector> rays);

    std::size_t nrays() const { return rays_.size(); }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const LatticeVector& ray(std::size_t i) const { return rays_[i]; }

    // Maximal cone i spans rays i and i+1 (cyclically).
    std::size_t ncones() const { return rays_.size(); }
    std::pair<std::size_t, std::size_t> cone(std::size_t i) const {
        return {i, (i + 1) % rays_.size()};
    }
    Int cone_multiplicity(std::size_t i) const;

    int ray_index(const LatticeVector& v) const;  // -1 if absent

private:
    std::vector<LatticeVector> rays_;
};

// Invariant divisor sum a_rho D_rho as its coefficient vector.
struct TorusDivisor {
    std::vector<Int> coeffs;
};

TorusDivisor zero_divisor(const Fan2& fan);
TorusDivisor ray_divisor(const Fan2& fan, std::size_t rho);
TorusDivisor canonical_divisor(const Fan2& fan);  // -sum of all ray divisors
TorusDivisor subtract(const TorusDivisor& a, const TorusDivisor& b);

struct DivisorPolytope {
    std::vector<LatticeVector> lattice_points;
    std::size_t h0() const { return lattice_points.size(); }
};

struct CohomologyVector {
    Int h0 = 0, h1 = 0, h2 = 0;
    bool operator==(const CohomologyVector& o) const {
        return h0 == o.h0 && h1 == o.h1 && h2 == o.h2;
    }
    std::string to_string() const;
};

// Fan of the weighted projective plane P(1, a1, a2): rays (1,0), (0,1),
// (-a1,-a2). Rejects triples (1,a1,a2) that are not pairwise coprime.
Fan2 wps_fan(const Int& a1, const Int& a2);

// Subdivide the given maximal cone by the ray a1*u + a2*v (gcd(a1,a2)=1).
Fan2 weighted_blowup(const Fan2& fan, std::size_t cone_index, const Int& a1, const Int& a2);

// Quotient type of the affine chart of cone(u, v), canonical form.
CyclicQuotientType cone_quotient_type(const LatticeVector& u, const LatticeVector& v);

// Lattice points of { m : <m, u_rho> >= -a_rho }; h0 = count.
DivisorPolytope divisor_sections(const Fan2& fan, const TorusDivisor& d);

// Full (h0, h1, h2) by arc-support counting over a certified search box.
CohomologyVector divisor_cohomology(const Fan2& fan, const TorusDivisor& d);

// Matrix (D_rho . D_rho'); adjacent rays pair to 1/mult(cone), distinct
// non-adjacent rays to 0, self-intersections solved from the character
// relations for m = (1,0), (0,1).
RatMatrix intersection_matrix(const Fan2& fan);

bool is_nef(const Fan2& fan, const TorusDivisor& d);

enum class TangentStatus { Ok, Undetermined, Discrepancy };

// Cohomology of the tangent sheaf via the dual Euler-type sequence
// 0 -> O^2 -> sum O(D_rho) -> T -> 0, valid when the class group is free
// of rank two. The report keeps the raw ledger and flags, never guesses.
struct TangentCohomologyReport {
    CohomologyVector value;            // ledger values from the sequence
    CohomologyVector structure_sheaf;  // computed h(O)
    std::vector<CohomologyVector> ray_cohomology;
    Int class_group_rank = 0;          // #rays - 2
    TangentStatus status = TangentStatus::Ok;
    std::string note;
};

TangentCohomologyReport tangent_cohomology(const Fan2& fan);

// Named fans used across fixtures and tests.
Fan2 projective_plane_fan();
Fan2 p1xp1_fan();
Fan2 hirzebruch1_fan();
Fan2 m12_fan();  // (2,3)-blow-up of P(1,2,3) at its smooth fixed point

}  // namespace toricdef
