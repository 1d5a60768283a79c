#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "toricdef/deformation.hpp"
#include "toricdef/presets.hpp"

using namespace toricdef;

namespace {

Polynomial parse(const Ring& r, const std::string& s) { return Polynomial::parse(r, s); }

std::vector<Polynomial> parse_vector(const Ring& r, const std::vector<std::string>& v) {
    std::vector<Polynomial> out;
    for (const std::string& s : v) out.push_back(parse(r, s));
    return out;
}

}  // namespace

TEST_CASE("jacobian matrices of the fixture ideals") {
    Ring r3({"x", "y", "z"});
    GradedMatrix j1 = jacobian({parse(r3, "z^3 - x*y")});
    REQUIRE(j1.rows == 3);
    REQUIRE(j1.cols == 1);
    CHECK(j1.at(0, 0).to_string() == "-y");
    CHECK(j1.at(1, 0).to_string() == "-x");
    CHECK(j1.at(2, 0).to_string() == "3*z^2");

    GradedMatrix j2 = jacobian({parse(r3, "z^2 - x*y")});
    CHECK(j2.at(2, 0).to_string() == "2*z");

    SingularityPresentation cone = preset("twisted-cubic-cone");
    GradedMatrix j3 = jacobian(cone.generators);
    REQUIRE(j3.rows == 4);
    REQUIRE(j3.cols == 3);
    const GradedMatrix& fixture = cone.matrices.at("jacobian");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(j3.at(i, j) == fixture.at(i, j));
}

TEST_CASE("hypersurface first-order deformations") {
    Ring r3({"x", "y", "z"});
    T1Report a2 = hypersurface_t1(parse(r3, "z^3 - x*y"));
    CHECK(a2.status == T1Status::Ok);
    CHECK(a2.total == 2);
    CHECK(a2.ext2_known);
    CHECK(a2.ext2 == 0);

    T1Report a1 = hypersurface_t1(parse(r3, "z^2 - x*y"));
    CHECK(a1.total == 1);

    Ring r2({"x", "y"});
    T1Report node = hypersurface_t1(parse(r2, "x*y"));
    CHECK(node.total == 1);

    // whole double line: not isolated
    T1Report fat = hypersurface_t1(parse(r2, "x^2"));
    CHECK(fat.status == T1Status::Infinite);
}

TEST_CASE("membership of the listed kernel generators") {
    SingularityPresentation cone = preset("twisted-cubic-cone");
    const Ring& r = cone.ring;
    GradedMatrix syz_t = cone.matrices.at("syzygy").transpose();

    std::vector<std::vector<Polynomial>> kernel_claims = {
        parse_vector(r, {"-w", "z", "0"}), parse_vector(r, {"z", "-y", "0"}),
        parse_vector(r, {"0", "y", "-w"}), parse_vector(r, {"y", "0", "-z"}),
        parse_vector(r, {"0", "-x", "z"}), parse_vector(r, {"-x", "0", "y"})};
    std::vector<bool> in_kernel = verify_membership(kernel_claims, syz_t, cone);
    for (bool b : in_kernel) CHECK(b);

    GradedMatrix psi_t = cone.matrices.at("psi").transpose();
    std::vector<std::vector<Polynomial>> psi_claims = {parse_vector(r, {"w", "z"}),
                                                       parse_vector(r, {"z", "y"}),
                                                       parse_vector(r, {"y", "x"})};
    for (bool b : verify_membership(psi_claims, psi_t, cone)) CHECK(b);

    std::vector<std::vector<Polynomial>> bogus = {parse_vector(r, {"1", "0", "0"})};
    CHECK(!verify_membership(bogus, syz_t, cone)[0]);
}

TEST_CASE("resolution chain composites vanish modulo the ideal") {
    SingularityPresentation cone = preset("twisted-cubic-cone");
    ComplexReport chain = verify_complex(
        {cone.matrices.at("psi"), cone.matrices.at("syzygy"), cone.matrices.at("jacobian")},
        cone);
    CHECK(chain.ok);

    // transposed pair runs the other way
    ComplexReport dual = verify_complex(
        {cone.matrices.at("jacobian").transpose(), cone.matrices.at("syzygy").transpose(),
         cone.matrices.at("psi").transpose()},
        cone);
    CHECK(dual.ok);

    // sign flip: residues become data
    SingularityPresentation broken = cone;
    GradedMatrix bad = broken.matrices.at("syzygy");
    bad.at(0, 0) = -bad.at(0, 0);
    ComplexReport rep = verify_complex({broken.matrices.at("psi"), bad}, broken);
    CHECK(!rep.ok);
    CHECK(!rep.residues.empty());
}

TEST_CASE("graded subquotient reproduces the cone deformation numbers") {
    SingularityPresentation cone = preset("twisted-cubic-cone");
    GradedMatrix syz_t = cone.matrices.at("syzygy").transpose();
    GradedMatrix jac_t = cone.matrices.at("jacobian").transpose();
    GradedMatrix psi_t = cone.matrices.at("psi").transpose();

    T1Report t1 = graded_subquotient_dim(syz_t, jac_t, cone);
    CHECK(t1.status == T1Status::Ok);
    CHECK(t1.total == 2);

    T1Report ext2 = graded_subquotient_dim(psi_t, syz_t, cone);
    CHECK(ext2.status == T1Status::Ok);
    CHECK(ext2.total == 0);

    // complex failure is detected, not silently summed
    T1Report bad = graded_subquotient_dim(syz_t, psi_t, cone);
    CHECK(bad.status == T1Status::ComplexFailure);
    CHECK_THROWS_AS(graded_subquotient_dim(jac_t, syz_t, cone), std::invalid_argument);
}

TEST_CASE("hypersurface route agrees with the graded subquotient route") {
    SingularityPresentation pres = preset("a2-like");
    // rank-one presentation: trivial syzygy module, so the outer map is
    // the empty matrix and the subquotient is the jacobian cokernel
    GradedMatrix outer;
    outer.rows = 0;
    outer.cols = 1;
    GradedMatrix inner = jacobian(pres.generators).transpose();

    T1Report graded = graded_subquotient_dim(outer, inner, pres);
    CHECK(graded.status == T1Status::Ok);
    CHECK(graded.total == 2);

    T1Report direct = hypersurface_t1(pres.generators[0]);
    CHECK(direct.total == graded.total);
}

TEST_CASE("degenerate zero-map control") {
    SingularityPresentation point;
    point.label = "point";
    point.ring = Ring({"x"});
    point.weights = {1};
    point.generators = {Polynomial::variable(point.ring, 0)};

    GradedMatrix zero;
    zero.rows = 1;
    zero.cols = 1;
    zero.entries = {Polynomial::zero(point.ring)};

    T1Report rep = graded_subquotient_dim(zero, zero, point);
    CHECK(rep.status == T1Status::Ok);
    // ker = everything, im = 0: the total is the whole quotient, here K
    CHECK(rep.total == 1);
}

TEST_CASE("per-degree data is stable under the monomial order") {
    SingularityPresentation cone = preset("twisted-cubic-cone");
    SingularityPresentation lex_cone;
    lex_cone.label = cone.label + "-lex";
    lex_cone.ring = Ring({"x", "y", "z", "w"}, MonomialOrder::lex());
    lex_cone.weights = cone.weights;
    for (const Polynomial& g : cone.generators)
        lex_cone.generators.push_back(Polynomial::parse(lex_cone.ring, g.to_string()));
    for (const auto& [name, m] : cone.matrices) {
        GradedMatrix copy;
        copy.rows = m.rows;
        copy.cols = m.cols;
        for (const Polynomial& e : m.entries)
            copy.entries.push_back(Polynomial::parse(lex_cone.ring, e.to_string()));
        lex_cone.matrices[name] = copy;
    }

    T1Report a = graded_subquotient_dim(cone.matrices.at("syzygy").transpose(),
                                        cone.matrices.at("jacobian").transpose(), cone);
    T1Report b = graded_subquotient_dim(lex_cone.matrices.at("syzygy").transpose(),
                                        lex_cone.matrices.at("jacobian").transpose(), lex_cone);
    REQUIRE(a.per_degree.size() == b.per_degree.size());
    for (std::size_t i = 0; i < a.per_degree.size(); ++i) {
        CHECK(a.per_degree[i].first == b.per_degree[i].first);
        CHECK(a.per_degree[i].second == b.per_degree[i].second);
    }
}

TEST_CASE("doubling the degree bound never changes a certified total") {
    for (const std::string& name : {"a1", "a2-like", "twisted-cubic-cone", "sym3-cone"}) {
        SingularityPresentation pres = preset(name);
        GradedMatrix outer, inner;
        if (pres.matrices.count("syzygy")) {
            outer = pres.matrices.at("syzygy").transpose();
            inner = pres.matrices.at("jacobian").transpose();
        } else if (pres.matrices.count("alpha")) {
            // dual of the first resolution map against the auxiliary map
            outer = pres.matrices.at("alpha").transpose();
            inner = pres.matrices.at("gamma");
        } else {
            outer.rows = 0;
            outer.cols = 1;
            inner = jacobian(pres.generators).transpose();
        }
        SubquotientOptions small, large;
        small.degree_bound = 12;
        large.degree_bound = 24;
        T1Report a = graded_subquotient_dim(outer, inner, pres, small);
        T1Report b = graded_subquotient_dim(outer, inner, pres, large);
        REQUIRE(a.status == T1Status::Ok);
        REQUIRE(b.status == T1Status::Ok);
        CHECK(a.total == b.total);
    }
}

TEST_CASE("the dualized resolution is exact at its middle term") {
    SingularityPresentation sym3 = preset("sym3-cone");
    T1Report rep = graded_subquotient_dim(sym3.matrices.at("alpha").transpose(),
                                          sym3.matrices.at("gamma"), sym3);
    CHECK(rep.status == T1Status::Ok);
    CHECK(rep.total == 0);
}

TEST_CASE("sym3 fixture composites") {
    SingularityPresentation sym3 = preset("sym3-cone");
    ComplexReport first =
        verify_complex({sym3.matrices.at("alpha"), sym3.matrices.at("beta")}, sym3);
    CHECK(first.ok);
    ComplexReport second = verify_complex(
        {sym3.matrices.at("gamma"), sym3.matrices.at("alpha").transpose()}, sym3);
    CHECK(second.ok);

    // the raw spot entry before reduction: row 1, col 2 of the composite
    GroebnerBasis gb = buchberger(sym3.generators, sym3.ring);
    const GradedMatrix& alpha = sym3.matrices.at("alpha");
    const GradedMatrix& beta = sym3.matrices.at("beta");
    Polynomial spot = Polynomial::zero(sym3.ring);
    for (std::size_t k = 0; k < beta.cols; ++k)
        spot = spot + beta.at(0, k) * alpha.at(k, 1);
    CHECK(spot.to_string() == "s2^2 - s1*s3");
    CHECK(normal_form(spot, gb).is_zero());
}

TEST_CASE("local-to-global assembly") {
    DeformationLedger led = local_to_global(0, 0, {2, 1, 1, 2}, {0, 0, 0, 0});
    CHECK(led.ext1_exact);
    CHECK(led.ext1_lo == 6);
    CHECK(led.ext2_exact);
    CHECK(led.ext2_lo == 0);

    DeformationLedger rigid = local_to_global(0, 0, {}, {});
    CHECK(rigid.ext1_exact);
    CHECK(rigid.ext1_lo == 0);
    CHECK(rigid.ext2_exact);
    CHECK(rigid.ext2_lo == 0);

    DeformationLedger mixed = local_to_global(3, 0, {1}, {0});
    CHECK(mixed.ext1_exact);
    CHECK(mixed.ext1_lo == 4);
    CHECK(mixed.ext2_exact);
    CHECK(mixed.ext2_lo == 0);

    DeformationLedger fuzzy = local_to_global(1, 2, {3}, {1});
    CHECK(!fuzzy.ext1_exact);
    CHECK(fuzzy.ext1_lo == 2);
    CHECK(fuzzy.ext1_hi == 4);
    CHECK(!fuzzy.ext2_exact);
    CHECK(fuzzy.ext2_lo == 0);
    CHECK(fuzzy.ext2_hi == 3);
}

TEST_CASE("presentation validation") {
    SingularityPresentation bad;
    bad.label = "bad";
    bad.ring = Ring({"x", "y"});
    bad.weights = {1, 1};
    bad.generators = {Polynomial::parse(bad.ring, "x + y^2")};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    for (const std::string& name : preset_names()) CHECK_NOTHROW(preset(name).validate());
}
