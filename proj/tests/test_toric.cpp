#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "toricdef/fan.hpp"
#include "toricdef/projective.hpp"

using namespace toricdef;

namespace {

TorusDivisor divisor(const Fan2& fan, std::vector<int> coeffs) {
    TorusDivisor d;
    for (int c : coeffs) d.coeffs.emplace_back(c);
    REQUIRE(d.coeffs.size() == fan.nrays());
    return d;
}

Rat pair_divisors(const RatMatrix& m, const TorusDivisor& a, const TorusDivisor& b) {
    Rat acc(0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            acc += Rat(a.coeffs[i]) * m(i, j) * Rat(b.coeffs[j]);
    return acc;
}

Fan2 random_complete_fan(std::mt19937& rng) {
    std::uniform_int_distribution<int> count_dist(3, 6), coord_dist(-4, 4);
    for (;;) {
        std::vector<LatticeVector> rays;
        int want = count_dist(rng);
        for (int i = 0; i < want; ++i) {
            Int x = coord_dist(rng), y = coord_dist(rng);
            if (x == 0 && y == 0) continue;
            rays.push_back(primitive({x, y}));
        }
        if (rays.size() < 3) continue;
        try {
            return Fan2::from_unsorted_rays(rays);
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
}

Fan2 random_smooth_fan(std::mt19937& rng) {
    std::uniform_int_distribution<int> base_dist(0, 2), extra_dist(0, 3);
    Fan2 fan = projective_plane_fan();
    int base = base_dist(rng);
    if (base == 1) fan = p1xp1_fan();
    if (base == 2) fan = hirzebruch1_fan();
    int blowups = extra_dist(rng);
    for (int b = 0; b < blowups; ++b) {
        std::uniform_int_distribution<std::size_t> cone_dist(0, fan.ncones() - 1);
        fan = weighted_blowup(fan, cone_dist(rng), 1, 1);
    }
    return fan;
}

TorusDivisor random_divisor(std::mt19937& rng, const Fan2& fan) {
    std::uniform_int_distribution<int> coeff_dist(-3, 3);
    TorusDivisor d = zero_divisor(fan);
    for (Int& c : d.coeffs) c = coeff_dist(rng);
    return d;
}

}  // namespace

TEST_CASE("weighted projective plane fans") {
    Fan2 p2 = wps_fan(1, 1);
    CHECK(p2.nrays() == 3);
    CHECK(p2.ray(2) == LatticeVector{-1, -1});

    Fan2 w = wps_fan(2, 3);
    CHECK(w.ray(2) == LatticeVector{-2, -3});
    CHECK(cone_quotient_type(w.ray(1), w.ray(2)).to_string() == "1/2(1,1)");
    CHECK(cone_quotient_type(w.ray(0), w.ray(2)).to_string() == "1/3(1,2)");

    CHECK_THROWS_AS(wps_fan(2, 2), std::invalid_argument);
}

TEST_CASE("weighted blow-ups insert one primitive ray") {
    Fan2 p2 = projective_plane_fan();
    Fan2 bl = weighted_blowup(p2, 0, 1, 1);
    CHECK(bl.nrays() == 4);
    CHECK(bl.ray(1) == LatticeVector{1, 1});
    for (std::size_t c = 0; c < bl.ncones(); ++c) CHECK(bl.cone_multiplicity(c) == 1);

    Fan2 m12 = weighted_blowup(wps_fan(2, 3), 0, 2, 3);
    REQUIRE(m12.nrays() == 4);
    CHECK(m12.ray(0) == LatticeVector{1, 0});
    CHECK(m12.ray(1) == LatticeVector{2, 3});
    CHECK(m12.ray(2) == LatticeVector{0, 1});
    CHECK(m12.ray(3) == LatticeVector{-2, -3});
    const char* expected[4] = {"1/3(1,1)", "1/2(1,1)", "1/2(1,1)", "1/3(1,2)"};
    for (std::size_t c = 0; c < 4; ++c) {
        auto [i, j] = m12.cone(c);
        CHECK(cone_quotient_type(m12.ray(i), m12.ray(j)).to_string() == expected[c]);
    }

    CHECK_THROWS_AS(weighted_blowup(p2, 0, 2, 4), std::invalid_argument);
}

TEST_CASE("cone quotient types") {
    CHECK(cone_quotient_type({1, 0}, {0, 1}).is_smooth());
    CHECK(cone_quotient_type({0, 1}, {-2, -3}).to_string() == "1/2(1,1)");
    CHECK(cone_quotient_type({1, 0}, {-2, -3}).to_string() == "1/3(1,2)");
    CHECK_THROWS_AS(cone_quotient_type({1, 0}, {-1, 0}), std::invalid_argument);
}

TEST_CASE("divisor sections on the blown-up weighted plane") {
    Fan2 fan = m12_fan();
    CHECK(divisor_sections(fan, zero_divisor(fan)).h0() == 1);
    for (std::size_t r = 0; r < 4; ++r)
        CHECK(divisor_sections(fan, ray_divisor(fan, r)).h0() == 1);
    CHECK(divisor_sections(fan, divisor(fan, {-1, 0, 0, 0})).h0() == 0);
}

TEST_CASE("divisor cohomology fixtures") {
    Fan2 fan = m12_fan();
    CHECK(divisor_cohomology(fan, zero_divisor(fan)) == CohomologyVector{1, 0, 0});
    for (std::size_t r = 0; r < 4; ++r)
        CHECK(divisor_cohomology(fan, ray_divisor(fan, r)) == CohomologyVector{1, 0, 0});

    Fan2 p2 = projective_plane_fan();
    CHECK(divisor_cohomology(p2, canonical_divisor(p2)) == CohomologyVector{0, 0, 1});
    // hyperplane class on the plane
    CHECK(divisor_cohomology(p2, ray_divisor(p2, 0)) == CohomologyVector{3, 0, 0});
}

TEST_CASE("intersection matrices") {
    Fan2 p2 = projective_plane_fan();
    RatMatrix mp2 = intersection_matrix(p2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(mp2(i, j) == Rat(1));

    Fan2 fan = m12_fan();
    RatMatrix m = intersection_matrix(fan);
    const char* expected[4][4] = {{"0", "1/3", "0", "1/3"},
                                  {"1/3", "-1/6", "1/2", "0"},
                                  {"0", "1/2", "0", "1/2"},
                                  {"1/3", "0", "1/2", "1/6"}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(rat_to_string(m(i, j)) == expected[i][j]);
            CHECK(m(i, j) == m(j, i));
        }

    Fan2 f1 = hirzebruch1_fan();
    RatMatrix mf1 = intersection_matrix(f1);
    int exceptional = f1.ray_index({1, 1});
    REQUIRE(exceptional >= 0);
    CHECK(mf1(static_cast<std::size_t>(exceptional), static_cast<std::size_t>(exceptional)) ==
          Rat(-1));
}

TEST_CASE("nef flags on the blown-up weighted plane") {
    Fan2 fan = m12_fan();
    CHECK(is_nef(fan, ray_divisor(fan, 0)));
    CHECK(!is_nef(fan, ray_divisor(fan, 1)));
    CHECK(is_nef(fan, ray_divisor(fan, 2)));
    CHECK(is_nef(fan, ray_divisor(fan, 3)));
    CHECK(is_nef(fan, zero_divisor(fan)));
}

TEST_CASE("tangent sheaf cohomology via the rank-two sequence") {
    TangentCohomologyReport m12 = tangent_cohomology(m12_fan());
    CHECK(m12.status == TangentStatus::Ok);
    CHECK(m12.value == CohomologyVector{2, 0, 0});

    TangentCohomologyReport quadric = tangent_cohomology(p1xp1_fan());
    CHECK(quadric.status == TangentStatus::Ok);
    CHECK(quadric.value == CohomologyVector{6, 0, 0});

    // Three rays: the rank-two sequence does not apply; the raw ledger
    // value 7 must be reported with a discrepancy flag against the
    // classical value 8.
    TangentCohomologyReport plane = tangent_cohomology(projective_plane_fan());
    CHECK(plane.status == TangentStatus::Discrepancy);
    CHECK(plane.value.h0 == 7);
    CHECK(plane.class_group_rank == 1);
}

TEST_CASE("closed-form projective space cohomology") {
    for (int n = 3; n <= 12; ++n)
        for (int i = 0; i <= n - 2; ++i) CHECK(bott_projective(n - 2, Int(-1), i) == 0);
    CHECK(bott_projective(1, Int(2), 0) == 3);
    CHECK(bott_projective(3, Int(-5), 3) == 4);
    CHECK(bott_projective(2, Int(0), 0) == 1);
    CHECK(bott_projective(2, Int(-3), 2) == 1);

    for (int k = 1; k <= 6; ++k)
        for (int d = -10; d <= 10; ++d) CHECK(serre_duality_check(k, Int(d)));
}

TEST_CASE("kunneth convolution") {
    std::vector<Int> a = bott_table(3, Int(-1));
    std::vector<Int> b = bott_table(2, Int(-1));
    for (int i = 0; i <= 5; ++i) CHECK(kunneth(a, b, i) == 0);

    std::vector<Int> point = {Int(1)};
    CHECK(kunneth(point, point, 0) == 1);
    for (int i = 1; i <= 3; ++i) CHECK(kunneth(point, point, i) == 0);

    std::vector<Int> h1 = {Int(0), Int(1), Int(0)};
    CHECK(kunneth(h1, h1, 2) == 1);
}

TEST_CASE("sections agree with cohomology h0 on random fans") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        Fan2 fan = random_complete_fan(rng);
        TorusDivisor d = random_divisor(rng, fan);
        CohomologyVector h = divisor_cohomology(fan, d);
        CHECK(h.h0 == Int(divisor_sections(fan, d).h0()));
        // combinatorial Serre duality on the surface
        CHECK(h.h2 == Int(divisor_sections(fan, subtract(canonical_divisor(fan), d)).h0()));
    }
}

TEST_CASE("structure sheaf and Riemann-Roch on random smooth fans") {
    std::mt19937 rng(43);
    int trials = 0;
    for (; trials < 55; ++trials) {
        Fan2 fan = random_smooth_fan(rng);
        for (std::size_t c = 0; c < fan.ncones(); ++c) REQUIRE(fan.cone_multiplicity(c) == 1);
        CHECK(divisor_cohomology(fan, zero_divisor(fan)) == CohomologyVector{1, 0, 0});

        TorusDivisor d = random_divisor(rng, fan);
        CohomologyVector h = divisor_cohomology(fan, d);
        RatMatrix m = intersection_matrix(fan);
        TorusDivisor d_minus_k = subtract(d, canonical_divisor(fan));
        Rat rr = Rat(1) + pair_divisors(m, d, d_minus_k) / Rat(2);
        CHECK(Rat(h.h0 - h.h1 + h.h2) == rr);
    }
    CHECK(trials >= 50);
}
