#include "toricdef/scenario.hpp"

#include <sstream>
#include <stdexcept>

#include "toricdef/presets.hpp"
#include "toricdef/projective.hpp"

namespace toricdef {

std::string row_status_name(RowStatus s) {
    switch (s) {
        case RowStatus::Match: return "MATCH";
        case RowStatus::Mismatch: return "MISMATCH";
        case RowStatus::Undetermined: return "UNDETERMINED";
    }
    return "UNDETERMINED";
}

bool ScenarioReport::match() const {
    for (const ScenarioRow& r : rows)
        if (r.status != RowStatus::Match) return false;
    return true;
}

std::string ScenarioReport::verdict() const {
    bool undetermined = false;
    for (const ScenarioRow& r : rows) {
        if (r.status == RowStatus::Mismatch) return "MISMATCH";
        if (r.status == RowStatus::Undetermined) undetermined = true;
    }
    return undetermined ? "UNDETERMINED" : "MATCH";
}

namespace {

void add_row(ScenarioReport& rep, const std::string& id, const std::string& claim,
             const std::string& computed, const std::string& expected) {
    RowStatus st = (computed == expected) ? RowStatus::Match : RowStatus::Mismatch;
    rep.rows.push_back({id, claim, computed, expected, st});
}

std::string rat_matrix_to_string(const RatMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            os << rat_to_string(m(i, j));
        }
    }
    return os.str();
}

}  // namespace

std::vector<std::pair<int, int>> boundary_partitions(int n) {
    std::vector<std::pair<int, int>> out;
    for (int n1 = 2; n1 <= n / 2; ++n1) out.emplace_back(n1, n - n1);
    return out;
}

ScenarioReport scenario_m12_toric() { return scenario_m12_toric(m12_fan()); }

ScenarioReport scenario_m12_toric(const Fan2& fan) {
    ScenarioReport rep;
    rep.scenario = "m12-toric";

    add_row(rep, "ray-count", "the fan has four rays", std::to_string(fan.nrays()), "4");
    if (fan.nrays() != 4) return rep;

    for (std::size_t r = 0; r < 4; ++r) {
        CohomologyVector h = divisor_cohomology(fan, ray_divisor(fan, r));
        std::string rho = std::to_string(r + 1);
        add_row(rep, "h0-D" + rho, "h0 of the ray divisor D" + rho, h.h0.str(), "1");
        add_row(rep, "h12-D" + rho, "h1 and h2 of D" + rho + " vanish",
                "(" + h.h1.str() + ", " + h.h2.str() + ")", "(0, 0)");
    }

    TangentCohomologyReport tangent = tangent_cohomology(fan);
    std::string tangent_str = tangent.value.to_string();
    if (tangent.status != TangentStatus::Ok) tangent_str += " [" + tangent.note + "]";
    add_row(rep, "tangent", "tangent sheaf cohomology (h0, h1, h2)", tangent_str, "(2, 0, 0)");

    const char* entries[4][4] = {{"0", "1/3", "0", "1/3"},
                                 {"1/3", "-1/6", "1/2", "0"},
                                 {"0", "1/2", "0", "1/2"},
                                 {"1/3", "0", "1/2", "1/6"}};
    std::ostringstream expected_str;
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) expected_str << "; ";
        for (std::size_t j = 0; j < 4; ++j) {
            if (j) expected_str << " ";
            expected_str << entries[i][j];
        }
    }
    add_row(rep, "intersection-matrix", "pairing matrix of the four ray divisors",
            rat_matrix_to_string(intersection_matrix(fan)), expected_str.str());

    const char* nef_expected[4] = {"true", "false", "true", "true"};
    for (std::size_t r = 0; r < 4; ++r) {
        bool nef = is_nef(fan, ray_divisor(fan, r));
        std::string rho = std::to_string(r + 1);
        add_row(rep, "nef-D" + rho, "D" + rho + " pairs non-negatively with every ray divisor",
                nef ? "true" : "false", nef_expected[r]);
    }

    const char* cone_expected[4] = {"1/3(1,1)", "1/2(1,1)", "1/2(1,1)", "1/3(1,2)"};
    for (std::size_t c = 0; c < 4; ++c) {
        auto [i, j] = fan.cone(c);
        CyclicQuotientType t = cone_quotient_type(fan.ray(i), fan.ray(j));
        add_row(rep, "cone-type-" + std::to_string(c + 1),
                "quotient type of the chart on cone " + std::to_string(c + 1), t.to_string(),
                cone_expected[c]);
    }
    return rep;
}

namespace {

std::string t1_value_string(const T1Report& r) {
    switch (r.status) {
        case T1Status::Ok: return r.total.str();
        case T1Status::Infinite: return "INFINITE";
        case T1Status::NoStabilization: return "NO-STABILIZATION";
        case T1Status::ComplexFailure: return "COMPLEX-FAILURE";
    }
    return "COMPLEX-FAILURE";
}

}  // namespace

ScenarioReport scenario_m12_kuranishi(const KuranishiOptions& opt) {
    ScenarioReport rep;
    rep.scenario = "m12-kuranishi";

    T1Report t1_a2 = hypersurface_t1(Polynomial::parse(Ring({"x", "y", "z"}), "z^3 - x*y"));
    T1Report t1_a1 = hypersurface_t1(Polynomial::parse(Ring({"x", "y", "z"}), "z^2 - x*y"));

    SingularityPresentation cone =
        opt.cone_presentation ? *opt.cone_presentation : preset("twisted-cubic-cone");
    SubquotientOptions sub;
    sub.degree_bound = opt.degree_bound;

    auto run_pair = [&](const char* outer, const char* inner) -> T1Report {
        if (!cone.matrices.count(outer) || !cone.matrices.count(inner)) {
            T1Report r;
            r.status = T1Status::ComplexFailure;
            r.note = "presentation lacks the named resolution matrices";
            return r;
        }
        return graded_subquotient_dim(cone.matrices.at(outer).transpose(),
                                      cone.matrices.at(inner).transpose(), cone, sub);
    };
    T1Report t1_cone = run_pair("syzygy", "jacobian");
    T1Report ext2_cone = run_pair("psi", "syzygy");

    add_row(rep, "local-t1-dims",
            "local first-order deformation dimensions at the four singular points",
            "[" + t1_value_string(t1_a2) + ", " + t1_value_string(t1_a1) + ", " +
                t1_value_string(t1_a1) + ", " + t1_value_string(t1_cone) + "]",
            "[2, 1, 1, 2]");
    add_row(rep, "cone-ext2", "obstruction space of the cubic-cone point vanishes",
            t1_value_string(ext2_cone), "0");

    TangentCohomologyReport tangent = tangent_cohomology(m12_fan());
    add_row(rep, "tangent-h1", "no nontrivial locally trivial deformations (h1 of T)",
            tangent.value.h1.str(), "0");
    add_row(rep, "tangent-h2", "locally trivial obstructions vanish (h2 of T)",
            tangent.value.h2.str(), "0");

    bool locals_ok = t1_a2.status == T1Status::Ok && t1_a1.status == T1Status::Ok &&
                     t1_cone.status == T1Status::Ok && ext2_cone.status == T1Status::Ok;
    if (locals_ok && tangent.status == TangentStatus::Ok) {
        std::vector<Int> local_t1 = {t1_a2.total, t1_a1.total, t1_a1.total, t1_cone.total};
        std::vector<Int> local_ext2 = {0, 0, 0, ext2_cone.total};
        DeformationLedger led =
            local_to_global(tangent.value.h1, tangent.value.h2, local_t1, local_ext2);
        add_row(rep, "ext1-global", "global first-order deformation space dimension",
                led.ext1_exact ? led.ext1_lo.str() + " EXACT"
                               : led.ext1_lo.str() + ".." + led.ext1_hi.str(),
                "6 EXACT");
        add_row(rep, "ext2-global", "global obstruction space dimension",
                led.ext2_exact ? led.ext2_lo.str() + " EXACT"
                               : led.ext2_lo.str() + ".." + led.ext2_hi.str(),
                "0 EXACT");
    } else {
        add_row(rep, "ext1-global", "global first-order deformation space dimension",
                "not assembled", "6 EXACT");
        add_row(rep, "ext2-global", "global obstruction space dimension", "not assembled",
                "0 EXACT");
    }
    return rep;
}

ScenarioReport scenario_m0n_rigidity(int n) { return scenario_m0n_rigidity(n, {}); }

ScenarioReport scenario_m0n_rigidity(int n,
                                     const std::map<std::string, std::string>& expected_override) {
    if (n < 3) throw std::invalid_argument("rigidity scenario requires n >= 3");

    ScenarioReport rep;
    rep.scenario = "m0n-rigidity";

    auto expect = [&](const std::string& id, const std::string& dflt) -> std::string {
        auto it = expected_override.find(id);
        return it == expected_override.end() ? dflt : it->second;
    };
    auto add = [&](const std::string& id, const std::string& claim, const std::string& computed,
                   const std::string& dflt) { add_row(rep, id, claim, computed, expect(id, dflt)); };

    if (n == 3) {
        add("trivially-rigid", "three marked points leave no moduli: zero tangent bundle",
            "RIGID", "RIGID");
        return rep;
    }

    // Cohomology table of O(-1) on P^k; a point (k = 0) carries the
    // trivial bundle instead.
    auto twist_table = [](int k) -> std::vector<Int> {
        if (k == 0) return {Int(1)};
        return bott_table(k, Int(-1));
    };

    for (int i = 0; i <= n - 2; ++i)
        add("psi-dual-vanishing-i" + std::to_string(i),
            "degree " + std::to_string(i) + " cohomology of O(-1) on P^" + std::to_string(n - 2),
            bott_projective(n - 2, Int(-1), i).str(), "0");

    std::vector<std::pair<int, int>> parts = boundary_partitions(n);
    add("partition-count", "number of unordered boundary splittings",
        std::to_string(parts.size()), std::to_string(n / 2 - 1));

    std::vector<bool> boundary_vanishes(static_cast<std::size_t>(n), true);
    for (const auto& [n1, n2] : parts) {
        std::vector<Int> ta = twist_table(n1 - 2);
        std::vector<Int> tb = twist_table(n2 - 2);
        int top = (n1 - 2) + (n2 - 2);
        for (int i = 0; i <= top; ++i) {
            Int v = kunneth(ta, tb, i);
            std::string dflt = "0";
            if (n == 4 && n1 == 2 && n2 == 2 && i == 0) dflt = "1";  // point x point
            if (v != 0 && i < n) boundary_vanishes[static_cast<std::size_t>(i)] = false;
            add("kunneth-" + std::to_string(n1) + "-" + std::to_string(n2) + "-i" +
                    std::to_string(i),
                "degree " + std::to_string(i) + " product cohomology on the (" +
                    std::to_string(n1) + "," + std::to_string(n2) + ") boundary component",
                v.str(), dflt);
        }
    }

    for (int i = 0; i <= n - 3; ++i)
        add("log-rigidity-i" + std::to_string(i),
            "degree " + std::to_string(i) + " log tangent cohomology vanishes",
            bott_projective(n - 2, Int(-1), i + 1).str(), "0");

    int first_tangent_row = (n == 4) ? 1 : 0;
    for (int i = first_tangent_row; i <= std::max(n - 3, 1); ++i) {
        bool forced = (bott_projective(n - 2, Int(-1), i + 1) == 0) &&
                      boundary_vanishes[static_cast<std::size_t>(i)];
        add("tangent-vanishing-i" + std::to_string(i),
            "degree " + std::to_string(i) + " tangent cohomology vanishes",
            forced ? "0" : "not forced", "0");
    }
    if (n == 4)
        add("tangent-h0-exception", "four markings: global vector fields of the line",
            bott_projective(1, Int(2), 0).str(), "3");

    bool rigid = false;
    for (const ScenarioRow& r : rep.rows)
        if (r.id == "tangent-vanishing-i1") rigid = (r.computed == "0");
    add("rigidity", "no nontrivial first-order deformations", rigid ? "RIGID" : "NOT-RIGID",
        "RIGID");
    return rep;
}

ScenarioReport scenario_sym3_resolutions(const Sym3Options& opt) {
    ScenarioReport rep;
    rep.scenario = "sym3-verify";

    SingularityPresentation sym3 = opt.sym3 ? *opt.sym3 : preset("sym3-cone");
    SingularityPresentation cone =
        opt.cone_presentation ? *opt.cone_presentation : preset("twisted-cubic-cone");

    auto composite_row = [&](const std::string& id, const std::string& claim,
                             const std::vector<GradedMatrix>& maps) {
        ComplexReport cx = verify_complex(maps, sym3);
        std::string computed = "composite vanishes";
        if (!cx.ok) {
            std::ostringstream os;
            os << cx.residues.size() << " nonzero residue(s), first at row "
               << (cx.residues[0].row + 1) << " col " << (cx.residues[0].col + 1) << ": "
               << cx.residues[0].residue;
            computed = os.str();
        }
        add_row(rep, id, claim, computed, "composite vanishes");
    };

    bool have_maps = sym3.matrices.count("alpha") && sym3.matrices.count("beta") &&
                     sym3.matrices.count("gamma");
    if (have_maps) {
        composite_row("beta-alpha-composite",
                      "second resolution map composed with the first vanishes on the cone",
                      {sym3.matrices.at("alpha"), sym3.matrices.at("beta")});
        composite_row("alpha-dual-gamma-composite",
                      "dualized first map composed with the auxiliary map vanishes",
                      {sym3.matrices.at("gamma"), sym3.matrices.at("alpha").transpose()});
    } else {
        add_row(rep, "beta-alpha-composite", "resolution maps present", "missing matrices",
                "composite vanishes");
    }

    SubquotientOptions sub;
    sub.degree_bound = opt.degree_bound;
    std::string rank = "missing matrices";
    if (cone.matrices.count("syzygy") && cone.matrices.count("jacobian")) {
        T1Report t1 = graded_subquotient_dim(cone.matrices.at("syzygy").transpose(),
                                             cone.matrices.at("jacobian").transpose(), cone, sub);
        rank = t1_value_string(t1);
    }
    add_row(rep, "local-t1-rank", "rank of the local deformation sheaf at the cone point", rank,
            "2");
    return rep;
}

ScenarioReport scenario_m12_atlas() { return scenario_m12_atlas(weierstrass_action()); }

ScenarioReport scenario_m12_atlas(const TorusActionSpec& action) {
    ScenarioReport rep;
    rep.scenario = "m12-atlas";

    std::vector<AtlasEntry> entries = atlas_m12(action);
    add_row(rep, "singular-count", "number of singular points", std::to_string(entries.size()),
            "4");

    struct Expected {
        const char* id;
        const char* chart;
        const char* support;
        const char* type;
        const char* order;
    };
    const Expected expected[4] = {
        {"type-z-y", "z", "y", "1/3(1,2)", "3"},
        {"type-z-a", "z", "a", "1/2(1,1)", "4"},
        {"type-y-a", "y", "a", "1/2(1,1)", "4"},
        {"type-y-b", "y", "b", "1/3(1,1)", "6"},
    };
    for (const Expected& e : expected) {
        std::string computed = "absent";
        std::string order = "absent";
        std::string locus;
        for (const AtlasEntry& entry : entries) {
            if (entry.chart == e.chart && entry.support.size() == 1 &&
                entry.support[0] == e.support) {
                computed = entry.type.to_string();
                order = entry.stab.order.str();
                locus = entry.locus;
            }
        }
        add_row(rep, e.id,
                std::string("singular point on chart ") + e.chart + " with support {" +
                    e.support + "}" + (locus.empty() ? "" : ": " + locus),
                computed, e.type);
        add_row(rep, std::string("stab-order-") + e.chart + "-" + e.support,
                std::string("stabilizer order on chart ") + e.chart + " at support {" +
                    e.support + "}",
                order, e.order);
    }
    return rep;
}

}  // namespace toricdef
