#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "toricdef/io.hpp"
#include "toricdef/presets.hpp"
#include "toricdef/scenario.hpp"

namespace {

using namespace toricdef;

constexpr int kExitMatch = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

Int default_degree_bound() {
    if (const char* env = std::getenv("TORICDEF_DEGREE_BOUND")) {
        try {
            return Int(env);
        } catch (...) {
            throw std::runtime_error("TORICDEF_DEGREE_BOUND is not an integer");
        }
    }
    return 12;
}

int emit_report(const ScenarioReport& rep, bool json,
                const nlohmann::ordered_json* extra = nullptr) {
    if (json) {
        nlohmann::ordered_json j = report_to_json(rep);
        if (extra) j["atlas"] = *extra;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << report_to_text(rep);
    }
    return rep.match() ? kExitMatch : kExitMismatch;
}

std::string int_matrix_text(const IntMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            os << m(i, j);
        }
        os << "\n";
    }
    return os.str();
}

nlohmann::ordered_json int_matrix_json(const IntMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

int run_t1(const T1Report& rep, bool json) {
    std::string status;
    switch (rep.status) {
        case T1Status::Ok: status = "OK"; break;
        case T1Status::Infinite: status = "INFINITE"; break;
        case T1Status::NoStabilization: status = "NO-STABILIZATION"; break;
        case T1Status::ComplexFailure: status = "COMPLEX-FAILURE"; break;
    }
    if (json) {
        nlohmann::ordered_json j;
        j["method"] = rep.method;
        j["status"] = status;
        j["total"] = rep.total.str();
        nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
        for (const auto& [d, c] : rep.per_degree) {
            nlohmann::ordered_json e;
            e["degree"] = d.str();
            e["dimension"] = c.str();
            degrees.push_back(e);
        }
        j["per_degree"] = degrees;
        j["ext2"] = rep.ext2_known ? rep.ext2.str() : "unknown";
        if (!rep.note.empty()) j["note"] = rep.note;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "method: " << rep.method << "\n";
        std::cout << "status: " << status << "\n";
        std::cout << "total: " << rep.total << "\n";
        for (const auto& [d, c] : rep.per_degree)
            if (c != 0) std::cout << "  degree " << d << ": " << c << "\n";
        if (rep.ext2_known) std::cout << "ext2: " << rep.ext2 << "\n";
        if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
    }
    return rep.status == T1Status::Ok ? kExitMatch : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toric and deformation computations for moduli surfaces"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of text");

    auto* toric_cmd = app.add_subcommand("m12-toric", "toric cohomology of the blown-up plane");
    std::string toric_fan_path;
    toric_cmd->add_option("--fan", toric_fan_path, "fan file overriding the built-in fan");

    auto* kuranishi_cmd =
        app.add_subcommand("m12-kuranishi", "local and global deformation dimensions");
    std::string kuranishi_pres_path;
    kuranishi_cmd->add_option("--presentation", kuranishi_pres_path,
                              "cone presentation file overriding the built-in preset");
    std::optional<Int> kuranishi_bound;
    kuranishi_cmd->add_option_function<std::string>(
        "--degree-bound", [&](const std::string& v) { kuranishi_bound = Int(v); },
        "stabilization degree bound");

    auto* atlas_cmd = app.add_subcommand("m12-atlas", "singular-point atlas of the surface");
    std::string atlas_action_path;
    atlas_cmd->add_option("--action", atlas_action_path, "torus action file");

    auto* rigidity_cmd = app.add_subcommand("m0n-rigidity", "genus-zero vanishing pipeline");
    int rigidity_n = 0;
    rigidity_cmd->add_option("--n", rigidity_n, "number of marked points")->required();
    std::string rigidity_expected_path;
    rigidity_cmd->add_option("--expected", rigidity_expected_path,
                             "JSON file overriding the frozen expected values");

    auto* sym3_cmd = app.add_subcommand("sym3-verify", "composite checks for the cubic cone");
    std::string sym3_pres_path, sym3_cone_path;
    sym3_cmd->add_option("--presentation", sym3_pres_path,
                         "presentation carrying the alpha/beta/gamma matrices");
    sym3_cmd->add_option("--cone", sym3_cone_path, "cone presentation for the rank check");
    std::optional<Int> sym3_bound;
    sym3_cmd->add_option_function<std::string>(
        "--degree-bound", [&](const std::string& v) { sym3_bound = Int(v); },
        "stabilization degree bound");

    auto* cohom_cmd = app.add_subcommand("toric-cohomology", "line bundle cohomology on a fan");
    std::string cohom_fan_path, cohom_divisor;
    cohom_cmd->add_option("--fan", cohom_fan_path, "fan file")->required();
    cohom_cmd->add_option("--divisor", cohom_divisor, "divisor name from the fan file")
        ->required();

    auto* t1_cmd = app.add_subcommand("t1", "first-order deformation dimensions");
    std::string t1_preset_name, t1_pres_path;
    t1_cmd->add_option("--preset", t1_preset_name, "built-in presentation name");
    t1_cmd->add_option("--presentation", t1_pres_path, "presentation file");
    std::optional<Int> t1_bound;
    t1_cmd->add_option_function<std::string>(
        "--degree-bound", [&](const std::string& v) { t1_bound = Int(v); },
        "stabilization degree bound");

    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    std::string snf_matrix_path;
    snf_cmd->add_option("--matrix", snf_matrix_path, "matrix file")->required();

    auto* qt_cmd = app.add_subcommand("quotient-type", "canonical cyclic quotient type");
    std::string qt_order, qt_weights;
    qt_cmd->add_option("--order", qt_order, "group order")->required();
    qt_cmd->add_option("--weights", qt_weights, "comma-separated pair of residues")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (toric_cmd->parsed()) {
            ScenarioReport rep = toric_fan_path.empty()
                                     ? scenario_m12_toric()
                                     : scenario_m12_toric(load_fan_file(toric_fan_path).fan);
            return emit_report(rep, json);
        }

        if (kuranishi_cmd->parsed()) {
            KuranishiOptions opt;
            opt.degree_bound = kuranishi_bound ? *kuranishi_bound : default_degree_bound();
            if (!kuranishi_pres_path.empty())
                opt.cone_presentation = load_presentation_file(kuranishi_pres_path);
            return emit_report(scenario_m12_kuranishi(opt), json);
        }

        if (atlas_cmd->parsed()) {
            TorusActionSpec action = atlas_action_path.empty()
                                         ? weierstrass_action()
                                         : load_action_file(atlas_action_path);
            ScenarioReport rep = scenario_m12_atlas(action);
            if (json) {
                nlohmann::ordered_json extra = atlas_to_json(atlas_m12(action));
                return emit_report(rep, true, &extra);
            }
            std::cout << atlas_to_text(atlas_m12(action));
            return emit_report(rep, false);
        }

        if (rigidity_cmd->parsed()) {
            std::map<std::string, std::string> expected;
            if (!rigidity_expected_path.empty())
                expected = load_expected_file(rigidity_expected_path);
            return emit_report(scenario_m0n_rigidity(rigidity_n, expected), json);
        }

        if (sym3_cmd->parsed()) {
            Sym3Options opt;
            opt.degree_bound = sym3_bound ? *sym3_bound : default_degree_bound();
            if (!sym3_pres_path.empty()) opt.sym3 = load_presentation_file(sym3_pres_path);
            if (!sym3_cone_path.empty())
                opt.cone_presentation = load_presentation_file(sym3_cone_path);
            return emit_report(scenario_sym3_resolutions(opt), json);
        }

        if (cohom_cmd->parsed()) {
            FanFile f = load_fan_file(cohom_fan_path);
            auto it = f.divisors.find(cohom_divisor);
            if (it == f.divisors.end()) {
                std::cerr << "divisor '" << cohom_divisor << "' not found in " << cohom_fan_path
                          << "\n";
                return kExitUsage;
            }
            CohomologyVector h = divisor_cohomology(f.fan, it->second);
            DivisorPolytope poly = divisor_sections(f.fan, it->second);
            if (json) {
                nlohmann::ordered_json j;
                j["divisor"] = cohom_divisor;
                j["h0"] = h.h0.str();
                j["h1"] = h.h1.str();
                j["h2"] = h.h2.str();
                j["sections"] = poly.h0();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "divisor " << cohom_divisor << ": h = " << h.to_string()
                          << ", sections = " << poly.h0() << "\n";
            }
            return kExitMatch;
        }

        if (t1_cmd->parsed()) {
            if (t1_preset_name.empty() == t1_pres_path.empty()) {
                std::cerr << "t1 needs exactly one of --preset or --presentation\n";
                return kExitUsage;
            }
            SingularityPresentation pres = t1_preset_name.empty()
                                               ? load_presentation_file(t1_pres_path)
                                               : preset(t1_preset_name);
            SubquotientOptions sub;
            sub.degree_bound = t1_bound ? *t1_bound : default_degree_bound();
            T1Report rep;
            if (pres.matrices.count("syzygy") && pres.matrices.count("jacobian")) {
                rep = graded_subquotient_dim(pres.matrices.at("syzygy").transpose(),
                                             pres.matrices.at("jacobian").transpose(), pres, sub);
            } else if (pres.generators.size() == 1) {
                rep = hypersurface_t1(pres.generators[0]);
            } else {
                std::cerr << "presentation needs either one generator or syzygy+jacobian "
                             "matrices\n";
                return kExitUsage;
            }
            return run_t1(rep, json);
        }

        if (snf_cmd->parsed()) {
            IntMatrix a = load_matrix_file(snf_matrix_path);
            SNFDecomposition snf = smith_normal_form(a);
            if (json) {
                nlohmann::ordered_json j;
                j["s"] = int_matrix_json(snf.s);
                j["u"] = int_matrix_json(snf.u);
                j["v"] = int_matrix_json(snf.v);
                nlohmann::ordered_json inv = nlohmann::ordered_json::array();
                for (const Int& d : snf.invariant_factors()) inv.push_back(d.str());
                j["invariant_factors"] = inv;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "S =\n" << int_matrix_text(snf.s);
                std::cout << "U =\n" << int_matrix_text(snf.u);
                std::cout << "V =\n" << int_matrix_text(snf.v);
                std::cout << "invariant factors:";
                for (const Int& d : snf.invariant_factors()) std::cout << " " << d;
                std::cout << "\n";
            }
            return kExitMatch;
        }

        if (qt_cmd->parsed()) {
            std::vector<Int> w;
            std::string cell;
            std::istringstream is(qt_weights);
            while (std::getline(is, cell, ',')) w.emplace_back(cell);
            if (w.size() != 2) {
                std::cerr << "--weights expects exactly two residues\n";
                return kExitUsage;
            }
            CyclicQuotientType t = canonicalize(CyclicActionSpec(Int(qt_order), w));
            if (json) {
                nlohmann::ordered_json j;
                j["type"] = t.to_string();
                j["smooth"] = t.is_smooth();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << t.to_string() << "\n";
            }
            return kExitMatch;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::cerr << "no subcommand\n";
    return kExitUsage;
}
