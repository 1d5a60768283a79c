#include "toricdef/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace toricdef {

namespace {

std::string strip_comment(const std::string& line) {
    std::size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return in;
}

}  // namespace

FanFile parse_fan(std::istream& in) {
    std::vector<LatticeVector> rays;
    std::vector<std::pair<std::string, std::vector<Int>>> divisors;
    enum { Outside, InRays } state = Outside;

    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> toks = tokens_of(strip_comment(line));
        if (toks.empty()) continue;
        if (toks[0] == "rays") {
            state = InRays;
            continue;
        }
        if (toks[0] == "divisor") {
            state = Outside;
            if (toks.size() < 3) throw std::runtime_error("fan file: short divisor line");
            std::vector<Int> coeffs;
            for (std::size_t i = 2; i < toks.size(); ++i) coeffs.emplace_back(toks[i]);
            divisors.emplace_back(toks[1], std::move(coeffs));
            continue;
        }
        if (state == InRays) {
            if (toks.size() != 2) throw std::runtime_error("fan file: ray line needs two integers");
            rays.push_back({Int(toks[0]), Int(toks[1])});
            continue;
        }
        throw std::runtime_error("fan file: unexpected line '" + line + "'");
    }

    FanFile out{Fan2::from_rays(std::move(rays)), {}};
    for (auto& [name, coeffs] : divisors) {
        if (coeffs.size() != out.fan.nrays())
            throw std::runtime_error("fan file: divisor '" + name + "' has wrong length");
        out.divisors[name] = TorusDivisor{std::move(coeffs)};
    }
    return out;
}

FanFile load_fan_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return parse_fan(in);
}

std::string fan_to_text(const FanFile& f) {
    std::ostringstream os;
    os << "rays\n";
    for (const LatticeVector& r : f.fan.rays()) os << r.x << " " << r.y << "\n";
    for (const auto& [name, d] : f.divisors) {
        os << "divisor " << name;
        for (const Int& c : d.coeffs) os << " " << c;
        os << "\n";
    }
    return os.str();
}

SingularityPresentation parse_presentation(std::istream& in) {
    SingularityPresentation pres;
    std::vector<std::string> vars;
    std::vector<Int> weights;
    std::vector<std::string> generator_texts;
    struct PendingMatrix {
        std::string name;
        std::size_t rows, cols;
        std::vector<std::vector<std::string>> entries;
    };
    std::vector<PendingMatrix> matrices;
    PendingMatrix* open_matrix = nullptr;

    std::string line;
    while (std::getline(in, line)) {
        std::string body = strip_comment(line);
        std::vector<std::string> toks = tokens_of(body);
        if (toks.empty()) continue;

        if (open_matrix && open_matrix->entries.size() < open_matrix->rows) {
            // Matrix rows: entries separated by commas.
            std::vector<std::string> row;
            std::string cell;
            std::istringstream is(body);
            while (std::getline(is, cell, ',')) row.push_back(cell);
            if (row.size() != open_matrix->cols)
                throw std::runtime_error("presentation: matrix row with wrong entry count");
            open_matrix->entries.push_back(std::move(row));
            if (open_matrix->entries.size() == open_matrix->rows) open_matrix = nullptr;
            continue;
        }

        if (toks[0] == "label" && toks.size() >= 2) {
            pres.label = toks[1];
        } else if (toks[0] == "variables") {
            vars.assign(toks.begin() + 1, toks.end());
        } else if (toks[0] == "weights") {
            for (std::size_t i = 1; i < toks.size(); ++i) weights.emplace_back(toks[i]);
        } else if (toks[0] == "generator") {
            std::size_t at = body.find("generator");
            generator_texts.push_back(body.substr(at + 9));
        } else if (toks[0] == "matrix") {
            if (toks.size() != 4) throw std::runtime_error("presentation: bad matrix header");
            matrices.push_back({toks[1], std::stoul(toks[2]), std::stoul(toks[3]), {}});
            open_matrix = &matrices.back();
        } else {
            throw std::runtime_error("presentation: unexpected line '" + line + "'");
        }
    }
    if (open_matrix) throw std::runtime_error("presentation: truncated matrix block");
    if (vars.empty()) throw std::runtime_error("presentation: no variables");

    pres.ring = Ring(vars);
    pres.weights = weights.empty() ? std::vector<Int>(vars.size(), Int(1)) : weights;
    for (const std::string& txt : generator_texts)
        pres.generators.push_back(Polynomial::parse(pres.ring, txt));
    for (const PendingMatrix& m : matrices)
        pres.matrices[m.name] = GradedMatrix::from_rows(pres.ring, m.entries);
    pres.validate();
    return pres;
}

SingularityPresentation load_presentation_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return parse_presentation(in);
}

IntMatrix parse_int_matrix(std::istream& in) {
    std::vector<std::vector<Int>> rows;
    std::size_t expected_rows = 0, expected_cols = 0;
    bool have_header = false;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> toks = tokens_of(strip_comment(line));
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks.size() != 2) throw std::runtime_error("matrix file: header needs ROWS COLS");
            expected_rows = std::stoul(toks[0]);
            expected_cols = std::stoul(toks[1]);
            have_header = true;
            continue;
        }
        std::vector<Int> row;
        for (const std::string& t : toks) row.emplace_back(t);
        if (row.size() != expected_cols)
            throw std::runtime_error("matrix file: row with wrong entry count");
        rows.push_back(std::move(row));
    }
    if (!have_header || rows.size() != expected_rows)
        throw std::runtime_error("matrix file: row count mismatch");
    IntMatrix m(expected_rows, expected_cols);
    for (std::size_t i = 0; i < expected_rows; ++i)
        for (std::size_t j = 0; j < expected_cols; ++j) m(i, j) = rows[i][j];
    return m;
}

IntMatrix load_matrix_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return parse_int_matrix(in);
}

TorusActionSpec parse_action(std::istream& in) {
    TorusActionSpec spec;
    std::vector<std::vector<Int>> weight_rows;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> toks = tokens_of(strip_comment(line));
        if (toks.empty()) continue;
        if (toks[0] == "rank" && toks.size() == 2) {
            spec.rank = std::stoul(toks[1]);
        } else if (toks[0] == "coordinates") {
            spec.coordinates.assign(toks.begin() + 1, toks.end());
        } else if (toks[0] == "weights") {
            std::vector<Int> row;
            for (std::size_t i = 1; i < toks.size(); ++i) row.emplace_back(toks[i]);
            weight_rows.push_back(std::move(row));
        } else {
            throw std::runtime_error("action file: unexpected line '" + line + "'");
        }
    }
    if (spec.rank == 0 || weight_rows.size() != spec.rank)
        throw std::runtime_error("action file: rank/weights mismatch");
    std::size_t ncoords = spec.coordinates.size();
    for (const auto& row : weight_rows)
        if (row.size() != ncoords) throw std::runtime_error("action file: ragged weight rows");
    spec.weights = IntMatrix(spec.rank, ncoords);
    for (std::size_t i = 0; i < spec.rank; ++i)
        for (std::size_t j = 0; j < ncoords; ++j) spec.weights(i, j) = weight_rows[i][j];
    return spec;
}

TorusActionSpec load_action_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return parse_action(in);
}

std::map<std::string, std::string> load_expected_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    nlohmann::json j;
    in >> j;
    std::map<std::string, std::string> out;
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = it.value().get<std::string>();
    return out;
}

std::string report_to_text(const ScenarioReport& rep) {
    std::ostringstream os;
    os << "scenario: " << rep.scenario << "\n";
    for (const ScenarioRow& r : rep.rows) {
        os << "  [" << row_status_name(r.status) << "] " << r.id << ": " << r.claim
           << " | computed " << r.computed << " | expected " << r.expected << "\n";
    }
    os << "verdict: " << rep.verdict() << "\n";
    return os.str();
}

nlohmann::ordered_json report_to_json(const ScenarioReport& rep) {
    nlohmann::ordered_json j;
    j["scenario"] = rep.scenario;
    j["rows"] = nlohmann::ordered_json::array();
    for (const ScenarioRow& r : rep.rows) {
        nlohmann::ordered_json row;
        row["id"] = r.id;
        row["claim"] = r.claim;
        row["computed"] = r.computed;
        row["expected"] = r.expected;
        row["status"] = row_status_name(r.status);
        j["rows"].push_back(row);
    }
    j["verdict"] = rep.verdict();
    return j;
}

std::string atlas_to_text(const std::vector<AtlasEntry>& entries) {
    std::ostringstream os;
    for (const AtlasEntry& e : entries) {
        os << "chart " << e.chart << ", support {";
        for (std::size_t i = 0; i < e.support.size(); ++i) {
            if (i) os << ",";
            os << e.support[i];
        }
        os << "}: type " << e.type.to_string() << ", stabilizer order " << e.stab.order
           << ", locus: " << e.locus << "\n";
    }
    return os.str();
}

nlohmann::ordered_json atlas_to_json(const std::vector<AtlasEntry>& entries) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const AtlasEntry& e : entries) {
        nlohmann::ordered_json j;
        j["chart"] = e.chart;
        j["support"] = e.support;
        j["type"] = e.type.to_string();
        j["stabilizer_order"] = e.stab.order.str();
        nlohmann::ordered_json weights = nlohmann::ordered_json::array();
        for (const Int& w : e.stab.induced_weights) weights.push_back(w.str());
        j["induced_weights"] = weights;
        j["locus"] = e.locus;
        arr.push_back(j);
    }
    return arr;
}

}  // namespace toricdef
