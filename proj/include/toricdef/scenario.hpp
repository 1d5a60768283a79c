#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricdef/deformation.hpp"
#include "toricdef/fan.hpp"
#include "toricdef/quotient.hpp"

namespace toricdef {

enum class RowStatus { Match, Mismatch, Undetermined };

std::string row_status_name(RowStatus s);

struct ScenarioRow {
    std::string id;
    std::string claim;
    std::string computed;
    std::string expected;
    RowStatus status = RowStatus::Undetermined;
};

struct ScenarioReport {
    std::string scenario;
    std::vector<ScenarioRow> rows;

    bool match() const;
    std::string verdict() const;  // MATCH / MISMATCH / UNDETERMINED
};

// Unordered splittings n = n1 + n2 with n1, n2 >= 2; exactly
// floor(n/2) - 1 of them.
std::vector<std::pair<int, int>> boundary_partitions(int n);

// Toric checks on the blown-up weighted plane: ray divisor cohomology,
// tangent cohomology, intersection matrix, nef flags, cone types.
ScenarioReport scenario_m12_toric();
ScenarioReport scenario_m12_toric(const Fan2& fan);

// Local deformation dimensions assembled into the global count.
struct KuranishiOptions {
    std::optional<SingularityPresentation> cone_presentation;  // twisted cubic override
    Int degree_bound = 12;
};
ScenarioReport scenario_m12_kuranishi(const KuranishiOptions& opt = {});

// Genus-zero vanishing pipeline; expected values may be overridden
// (negative-control hook) by row id.
ScenarioReport scenario_m0n_rigidity(int n);
ScenarioReport scenario_m0n_rigidity(int n,
                                     const std::map<std::string, std::string>& expected_override);

// Composite-vanishing checks for the cubic-cone resolutions plus the
// rank-two local deformation space they predict.
struct Sym3Options {
    std::optional<SingularityPresentation> sym3;           // alpha/beta/gamma carrier
    std::optional<SingularityPresentation> cone_presentation;
    Int degree_bound = 12;
};
ScenarioReport scenario_sym3_resolutions(const Sym3Options& opt = {});

// Atlas table wrapped as a verdict report (four singular points with
// frozen canonical types).
ScenarioReport scenario_m12_atlas();
ScenarioReport scenario_m12_atlas(const TorusActionSpec& action);

}  // namespace toricdef
