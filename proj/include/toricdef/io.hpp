#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "toricdef/deformation.hpp"
#include "toricdef/fan.hpp"
#include "toricdef/quotient.hpp"
#include "toricdef/scenario.hpp"

namespace toricdef {

// Fan file: a `rays` line followed by one integer pair per line, then any
// number of `divisor NAME c1 ... cn` lines. '#' starts a comment.
struct FanFile {
    Fan2 fan;
    std::map<std::string, TorusDivisor> divisors;
};
FanFile parse_fan(std::istream& in);
FanFile load_fan_file(const std::string& path);
std::string fan_to_text(const FanFile& f);

// Presentation file: `variables ...`, `weights ...`, `generator POLY`
// lines and `matrix NAME ROWS COLS` blocks with comma-separated entries.
SingularityPresentation parse_presentation(std::istream& in);
SingularityPresentation load_presentation_file(const std::string& path);

// Matrix file: ROWS COLS header line, then the integer entries.
IntMatrix parse_int_matrix(std::istream& in);
IntMatrix load_matrix_file(const std::string& path);

// Action file: `rank R`, `coordinates ...`, R `weights ...` rows.
TorusActionSpec parse_action(std::istream& in);
TorusActionSpec load_action_file(const std::string& path);

// Expected-value override table: JSON object of row id -> expected string.
std::map<std::string, std::string> load_expected_file(const std::string& path);

std::string report_to_text(const ScenarioReport& rep);
nlohmann::ordered_json report_to_json(const ScenarioReport& rep);

std::string atlas_to_text(const std::vector<AtlasEntry>& entries);
nlohmann::ordered_json atlas_to_json(const std::vector<AtlasEntry>& entries);

}  // namespace toricdef
