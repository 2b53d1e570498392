#pragma once

#include <string>
#include <vector>

#include "h8/report.hpp"

namespace h8 {

// Module names accepted by verify, in run order.
const std::vector<std::string>& module_names();

// Throws std::invalid_argument for an unknown module or a bad configuration.
void validate(const RunConfig& cfg);
ModuleReport run_suite(const std::string& module, const RunConfig& cfg);
Report verify(const std::string& target, const RunConfig& cfg);  // "all" or a module name

// Tables regenerated from the construction rules: thomae | subspaces | baselocus | sextuplets.
// Formats: md, csv, json, txt (the line format of the matching asset, where one exists).
std::string render_table(const std::string& name, const std::string& format, const RunConfig& cfg);

// Coefficient table comparing series, closed formulas and rank certification.
// ring: config | B | A. `agree` is false when any two available columns disagree.
json hilbert(const std::string& ring, int max, const RunConfig& cfg, bool* agree);
std::string render_hilbert(const json& h, const std::string& format);

// Rank-certified graded dimensions; ring: config (degrees n) or B (even weights).
json dims(const std::string& ring, const std::vector<int>& degrees, const RunConfig& cfg, bool* agree);

json fit_schottky(int points, int radius, const RunConfig& cfg);

}  // namespace h8
