#pragma once

#include <map>
#include <string>
#include <string_view>

#include "compactlab/criteria.hpp"
#include "compactlab/example_groups.hpp"
#include "compactlab/finite_systems.hpp"
#include "compactlab/measures.hpp"

namespace compactlab {

// Measure grammar: uniform | dirac:<point> | table:<path>. Table files hold
// `word mass` lines at one fixed depth, rationals as p/q; blank lines and
// lines starting with '#' are skipped.
CylinderMeasure parse_measure(std::string_view text, int rank);

// Function grammar: cyl:<word> | const:<p/q> | table:<path> (same line format
// as measure tables; listed words share one depth, missing words are 0).
CylinderFunction parse_function(std::string_view text, int rank);

// Finite-support perturbation grammar: empty | <word>:<p/q>[,<word>:<p/q>...]
FiniteSupportFunction parse_finite_support(std::string_view text, int rank);

// Lamplighter element grammar: (p; i1,i2,...) with an integer position and a
// possibly empty lamp list.
LamplighterElement parse_lamplighter(std::string_view text);

// Lamp configuration grammar: lamps:i1,i2,... (empty list allowed) |
// window-periodic:<left>|<base>|<right> with 0/1 patterns tiled around a base
// window starting at position 0.
LampConfig parse_lamp_config(std::string_view text);

// Dihedral grammar: r^k | r^k s | s | 1.
DihedralElement parse_dihedral(std::string_view text);

// Declared finite system from a JSON file: {"name", "points", "classes":
// [{"name", "image": {point: point, ...}, "limit": point}]}.
DeclaredSystem parse_declared_system_file(const std::string& path);

// Flat key = value configuration file; '#' comments and blank lines skipped.
std::map<std::string, std::string> parse_config_file(const std::string& path);

}  // namespace compactlab
