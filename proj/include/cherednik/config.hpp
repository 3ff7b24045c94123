#pragma once

#include <map>
#include <string>

#include "cherednik/dunkl.hpp"
#include "cherednik/padic.hpp"

namespace cherednik {

/// Flat `key = value` run configuration. Unknown keys are rejected with the
/// offending line number.
struct RunConfig {
    unsigned cyclotomic_order = 1;
    Integer prime = 5;
    unsigned precision = 8;

    std::string family;    // cyclic | symmetric | dihedral | hyperoctahedral
    unsigned rank = 1;     // symmetric / hyperoctahedral rank
    unsigned group_m = 0;  // cyclic / dihedral order parameter

    Rational t = 1;
    std::map<unsigned, Rational> c; // per conjugacy class
    // 1-based i < j; value is a rational constant or a variable "x_k"
    std::map<std::pair<unsigned, unsigned>, std::string> omega;

    unsigned poly_degree = 4;
    unsigned filtration_degree = 3;
    unsigned samples = 100;
    unsigned long long seed = 1;

    unsigned level_n = 1;
    unsigned level_m = 0;

    std::map<std::string, std::string> raw; // echo for reports
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// A fully built run: field spec, group data, and parameters.
struct Run {
    RunConfig cfg;
    PadicSpec spec;
    Setting setting;
    DunklParams params;

    LatticeLevel level() const { return LatticeLevel{cfg.level_n, cfg.level_m}; }
};

Run build_run(const RunConfig& cfg);

} // namespace cherednik
