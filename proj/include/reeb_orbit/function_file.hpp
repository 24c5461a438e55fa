#pragma once

#include <string>
#include <vector>

#include "reeb_orbit/torus_pl.hpp"

namespace reeb_orbit {

// On-disk description of a function:
//
// {
//   "grid": [N, M],
//   "class": [a, b],
//   "perturbation": [ M rows of N entries ],
//   "flags": { "auto_perturb": false }
// }
//
// Entries are integers, decimals, or "p/q" strings. Decimals convert
// digit-exactly; nothing is rounded through a double.
struct FunctionFile {
    int n = 0;
    int m = 0;
    long a = 0;
    long b = 0;
    std::vector<std::vector<Rat>> perturbation;
    bool auto_perturb = false;
};

// Throws ParseError on malformed or incomplete documents, including any
// non-finite number spelling.
FunctionFile parse_function_file(const std::string& text);

// Reads and parses; file system failures surface as ParseError too.
FunctionFile load_function_file(const std::string& path);

// Canonical serialization, entries as exact "p/q" strings.
std::string write_function_file(const FunctionFile& ff);

// Builds the triangulated function; DimensionError / FlatEdgeError pass
// through from the construction.
CircleFunction build_from_file(const FunctionFile& ff);

}  // namespace reeb_orbit
