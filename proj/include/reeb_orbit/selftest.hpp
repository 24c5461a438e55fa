#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "reeb_orbit/function_file.hpp"

namespace reeb_orbit {

// Pinned inputs used by the test suites and shipped as samples. Values are
// exact rationals, so every derived quantity below is reproducible.
FunctionFile two_peak_file();      // class (0, 0): two extrema, two saddles
FunctionFile single_bump_file();   // class (1, 0): one bump over a fibration
FunctionFile doubled_bump_file();  // class (2, 0): the bump pattern repeated
FunctionFile fibration_file();     // class (1, 0): no critical vertices
FunctionFile shared_level_tree_file(); // class (0, 0): several critical vertices share levels, so the
// level graph is a tree

// Random input in a given class: vertex perturbations k/9973 with k uniform,
// rebuilt until no edge is level (at most 50 attempts).
FunctionFile random_function(std::mt19937_64& rng, int n, int m, long a,
                             long b);

// Deliberate defects. Each one must make its suite fail; the unit tests turn
// them on to prove the suites can catch the bug they are aimed at.
struct Mutations {
    bool flip_wreath_shift = false;    // rotate blocks backward in products
    bool skew_rotation_tokens = false; // drop node values from cycle tokens
};

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string counterexample;  // first failing case, empty when clean
};

struct SelfTestOptions {
    std::uint64_t seed = 24301;
    bool quick = false;
    int threads = 1;
    Mutations mutations;
};

std::vector<SuiteResult> run_selftests(const SelfTestOptions& opt);

bool all_passed(const std::vector<SuiteResult>& results);

// Stable plain-text summary, one line per suite plus a PASS/FAIL verdict.
std::string selftest_report(const SelfTestOptions& opt,
                            const std::vector<SuiteResult>& results);

}  // namespace reeb_orbit
