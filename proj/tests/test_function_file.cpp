#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "reeb_orbit/errors.hpp"
#include "reeb_orbit/function_file.hpp"
#include "reeb_orbit/selftest.hpp"

using namespace reeb_orbit;

namespace {

const char* kMinimal = R"({
  "grid": [3, 3],
  "class": [1, 0],
  "perturbation": [
    [0, 0.1, "1/3"],
    [-0.125, 1.5e-2, 2],
    ["-2/7", 0.5, 1e2]
  ]
})";

}  // namespace

TEST_CASE("decimal literals survive parsing exactly") {
    FunctionFile ff = parse_function_file(kMinimal);
    CHECK(ff.n == 3);
    CHECK(ff.m == 3);
    CHECK(ff.a == 1);
    CHECK(ff.b == 0);
    REQUIRE(ff.perturbation.size() == 3);
    CHECK(ff.perturbation[0][0] == Rat(0));
    CHECK(ff.perturbation[0][1] == Rat(1, 10));
    CHECK(ff.perturbation[0][2] == Rat(1, 3));
    CHECK(ff.perturbation[1][0] == Rat(-1, 8));
    CHECK(ff.perturbation[1][1] == Rat(3, 200));
    CHECK(ff.perturbation[1][2] == Rat(2));
    CHECK(ff.perturbation[2][0] == Rat(-2, 7));
    CHECK(ff.perturbation[2][1] == Rat(1, 2));
    CHECK(ff.perturbation[2][2] == Rat(100));
    // a DOM pass through double would have produced this instead
    CHECK(ff.perturbation[0][1] != rat_from_double(0.1));
    CHECK(!ff.auto_perturb);
}

TEST_CASE("flags block") {
    std::string with_flag = R"({
      "grid": [3, 3], "class": [0, 0],
      "perturbation": [[1,2,3],[4,5,6],[7,8,9]],
      "flags": { "auto_perturb": true, "future_knob": false }
    })";
    FunctionFile ff = parse_function_file(with_flag);
    CHECK(ff.auto_perturb);
}

TEST_CASE("malformed documents are rejected") {
    auto bad = [](const std::string& text) {
        CHECK_THROWS_AS(parse_function_file(text), ParseError);
    };
    bad("");
    bad("[1, 2, 3]");
    bad("{\"grid\": [3, 3], \"class\": [0, 0]}");  // no perturbation
    bad("{\"grid\": [3, 3], \"perturbation\": [[0,0,0],[0,0,0],[0,0,0]]}");
    bad("{\"class\": [0, 0], \"perturbation\": [[0,0,0],[0,0,0],[0,0,0]]}");
    bad(R"({"grid": [3, 3, 3], "class": [0,0],
         "perturbation": [[0,0,0],[0,0,0],[0,0,0]]})");
    bad(R"({"grid": [3, 3], "class": [0],
         "perturbation": [[0,0,0],[0,0,0],[0,0,0]]})");
    // row count / width mismatches
    bad(R"({"grid": [3, 3], "class": [0,0], "perturbation": [[0,0,0],[0,0,0]]})");
    bad(R"({"grid": [3, 3], "class": [0,0],
         "perturbation": [[0,0,0],[0,0],[0,0,0]]})");
    // type confusion
    bad(R"({"grid": ["3", 3], "class": [0,0],
         "perturbation": [[0,0,0],[0,0,0],[0,0,0]]})");
    bad(R"({"grid": [[3], 3], "class": [0,0],
         "perturbation": [[0,0,0],[0,0,0],[0,0,0]]})");
    bad(R"({"grid": [3, 3], "class": [0,0], "perturbation": [[0,0,true],
         [0,0,0],[0,0,0]]})");
    bad(R"({"grid": [3, 3], "class": [0,0], "perturbation": 7})");
    bad(R"({"grid": [3, 3], "class": [0,0], "unknown": 1,
         "perturbation": [[0,0,0],[0,0,0],[0,0,0]]})");
    // bad rational spellings
    bad(R"({"grid": [3, 3], "class": [0,0], "perturbation": [["1/0",0,0],
         [0,0,0],[0,0,0]]})");
    bad(R"({"grid": [3, 3], "class": [0,0], "perturbation": [["x",0,0],
         [0,0,0],[0,0,0]]})");
    // JSON has no non-finite literals; they must not sneak through
    bad(R"({"grid": [3, 3], "class": [0,0], "perturbation": [[Infinity,0,0],
         [0,0,0],[0,0,0]]})");
    bad(R"({"grid": [3, 3], "class": [0,0], "perturbation": [[NaN,0,0],
         [0,0,0],[0,0,0]]})");
}

TEST_CASE("write/parse roundtrip preserves every field") {
    for (FunctionFile ff : {two_peak_file(), single_bump_file(), doubled_bump_file(),
                            fibration_file(), shared_level_tree_file()}) {
        std::string text = write_function_file(ff);
        FunctionFile back = parse_function_file(text);
        CHECK(back.n == ff.n);
        CHECK(back.m == ff.m);
        CHECK(back.a == ff.a);
        CHECK(back.b == ff.b);
        CHECK(back.auto_perturb == ff.auto_perturb);
        CHECK(back.perturbation == ff.perturbation);
        // canonical form is a fixed point
        CHECK(write_function_file(back) == text);
    }
}

TEST_CASE("loading from disk") {
    namespace fs = std::filesystem;
    fs::path p = fs::temp_directory_path() / "reeb_orbit_ff_test.json";
    {
        std::ofstream out(p);
        out << write_function_file(two_peak_file());
    }
    FunctionFile ff = load_function_file(p.string());
    CHECK(ff.n == 6);
    CHECK(ff.perturbation == two_peak_file().perturbation);
    std::remove(p.string().c_str());

    CHECK_THROWS_AS(load_function_file((fs::temp_directory_path() /
                                        "reeb_orbit_definitely_missing.json")
                                           .string()),
                    ParseError);
}
