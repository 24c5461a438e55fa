#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "reeb_orbit/cli_app.hpp"
#include "reeb_orbit/function_file.hpp"
#include "reeb_orbit/selftest.hpp"

using namespace reeb_orbit;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream f(p);
    f << content;
    return p;
}

fs::path fixture_path(const std::string& name, const FunctionFile& ff) {
    return temp_file(name, write_function_file(ff));
}

}  // namespace

TEST_CASE("analyze prints the symbolic result") {
    fs::path p = fixture_path("cli_two_peak.json", two_peak_file());
    RunResult r = run({"analyze", p.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("level-set orbit report\n") == 0);
    CHECK(r.out.find("result: pi0S'(f|Q,X) x Z\n") != std::string::npos);
    CHECK(r.err.empty());
}

TEST_CASE("analyze writes dot and report files on request") {
    fs::path p = fixture_path("cli_doubled.json", doubled_bump_file());
    fs::path dot = fs::temp_directory_path() / "cli_doubled.dot";
    fs::path rep = fs::temp_directory_path() / "cli_doubled.txt";
    RunResult r = run({"analyze", p.string(), "--dot", dot.string(), "--report",
                       rep.string(), "--threads", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("result: pi0S'(f|Q,X) wr_2 Z\n") != std::string::npos);

    std::ifstream din(dot);
    std::stringstream dbuf;
    dbuf << din.rdbuf();
    CHECK(dbuf.str().rfind("graph reeb {", 0) == 0);
    // the level cycle is marked
    CHECK(dbuf.str().find("[style=bold]") != std::string::npos);

    std::ifstream rin(rep);
    std::stringstream rbuf;
    rbuf << rin.rdbuf();
    CHECK(rbuf.str() == r.out);
    fs::remove(dot);
    fs::remove(rep);
}

TEST_CASE("class prints the degree pair") {
    fs::path p = fixture_path("cli_single.json", single_bump_file());
    RunResult r = run({"class", p.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "(1, 0)\n");
}

TEST_CASE("reeb prints the graph and handles the fibration case") {
    fs::path p = fixture_path("cli_two_peak.json", two_peak_file());
    RunResult r = run({"reeb", p.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("nodes: 4\n") != std::string::npos);
    CHECK(r.out.find("edges: 4\n") != std::string::npos);
    CHECK(r.out.find("first betti: 1\n") != std::string::npos);
    CHECK(r.out.find(" saddle degree 3\n") != std::string::npos);

    fs::path q = fixture_path("cli_fibration.json", fibration_file());
    RunResult rf = run({"reeb", q.string()});
    CHECK(rf.code == 0);
    CHECK(rf.out == "no critical vertices: every level is regular\n");
}

TEST_CASE("a level edge is a distinct failure, and the nudge fixes it") {
    FunctionFile flat;
    flat.n = 4;
    flat.m = 4;
    flat.a = 0;
    flat.b = 0;
    flat.perturbation.assign(4, std::vector<Rat>(4, Rat(0)));
    fs::path p = fixture_path("cli_flat.json", flat);

    RunResult r = run({"analyze", p.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("level edge:") != std::string::npos);
    CHECK(r.err.find("--auto-perturb") != std::string::npos);

    RunResult fixed = run({"analyze", p.string(), "--auto-perturb"});
    CHECK(fixed.code == 0);
    CHECK(fixed.out.find("result:") != std::string::npos);
}

TEST_CASE("usage failures exit with 3") {
    CHECK(run({}).code == 3);
    CHECK(run({"frobnicate"}).code == 3);
    CHECK(run({"analyze"}).code == 3);  // missing file argument
    CHECK(run({"analyze", "--no-such-flag", "x.json"}).code == 3);

    fs::path bad = temp_file("cli_bad.json", "{\"grid\": [4");
    CHECK(run({"analyze", bad.string()}).code == 3);
    CHECK(run({"class", (fs::temp_directory_path() / "missing_831.json").string()})
              .code == 3);

    FunctionFile tiny;
    tiny.n = 2;
    tiny.m = 4;
    tiny.perturbation.assign(4, std::vector<Rat>(2, Rat(0)));
    fs::path p = fixture_path("cli_tiny.json", tiny);
    CHECK(run({"analyze", p.string()}).code == 3);  // grid too small
}

TEST_CASE("help exits cleanly") {
    RunResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("analyze") != std::string::npos);
    CHECK(r.out.find("selftest") != std::string::npos);
    CHECK(run({"analyze", "--help"}).code == 0);
}

TEST_CASE("selftest subcommand") {
    RunResult r = run({"selftest", "--quick", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("selftest seed: 7\n") == 0);
    CHECK(r.out.find("mode: quick\n") != std::string::npos);
    CHECK(r.out.find("result: PASS\n") != std::string::npos);
    CHECK(r.out.find("failures") != std::string::npos);
}

TEST_CASE("planted defects trip the suites") {
    SelfTestOptions opt;
    opt.quick = true;
    opt.seed = 99;

    opt.mutations.flip_wreath_shift = true;
    CHECK(!all_passed(run_selftests(opt)));
    opt.mutations.flip_wreath_shift = false;

    opt.mutations.skew_rotation_tokens = true;
    CHECK(!all_passed(run_selftests(opt)));
}

TEST_CASE("shipped sample files match the builders") {
    struct Pair {
        const char* file;
        FunctionFile ff;
    };
    const Pair pairs[] = {
        {"two_peak.json", two_peak_file()},
        {"single_bump.json", single_bump_file()},
        {"doubled_bump.json", doubled_bump_file()},
        {"fibration.json", fibration_file()},
        {"shared_level_tree.json", shared_level_tree_file()},
    };
    for (const auto& pr : pairs) {
        fs::path p = fs::path(SAMPLES_DIR) / pr.file;
        REQUIRE_MESSAGE(fs::exists(p), pr.file);
        FunctionFile got = load_function_file(p.string());
        CHECK(got.n == pr.ff.n);
        CHECK(got.m == pr.ff.m);
        CHECK(got.a == pr.ff.a);
        CHECK(got.b == pr.ff.b);
        CHECK(got.perturbation == pr.ff.perturbation);
    }

    fs::path flat = fs::path(SAMPLES_DIR) / "flat_edge.json";
    REQUIRE(fs::exists(flat));
    CHECK(run({"analyze", flat.string()}).code == 2);
    CHECK(run({"analyze", flat.string(), "--auto-perturb"}).code == 0);
}
