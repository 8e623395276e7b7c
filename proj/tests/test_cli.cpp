/*
   Copyright 2026 the cubic-kummer authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const std::string out_file = "cli_test_output.tmp";
    std::string cmd = std::string(KUMMER_CLI_PATH) + " " + args + " > "
                      + out_file + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    res.output = ss.str();
    std::remove(out_file.c_str());
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("classify subcommand") {
    RunResult r1 = run_cli("classify --field 2^2 --b 1 --c 1");
    CHECK(r1.exit_code == 0);
    CHECK(contains(r1.output, "type1"));
    CHECK(contains(r1.output, "necessary condition"));

    RunResult r2 = run_cli("classify --field 7 --b 0 --c 1");
    CHECK(r2.exit_code == 0);
    CHECK(contains(r2.output, "irreducible_infinite_genus"));
    CHECK(contains(r2.output, "d=2"));
    CHECK(contains(r2.output, "x^2 + 1"));

    RunResult r3 = run_cli("classify --field 5 --b 1 --c 1");
    CHECK(r3.exit_code == 2);
    CHECK(contains(r3.output, "invalid"));

    RunResult r4 = run_cli("classify --field 7 --b 1");
    CHECK(r4.exit_code == 1);  // missing --c

    RunResult r5 = run_cli("classify --field nonsense --b 1 --c 1");
    CHECK(r5.exit_code == 1);

    RunResult r6 = run_cli("classify --field 7 --b 1 --c 0 --format json");
    CHECK(r6.exit_code == 0);
    auto j = nlohmann::json::parse(r6.output);
    CHECK(j["classification"]["class"] == "type2");
}

TEST_CASE("analyze subcommand") {
    RunResult r = run_cli("analyze --field 7 --b 0 --c 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "genus = 1"));
    CHECK(contains(r.output, "2*Q(x) + 2*Q(x^2 + 1)"));

    RunResult rj = run_cli("analyze --field 7 --b 0 --c 1 --format json");
    CHECK(rj.exit_code == 0);
    auto j = nlohmann::json::parse(rj.output);
    CHECK(j["genus"] == 1);
    CHECK(j["deg_diff_x"] == 6);
    CHECK(j["deg_diff_y"] == 6);
    CHECK(j["N"] == nlohmann::json::array({3}));
    CHECK(j["galois_over_x"] == true);
    // round trip: parse(render(x)) = x
    CHECK(nlohmann::json::parse(j.dump()).dump() == j.dump());
}

TEST_CASE("census subcommand writes deterministic files") {
    const char* path1 = "census_test1.csv";
    const char* path2 = "census_test2.csv";
    RunResult r1 = run_cli(std::string("census --field 7 --levels 1 --format csv --out ") + path1);
    CHECK(r1.exit_code == 0);
    RunResult r2 = run_cli(std::string("census --field 7 --levels 1 --format csv --out ") + path2);
    CHECK(r2.exit_code == 0);

    auto slurp = [](const char* p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string c1 = slurp(path1), c2 = slurp(path2);
    CHECK(c1 == c2);
    int lines = 0;
    for (char ch : c1) {
        if (ch == '\n') ++lines;
    }
    CHECK(lines == 49);  // header + 48 rows
    std::remove(path1);
    std::remove(path2);

    RunResult rj = run_cli("census --field 2^2 --levels 1 --format json");
    CHECK(rj.exit_code == 0);
    auto j = nlohmann::json::parse(rj.output);
    CHECK(j.size() == 15);

    // unwritable output path
    RunResult rbad = run_cli("census --field 7 --out /nonexistent-dir/x.csv");
    CHECK(rbad.exit_code == 4);
}

TEST_CASE("count subcommand") {
    RunResult r = run_cli("count --field 2^2 --b 1 --c 1 --levels 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "level 0: count = 4"));
    CHECK(contains(r.output, "level 1: count = 6"));

    RunResult rb = run_cli("count --field 7 --b 0 --c 1 --levels 5 --chain-budget 100");
    CHECK(rb.exit_code == 3);  // 7 * 3^5 = 1701 over budget

    RunResult ri = run_cli("count --field 7 --b 0 --c 0 --levels 1");
    CHECK(ri.exit_code == 2);  // not a tower spec

    RunResult rc = run_cli("count --field 2^2 --b 1 --c 1 --levels 2 --format csv");
    CHECK(rc.exit_code == 0);
    CHECK(contains(rc.output, "level,extension_degree,ext,chain_count"));
}

TEST_CASE("verify-mawu subcommand") {
    RunResult r = run_cli("verify-mawu --limit 10000");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "0 violations"));

    RunResult rj = run_cli("verify-mawu --limit 1000 --format json");
    CHECK(rj.exit_code == 0);
    auto j = nlohmann::json::parse(rj.output);
    CHECK(j["violations"] == 0);
}

TEST_CASE("help and env overrides") {
    RunResult h = run_cli("--help");
    CHECK(h.exit_code == 0);
    CHECK(contains(h.output, "classify"));
    CHECK(contains(h.output, "census"));
    CHECK(contains(h.output, "KUMMER_"));

    RunResult none = run_cli("");
    CHECK(none.exit_code == 1);  // a subcommand is required
}
