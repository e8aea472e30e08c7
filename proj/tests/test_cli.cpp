// End-to-end tests driving the installed binary through a shell, checking
// stdout text, machine formats, and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "hodge/json_util.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;

    bool operator==(const RunResult&) const = default;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false,
                  const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + "\"" + HODGE_CLI_PATH + "\" " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (true) {
        const std::size_t got = fread(buf.data(), 1, buf.size(), pipe);
        if (got == 0) {
            break;
        }
        out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), std::move(out)};
}

} // namespace

TEST_CASE("lambda1 prints the exact fraction") {
    CHECK(run_cli("lambda1 --d 5 --m 1,4,2,3") == RunResult{0, "4/25\n"});
    CHECK(run_cli("lambda1 --d 3 --m 1,1,2,2") == RunResult{0, "2/9\n"});
    CHECK(run_cli("lambda1 --d 5 --m 0,1,2,2") == RunResult{0, "0\n"});
}

TEST_CASE("lambda1 JSON record") {
    const RunResult r = run_cli("lambda1 --d 5 --m 1,4,2,3 --json");
    CHECK(r.exit_code == 0);
    const hodge::Json j = hodge::Json::parse(r.out);
    CHECK(j.at("d") == 5);
    CHECK(j.at("m") == hodge::Json::array({1, 4, 2, 3}));
    CHECK(j.at("quantity") == "lambda1");
    CHECK(j.at("value") == "4/25");
    CHECK(j.at("decimal") == "0.160000000000000");
    CHECK(j.at("provenance") == "closed-form");
    CHECK(j.at("connected") == true);
}

TEST_CASE("lambda1 CSV record") {
    const RunResult r = run_cli("lambda1 --d 5 --m 1,4,2,3 --csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "d,m,e,quantity,num,den,decimal,connected\n"
                   "5,1;4;2;3,,lambda1,4,25,0.160000000000000,true\n");
}

TEST_CASE("lambda1e with a single character") {
    CHECK(run_cli("lambda1e --d 5 --m 1,4,2,3 --e 2") == RunResult{0, "1/25\n"});
    CHECK(run_cli("lambda1e --d 5 --m 1,4,2,3 --e 3") == RunResult{0, "1/25\n"});
    CHECK(run_cli("lambda1e --d 5 --m 1,4,2,3 --e 0") == RunResult{0, "0\n"});
}

TEST_CASE("lambda1e tabulates all characters with the sum cross-check") {
    const RunResult r = run_cli("lambda1e --d 5 --m 1,4,2,3 --all-e");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "e=0: 0\n"
                   "e=1: 1/25\n"
                   "e=2: 1/25\n"
                   "e=3: 1/25\n"
                   "e=4: 1/25\n"
                   "sum(e=1..4) = 4/25\n"
                   "lambda1 = 4/25\n");

    const RunResult rj = run_cli("lambda1e --d 5 --m 1,4,2,3 --all-e --json");
    CHECK(rj.exit_code == 0);
    const hodge::Json rows = hodge::Json::parse(rj.out);
    CHECK(rows.size() == 7);
    CHECK(rows[0].at("quantity") == "lambda1e");
    CHECK(rows[0].at("e") == 0);
    CHECK(rows[5].at("quantity") == "sum_lambda1e");
    CHECK(rows[5].at("provenance") == "eigen-sum");
    CHECK(rows[6].at("quantity") == "lambda1");
    CHECK(rows[6].at("value") == "4/25");

    const RunResult rc = run_cli("lambda1e --d 5 --m 1,4,2,3 --all-e --csv");
    CHECK(rc.exit_code == 0);
    int lines = 0;
    for (char c : rc.out) {
        lines += (c == '\n');
    }
    CHECK(lines == 8);
    CHECK(rc.out.find("sum_lambda1e") != std::string::npos);
}

TEST_CASE("graph-formula text and JSON output") {
    const RunResult r = run_cli("graph-formula --d 3 --m 1,1,1,1,2 --canonical");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("delta[1,2]") != std::string::npos);
    CHECK(r.out.find("1/36") != std::string::npos);
    CHECK(r.out.find("psi[5]") != std::string::npos);
    CHECK(r.out.find("kappa1") != std::string::npos);
    CHECK(r.out.find("1/4") != std::string::npos);

    const RunResult rj = run_cli("graph-formula --d 3 --m 1,1,1,1,2 --canonical --json");
    CHECK(rj.exit_code == 0);
    const hodge::Json j = hodge::Json::parse(rj.out);
    CHECK(j.at("n") == 5);
    CHECK(j.at("d") == 3);
    bool found = false;
    for (const auto& term : j.at("terms")) {
        if (term.at("sym") == "B" && term.at("J") == hodge::Json::array({1, 2})) {
            CHECK(term.at("c") == "1/36");
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("graph-formula with a character") {
    const RunResult rj = run_cli("graph-formula --d 2 --m 1,1,1,1 --e 1 --json");
    CHECK(rj.exit_code == 0);
    const hodge::Json j = hodge::Json::parse(rj.out);
    bool found = false;
    for (const auto& term : j.at("terms")) {
        if (term.at("sym") == "K") {
            CHECK(term.at("c") == "-1/2");
            found = true;
        }
    }
    CHECK(found);

    // the character refinement only exists on 4-pointed spaces
    CHECK(run_cli("graph-formula --d 3 --m 1,1,1,1,2 --e 1").exit_code == 4);
}

TEST_CASE("verify subcommand sweeps and reports") {
    const RunResult r = run_cli("verify question --dmax 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("question: checked") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);

    CHECK(run_cli("verify identity --dmax 8 --jobs 2").exit_code == 0);
    CHECK(run_cli("verify localization --dmax 6").exit_code == 0);
    CHECK(run_cli("verify graph --dmax 3 --nmax 5 --jobs 2").exit_code == 0);
    CHECK(run_cli("verify question --dmax 5", false, "HODGE_DEGREES_JOBS=3 ").exit_code == 0);
}

TEST_CASE("info prints the discrete invariants") {
    const RunResult r = run_cli("info --d 5 --m 1,4,2,3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n = 4, dimension = 1") != std::string::npos);
    CHECK(r.out.find("connected = true") != std::string::npos);
    CHECK(r.out.find("genus = 4") != std::string::npos);
    CHECK(r.out.find("q = 1,1,1,1") != std::string::npos);
    CHECK(r.out.find("e=4  rank = 1") != std::string::npos);
}

TEST_CASE("monodromies are reduced with a visible note") {
    const RunResult r = run_cli("lambda1 --d 5 --m 6,4,2,3", true);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("note: m[1] = 6 reduced mod 5 to 1") != std::string::npos);
    CHECK(r.out.find("4/25") != std::string::npos);
}

TEST_CASE("disconnected data are evaluated with a note") {
    const RunResult r = run_cli("lambda1 --d 4 --m 0,0,2,2", true);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("disconnected") != std::string::npos);
    CHECK(r.out.find("0\n") != std::string::npos);
}

TEST_CASE("invalid input exits with code 2") {
    CHECK(run_cli("lambda1 --d 5 --m 1,4,2").exit_code == 2);          // bad residue
    CHECK(run_cli("lambda1 --d 5").exit_code == 2);                    // missing --m
    CHECK(run_cli("lambda1 --d 0 --m 0,0,0,0").exit_code == 2);        // bad degree
    CHECK(run_cli("lambda1 --d 5 --m 1,x,2,3").exit_code == 2);        // not an integer
    CHECK(run_cli("lambda1e --d 5 --m 1,4,2,3 --e 7").exit_code == 2); // character out of range
    CHECK(run_cli("lambda1e --d 5 --m 1,4,2,3").exit_code == 2);       // neither --e nor --all-e
    CHECK(run_cli("verify nonsense --dmax 5").exit_code == 2);         // unknown suite
    CHECK(run_cli("verify question").exit_code == 2);                  // missing --dmax
    CHECK(run_cli("").exit_code == 2);                                 // subcommand required
    const RunResult r = run_cli("lambda1 --d 5 --m 1,4,2", true);
    CHECK(r.out.find("error:") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    const RunResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("lambda1") != std::string::npos);
    CHECK(r.out.find("verify") != std::string::npos);
}
