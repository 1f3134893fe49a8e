#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string cli = ADHC_CLI_PATH;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_file = "/tmp/adhc_cli_out.txt";
    std::string cmd = cli + " " + args + " > " + out_file + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return {code, ss.str()};
}

std::string deterministic_part(const std::string& json_text) {
    auto a = json_text.find("\"deterministic\"");
    auto b = json_text.find("\"measured\"");
    if (a == std::string::npos || b == std::string::npos) return json_text;
    return json_text.substr(a, b - a);
}

} // namespace

TEST_CASE("generate, solve and verify round-trip") {
    CHECK(run("gen --family complete --n 6 -o /tmp/cli_k6.dg").exit_code == 0);
    CHECK(run("solve /tmp/cli_k6.dg --what adhc --cert /tmp/cli_k6.cert").exit_code == 0);
    CHECK(run("verify /tmp/cli_k6.dg /tmp/cli_k6.cert").exit_code == 0);

    // a tampered certificate is rejected
    {
        std::ifstream in("/tmp/cli_k6.cert");
        std::stringstream ss;
        ss << in.rdbuf();
        std::string cert = ss.str();
        auto pos = cert.find(' ');
        cert[pos + 1] = cert[0]; // repeat a vertex
        std::ofstream out("/tmp/cli_k6_bad.cert");
        out << cert;
    }
    CHECK(run("verify /tmp/cli_k6.dg /tmp/cli_k6_bad.cert").exit_code == 1);
}

TEST_CASE("exit codes follow the contract") {
    CHECK(run("gen --family f1 --n 12 -o /tmp/cli_f1.dg").exit_code == 0);
    // proven negative
    CHECK(run("solve /tmp/cli_f1.dg --what adhc --mode exact").exit_code == 1);
    // invalid input: odd order for the exception family
    CHECK(run("gen --family f1 --n 13").exit_code == 2);
    // budget exhaustion is inconclusive
    CHECK(run("solve /tmp/cli_f1.dg --what adhc --budget 3").exit_code == 3);
    // unknown flags are errors
    CHECK(run("solve /tmp/cli_f1.dg --frobnicate").exit_code == 2);
    // missing file
    CHECK(run("solve /tmp/no_such_file.dg").exit_code == 2);
}

TEST_CASE("naive and exact mode agree through the CLI") {
    CHECK(run("gen --family cycle --pattern alt --n 8 -o /tmp/cli_c8.dg").exit_code == 0);
    CHECK(run("solve /tmp/cli_c8.dg --what adhc --mode exact").exit_code == 0);
    CHECK(run("solve /tmp/cli_c8.dg --what adhc --mode naive").exit_code == 0);
    CHECK(run("gen --family cycle --pattern ++++++ -o /tmp/cli_dir6.dg").exit_code == 0);
    CHECK(run("solve /tmp/cli_dir6.dg --what adhc").exit_code == 1);
    CHECK(run("solve /tmp/cli_dir6.dg --what dhc").exit_code == 0);
}

TEST_CASE("spanning path and 2-factor targets") {
    CHECK(run("gen --family complete --n 5 -o /tmp/cli_k5.dg").exit_code == 0);
    CHECK(run("solve /tmp/cli_k5.dg --what adhp --cert /tmp/cli_k5.adp").exit_code == 0);
    CHECK(run("verify /tmp/cli_k5.dg /tmp/cli_k5.adp").exit_code == 0);

    CHECK(run("solve /tmp/cli_f1.dg --what 2factor --max-cycles 2 --cert /tmp/cli_f1.tf")
              .exit_code == 0);
    CHECK(run("verify /tmp/cli_f1.dg /tmp/cli_f1.tf").exit_code == 0);
    CHECK(run("solve /tmp/cli_f1.dg --what 2factor --max-cycles 1").exit_code == 1);
}

TEST_CASE("census output matches the closed forms") {
    CHECK(run("gen --family complete --n 8 -o /tmp/cli_k8.dg").exit_code == 0);
    auto abs = run("census /tmp/cli_k8.dg --what absorbers --pair 0,1");
    CHECK(abs.exit_code == 0);
    CHECK(abs.out.find("360") != std::string::npos);
    auto con = run("census /tmp/cli_k8.dg --what connectors --pair 0,1");
    CHECK(con.out.find("30") != std::string::npos);
    auto all = run("census /tmp/cli_k8.dg --what connectors --jobs 2 --format json");
    CHECK(all.exit_code == 0);
    CHECK(all.out.find("\"min\": 30") != std::string::npos);
}

TEST_CASE("extremal witness exit codes") {
    CHECK(run("gen --family f --n 8 --k 1 -o /tmp/cli_f81.dg").exit_code == 0);
    CHECK(run("extremal /tmp/cli_f81.dg --alpha 0.25 --mode exact").exit_code == 0);
    CHECK(run("gen --family complete --n 8 -o /tmp/cli_k8b.dg").exit_code == 0);
    CHECK(run("extremal /tmp/cli_k8b.dg --alpha 0.25 --mode exact").exit_code == 1);
}

TEST_CASE("stars and maxcut run on generated inputs") {
    CHECK(run("gen --family complete --n 10 -o /tmp/cli_k10.dg").exit_code == 0);
    auto st = run("stars /tmp/cli_k10.dg");
    CHECK(st.exit_code == 0);
    auto mc = run("maxcut /tmp/cli_k10.dg --x 0,1,2,3,4 --y 5,6,7,8,9 --c 0.5");
    CHECK(mc.exit_code == 0);

    // @file set syntax
    {
        std::ofstream out("/tmp/cli_set.txt");
        out << "0 1 2 3 4\n";
    }
    CHECK(run("maxcut /tmp/cli_k10.dg --x @/tmp/cli_set.txt --y 5,6,7,8,9 --c 0.5").exit_code ==
          0);
}

TEST_CASE("pipeline reports are deterministic given argv and seed") {
    CHECK(run("gen --family random --n 40 --d 24 --seed 9 -o /tmp/cli_r40.dg").exit_code == 0);
    auto a = run("pipeline /tmp/cli_r40.dg --seed 5 --report json");
    auto b = run("pipeline /tmp/cli_r40.dg --seed 5 --report json");
    CHECK(a.exit_code == 0);
    CHECK(deterministic_part(a.out) == deterministic_part(b.out));
    CHECK(a.out.find("\"outcome\": \"adhc\"") != std::string::npos);

    CHECK(run("pipeline /tmp/cli_f1.dg").exit_code == 1); // absent proven at order 12
}

TEST_CASE("pipeline certificates re-verify through the CLI") {
    CHECK(run("pipeline /tmp/cli_r40.dg --seed 5 --cert /tmp/cli_r40.cert").exit_code == 0);
    CHECK(run("verify /tmp/cli_r40.dg /tmp/cli_r40.cert").exit_code == 0);
}

TEST_CASE("counterexample search and bench run") {
    auto se = run("search --size 8 --trials 40 --floor 6 --seed 3 --jobs 2");
    CHECK(se.exit_code == 0);
    auto be = run("bench --suite exact-12");
    CHECK(be.exit_code == 0);
    CHECK(be.out.find("\"outcome\": \"absent\"") != std::string::npos);
    CHECK(run("bench --suite nonsense").exit_code == 2);
}

TEST_CASE("generated ladders and dot output") {
    auto lad = run("gen --family ladder --n 3 -o -");
    CHECK(lad.exit_code == 0);
    CHECK(lad.out.substr(0, 4) == "6 14"); // 2 arcs per ladder edge
    CHECK(run("gen --family aladder --n 3 --dot /tmp/cli_lad.dot -o /tmp/cli_lad.dg").exit_code ==
          0);
    std::ifstream dot("/tmp/cli_lad.dot");
    std::stringstream ss;
    ss << dot.rdbuf();
    CHECK(ss.str().find("->") != std::string::npos);
}

TEST_CASE("stdin input works") {
    CHECK(run("gen --family complete --n 4 -o - | " + cli + " solve - --what adhc").exit_code ==
          0);
}
