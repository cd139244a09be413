#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(IDLAT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("classify emits the expected record") {
    const RunResult r = run_cli("classify --field 13 --a 276 --b 259");
    CHECK_EQ(r.exit_code, 0);
    CHECK(r.out.find("13,276,259,604,1,-1,3961152,false,S3,none,false") != std::string::npos);
}

TEST_CASE("classify on an ideal triple matches its normalized pair") {
    const RunResult ideal = run_cli("classify --field 13 --a 3 --b 2 --g 1 --ideal");
    const RunResult pair = run_cli("classify --field 13 --a 6 --b 5");
    CHECK_EQ(ideal.exit_code, 0);
    CHECK_EQ(ideal.out, pair.out);
}

TEST_CASE("invalid input exits 2") {
    CHECK_EQ(run_cli("classify --field 13 --a 7 --b 3").exit_code, 2);  // 7 does not divide -4
    CHECK_EQ(run_cli("classify --field 12 --a 7 --b 3").exit_code, 2);  // D not squarefree
    CHECK_EQ(run_cli("frobnicate").exit_code, 2);
    CHECK_EQ(run_cli("census --field 2 --b-max 10 --gamma 1.5").exit_code, 2);  // decimal gamma
    CHECK_EQ(run_cli("census --field 2 --b-max 10 --gamma 1/2").exit_code, 2);  // gamma <= 1
    CHECK_EQ(run_cli("wr-demo --n 3 --cos 3/5").exit_code, 2);
    CHECK_EQ(run_cli("classify --field 13 --a 2 --b 1 --ideal").exit_code, 2);  // not an ideal
}

TEST_CASE("census exits 0 even when counterexamples are present") {
    const RunResult r = run_cli("census --field 2 --b-max 20 --gamma 7/3");
    CHECK_EQ(r.exit_code, 0);
    CHECK(r.out.find("2,17,6,38,1,-3,2312,false,S3,stable,true") != std::string::npos);
}

TEST_CASE("census output is deterministic across thread counts") {
    const RunResult one = run_cli("census --field 13 --b-max 30 --gamma 2 --threads 1");
    const RunResult many = run_cli("census --field 13 --b-max 30 --gamma 2 --threads 8");
    CHECK_EQ(one.exit_code, 0);
    CHECK_EQ(one.out, many.out);
    const RunResult env = run_cli("census --field 13 --b-max 30 --gamma 2");
    CHECK_EQ(env.out, one.out);
}

TEST_CASE("IDLAT_THREADS overrides --threads") {
    const RunResult plain = run_cli("census --field 2 --b-max 25 --gamma 3");
    const RunResult env = run_cli("census --field 2 --b-max 25 --gamma 3 --threads 1");
    CHECK_EQ(plain.out, env.out);
    const std::string cmd = "IDLAT_THREADS=3 " + std::string(IDLAT_CLI_PATH) +
                            " census --field 2 --b-max 25 --gamma 3 --threads 1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    CHECK_EQ(WEXITSTATUS(pclose(pipe)), 0);
    CHECK_EQ(out, plain.out);
}

TEST_CASE("jsonl format") {
    const RunResult r = run_cli("wr-demo --n 3 --cos 1/2 --format jsonl");
    CHECK_EQ(r.exit_code, 0);
    CHECK_EQ(r.out, "{\"n\":3,\"cos\":\"1/2\",\"s\":\"3/4\",\"wr\":true,\"unstable\":true}\n");
}

TEST_CASE("empty result sets still emit the CSV header") {
    CHECK_EQ(run_cli("s1-census --field 2 --b-max 50").out, "D,a,b\n");
    CHECK_EQ(run_cli("divisor-scan --field 2 --eps 2/5 --x-max 1000").out, "D,eps,x\n");
    // jsonl has no header concept: empty set means empty output
    CHECK(run_cli("s1-census --field 2 --b-max 50 --format jsonl").out.empty());
}

TEST_CASE("classify with a gamma fills the band column") {
    const RunResult r = run_cli("classify --field 2 --a 17 --b 6 --gamma 7/3");
    CHECK(r.out.find("2,17,6,38,1,-3,2312,false,S3,stable,true") != std::string::npos);
}

TEST_CASE("subcommand record surfaces") {
    CHECK(run_cli("estimate-gamma --field 2 --b-max 8").out.find("2,8,31/8") != std::string::npos);
    CHECK(run_cli("audit-ratio --field 2 --b-max 30").out.find("2,30,15") != std::string::npos);
    const RunResult scan = run_cli("divisor-scan --field 13 --eps 49/100 --x-max 100");
    CHECK(scan.out.find("13,49/100,11") != std::string::npos);
    const RunResult dens = run_cli("density --field 2 --x-max 20");
    CHECK(dens.out.find("2,20,3,2,1,") != std::string::npos);
}

TEST_CASE("output file writing") {
    const std::string path = "cli_test_out.csv";
    const RunResult r = run_cli("classify --field 2 --a 7 --b 3 --out " + path);
    CHECK_EQ(r.exit_code, 0);
    CHECK(r.out.empty());
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::array<char, 512> buf{};
    const std::size_t got = fread(buf.data(), 1, buf.size() - 1, f);
    fclose(f);
    REQUIRE(got > 0);
    std::remove(path.c_str());
    CHECK(std::string(buf.data()).find("2,7,3,18,1,-2,392,false,S3,none,false") !=
          std::string::npos);
}
