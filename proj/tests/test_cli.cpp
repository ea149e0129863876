#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(DHX_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("count subcommand") {
    RunResult r = run_cli("count -a 3 -b 4 -c 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"count\": \"490\""));
    CHECK(contains(r.output, "\"format\": 1"));
    CHECK(contains(r.output, "\"tileable\": true"));

    CHECK(contains(run_cli("count -a 1 -b 1 -c 1 --method brute").output, "\"count\": \"2\""));
    CHECK(contains(run_cli("count -a 1 -b 1 -c 1 --method lgv").output, "\"count\": \"2\""));

    RunResult zero = run_cli("count -a 2 -b 2 -c 2 -t 2 -u 1 -v 1");
    CHECK(zero.exit_code == 0);
    CHECK(contains(zero.output, "\"count\": \"0\""));
    CHECK(contains(zero.output, "\"tileable\": false"));

    // counts never overflow: emitted as decimal strings
    RunResult big = run_cli("count -a 10 -b 10 -c 10");
    CHECK(contains(big.output, "\"9265037718181937012241727284450000\""));
}

TEST_CASE("count rejects invalid specs with exit 2") {
    RunResult r = run_cli("count -a 2 -b 2 -c 2 -t 2 -u 9");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "u indices"));
    CHECK(run_cli("count --spec /nonexistent.json").exit_code == 2);
}

TEST_CASE("tileable subcommand") {
    RunResult fig2 = run_cli("tileable -a 4 -b 3 -c 2 -t 4 -u 1,4 -v 3,4");
    CHECK(fig2.exit_code == 0);
    CHECK(contains(fig2.output, "\"tileable\": true"));
    CHECK(contains(fig2.output, "\"witness_N\": null"));

    RunResult bad = run_cli("tileable -a 2 -b 2 -c 2 -t 2 -u 1 -v 1");
    CHECK(bad.exit_code == 0);
    CHECK(contains(bad.output, "\"tileable\": false"));
    CHECK(contains(bad.output, "\"witness_N\": 1"));

    CHECK(contains(run_cli("tileable -a 3 -b 4 -c 2").output, "\"tileable\": true"));

    RunResult unb = run_cli("tileable -a 2 -b 2 -c 2 -t 1");
    CHECK(unb.exit_code == 2);
    CHECK(contains(unb.output, "t != m + n"));
}

TEST_CASE("render subcommand") {
    RunResult svg = run_cli("render -a 3 -b 4 -c 2 --format svg --which region");
    CHECK(svg.exit_code == 0);
    CHECK(contains(svg.output, "<svg"));

    RunResult ascii1 = run_cli("render -a 4 -b 3 -c 2 -t 4 -u 1,4 -v 3,4 --format ascii");
    RunResult ascii2 = run_cli("render -a 4 -b 3 -c 2 -t 4 -u 1,4 -v 3,4 --format ascii");
    CHECK(ascii1.exit_code == 0);
    CHECK(ascii1.output == ascii2.output);

    RunResult untileable = run_cli("render -a 2 -b 2 -c 2 -t 2 -u 1 -v 1 --which first_tiling");
    CHECK(untileable.exit_code == 3);
    CHECK(contains(untileable.output, "no tilings"));
}

TEST_CASE("verify subcommand") {
    RunResult kuo1 = run_cli("verify --suite kuo --seed 42");
    CHECK(kuo1.exit_code == 0);
    CHECK(contains(kuo1.output, "verdict=PASS"));
    RunResult kuo2 = run_cli("verify --suite kuo --seed 42");
    CHECK(kuo1.output == kuo2.output);

    RunResult mono = run_cli("verify --suite monotone --bounds b=2,c=2,dents=2");
    CHECK(mono.exit_code == 0);

    RunResult fault = run_cli("verify --suite poly --bounds a=1,b=1,c=1,dents=1 "
                              "--inject-fault ubar-off-by-one");
    CHECK(fault.exit_code == 1);
    CHECK(contains(fault.output, "polynomiality_suite"));
    CHECK(contains(fault.output, "failure: {\"a\""));
}

TEST_CASE("spec file input and report output") {
    std::string dir = "/tmp/dhx_cli_test";
    REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
    {
        FILE* f = fopen((dir + "/spec.json").c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("{\"a\":3,\"b\":4,\"c\":2,\"t\":0,\"u\":[],\"v\":[]}", f);
        fclose(f);
    }
    RunResult r = run_cli("count --spec " + dir + "/spec.json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"count\": \"490\""));

    RunResult v = run_cli("verify --suite monotone --bounds b=1,c=1,dents=1 --out " + dir +
                          "/report.txt");
    CHECK(v.exit_code == 0);
    std::ifstream in(dir + "/report.txt");
    std::string report((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(contains(report, "monotonicity_suite"));
    CHECK(contains(report, "ALL PASS"));
}

TEST_CASE("sweep emits csv with decimal-string counts") {
    RunResult r = run_cli("sweep --max-a 1 --max-b 1 --max-c 1 --max-dents 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "a,b,c,t,u,v,tileable,count,method,ms"));
    CHECK(contains(r.output, "1,1,1,0,\"\",\"\",1,2,"));
}
