#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

#include "seljac/asymptotics.hpp"
#include "seljac/schur_moments.hpp"

using json = nlohmann::json;
using namespace seljac;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    std::string cmd = std::string(SELJAC_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    CliRun result{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("exit code contract") {
    CHECK(run_cli("ik --k 1 --n 2 --a 1 --b 1").exit_code == 0);
    CHECK(run_cli("ik --k 0 --n 1 --a 1 --b 1").exit_code == 2);
    CHECK(run_cli("ik --k 1 --n 2 --a 1").exit_code == 2);
    CHECK(run_cli("ik --k 1 --n 2 --a x --b 1").exit_code == 2);
    CHECK(run_cli("ik --k 1 --n 1 --a 1/2 --b -1/2").exit_code == 3);
    CHECK(run_cli("limit --k 2 --a1 -1 --b1 -1").exit_code == 3);
    CHECK(run_cli("limit --k 2 --a1 0 --b1 0 --form bogus").exit_code == 2);
    CHECK(run_cli("mc --k 1 --n 2 --a 0 --b 1 --samples 100 --burn-in 10").exit_code == 3);
    CHECK(run_cli("verify --suite bogus").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("ik record round-trips against the library") {
    struct Case { long k, n; const char* a; const char* b; };
    for (const Case& c : {Case{1, 2, "1", "1"}, Case{2, 1, "1", "1"}, Case{3, 4, "5/2", "1/3"}}) {
        CliRun r = run_cli("ik --k " + std::to_string(c.k) + " --n " + std::to_string(c.n) +
                           " --a " + c.a + " --b " + c.b);
        REQUIRE(r.exit_code == 0);
        json rec = json::parse(r.out);
        Rational want = ik_closed(c.k, Rational::parse(c.a), Rational::parse(c.b), c.n);
        CHECK(Rational::parse(rec["value"].get<std::string>()) == want);
        CHECK(rec["decimal"].get<std::string>() == want.to_decimal_string());
        CHECK(rec["command"] == "ik");
    }
}

TEST_CASE("limit record, special cases and forms") {
    CliRun r = run_cli("limit --k 2 --a1 0 --b1 0");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["value"] == "3/8");
    CHECK(rec["special"] == "central-binomial");

    r = run_cli("limit --k 3 --a1 0 --b1 -1");
    REQUIRE(r.exit_code == 0);
    rec = json::parse(r.out);
    CHECK(rec["value"] == "1/1");
    CHECK(rec["special"] == "b1=-1");

    r = run_cli("limit --k 1 --a1 1 --b1 1");
    REQUIRE(r.exit_code == 0);
    rec = json::parse(r.out);
    CHECK(rec["value"] == "1/2");
    CHECK(rec["special"].is_null());

    for (const char* form : {"general", "l1l2", "auto-special"}) {
        r = run_cli(std::string("limit --k 4 --a1 1/2 --b1 1/3 --form ") + form);
        REQUIRE(r.exit_code == 0);
        rec = json::parse(r.out);
        CHECK(Rational::parse(rec["value"].get<std::string>()) ==
              ik_limit(4, Rational(1, 2), Rational(1, 3)));
    }

    r = run_cli("limit --k 5 --a1 0 --b1 3/2");
    rec = json::parse(r.out);
    CHECK(rec["special"] == "catalan");
    r = run_cli("limit --k 5 --a1 3/2 --b1 0");
    rec = json::parse(r.out);
    CHECK(rec["special"] == "dyck");
}

TEST_CASE("table output") {
    CliRun r = run_cli("table --k-max 1 --a1 0 --b1 0 --n-list 10,100");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "k,N,ik_over_n,limit,abs_err,ik_over_n_exact,limit_exact,abs_err_exact");
    std::getline(lines, line);
    CHECK(line == "1,10,0.500000000000,0.500000000000,0.00000000000,1/2,1/2,0/1");
    std::getline(lines, line);
    CHECK(line.substr(0, 6) == "1,100,");

    SUBCASE("errors shrink with N at higher k") {
        CliRun conv = run_cli("table --k-max 2 --a1 0 --b1 0 --n-list 10,100");
        REQUIRE(conv.exit_code == 0);
        std::istringstream body(conv.out);
        std::string row;
        std::getline(body, row);  // header
        std::vector<Rational> errs;
        while (std::getline(body, row)) {
            if (row.rfind("2,", 0) != 0) continue;
            auto last_comma = row.find_last_of(',');
            errs.push_back(Rational::parse(row.substr(last_comma + 1)));
        }
        REQUIRE(errs.size() == 2);
        CHECK(errs[0] > errs[1]);
        CHECK(errs[1] > Rational(0));
    }

    CHECK(run_cli("table --k-max 1 --a1 0 --b1 0 --n-list ,").exit_code == 2);
    CHECK(run_cli("table --k-max 1 --a1 0 --b1 0 --n-list 0").exit_code == 2);

    // constant a+b = 0 makes N = 1 degenerate
    CHECK(run_cli("table --k-max 1 --a1 0 --b1 0 --a0 1/2 --b0 -1/2 --n-list 1").exit_code == 3);
    CliRun skipped =
        run_cli("table --k-max 1 --a1 0 --b1 0 --a0 1/2 --b0 -1/2 --n-list 1 --skip-degenerate");
    CHECK(skipped.exit_code == 0);
    CHECK(skipped.out ==
          "k,N,ik_over_n,limit,abs_err,ik_over_n_exact,limit_exact,abs_err_exact\n");
}

TEST_CASE("verify subcommand") {
    CliRun r = run_cli("verify --suite identities --json");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["all_pass"] == true);
    CHECK(rec["results"].size() >= 10);

    CliRun human = run_cli("verify --suite conjecture");
    CHECK(human.exit_code == 0);
    CHECK(human.out.find("PASS") != std::string::npos);
    CHECK(human.out.find("\033") == std::string::npos);  // piped output carries no color codes
}

TEST_CASE("--out writes the same bytes to a file") {
    std::string path = "/tmp/seljac_cli_out_test.json";
    std::remove(path.c_str());
    CliRun direct = run_cli("ik --k 2 --n 3 --a 2 --b 1");
    CliRun filed = run_cli("ik --k 2 --n 3 --a 2 --b 1 --out " + path);
    REQUIRE(filed.exit_code == 0);
    CHECK(filed.out.empty());
    std::ifstream is(path);
    std::stringstream buffer;
    buffer << is.rdbuf();
    CHECK(buffer.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("mc determinism and content") {
    const std::string cmd = "mc --k 1 --n 6 --a 1 --b 1 --seed 42 --samples 5000 --burn-in 200";
    CliRun r1 = run_cli(cmd);
    CliRun r2 = run_cli(cmd);
    REQUIRE(r1.exit_code == 0);
    CHECK(r1.out == r2.out);

    json rec = json::parse(r1.out);
    CHECK(rec["exact"].get<std::string>() ==
          ik_closed(1, Rational(1), Rational(1), 6).to_fraction_string());
    double z = std::stod(rec["z_score"].get<std::string>());
    CHECK(std::fabs(z) < 6.0);

    CliRun other = run_cli("mc --k 1 --n 6 --a 1 --b 1 --seed 43 --samples 5000 --burn-in 200");
    CHECK(other.out != r1.out);
}
