#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

// MKON_CLI_PATH is injected by the build as the location of the built binary.

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    RunResult r;
    std::string cmd = std::string(MKON_CLI_PATH) + " " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("eval prints reference values for the univariate family") {
    RunResult r = run_cli("eval m k=1 p=3.5 q=0 y=1");
    CHECK(r.code == 0);
    CHECK(r.out == "0.5\n");
}

TEST_CASE("eval prints reference values for the bivariate family") {
    RunResult r = run_cli("eval mk k=0 p=1.2 q=-0.5");
    CHECK(r.code == 0);
    CHECK(r.out == "0.334272752564191\n");

    RunResult r2 = run_cli("eval mk k=2 p=7 q=0.4 ups=2 y=0.5 z=1.2");
    CHECK(r2.code == 0);
    CHECK(r2.out == "1449.53448261961\n");
}

TEST_CASE("eval rejects unknown families with the usage exit code") {
    RunResult r = run_cli("eval nosuch k=1 p=3.5 q=0", true);
    CHECK(r.code == 2);
    CHECK(r.out.find("unknown family") != std::string::npos);
}

TEST_CASE("eval rejects missing and malformed parameters") {
    RunResult missing = run_cli("eval z k=2", true);
    CHECK(missing.code == 2);
    CHECK(missing.out.find("missing required parameter 'c'") !=
          std::string::npos);

    RunResult malformed = run_cli("eval m k=1 p=abc q=0", true);
    CHECK(malformed.code == 2);

    RunResult out_of_range = run_cli("eval m k=-1 p=3.5 q=0", true);
    CHECK(out_of_range.code == 2);
}

TEST_CASE("a one-cell table equals the eval output") {
    RunResult ev = run_cli("eval mk k=2 p=7 q=0.4 ups=2 y=0.5 z=1.2");
    RunResult tb = run_cli("table mk k=2 p=7 q=0.4 ups=2 y0=0.5 z0=1.2");
    CHECK(tb.code == 0);
    auto rows = lines_of(tb.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "y,z,value");
    std::string want = "0.5,1.2," + ev.out.substr(0, ev.out.size() - 1);
    CHECK(rows[1] == want);
}

TEST_CASE("tables are emitted in y-major order") {
    RunResult tb =
        run_cli("table mk k=1 p=7 q=0.4 y0=0 y1=1 ny=3 z0=0 z1=1 nz=2");
    CHECK(tb.code == 0);
    auto rows = lines_of(tb.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[1].rfind("0,0,", 0) == 0);
    CHECK(rows[2].rfind("0,1,", 0) == 0);
    CHECK(rows[3].rfind("0.5,0,", 0) == 0);
    CHECK(rows[6].rfind("1,1,", 0) == 0);
}

TEST_CASE("verify emits a csv report and succeeds on a green suite") {
    RunResult r = run_cli("verify --suite m-orth --format csv");
    CHECK(r.code == 0);
    auto rows = lines_of(r.out);
    REQUIRE(rows.size() > 1);
    CHECK(rows[0] == "suite,case_id,params,lhs,rhs,abs_err,rel_err,tol,mode,pass");
    for (size_t i = 1; i < rows.size(); i++)
        CHECK(rows[i].substr(rows[i].size() - 5) == ",true");
}

TEST_CASE("verify rejects unknown suites and formats") {
    CHECK(run_cli("verify --suite nosuch", true).code == 2);
    CHECK(run_cli("verify --suite m-orth --format yaml", true).code == 2);
}

TEST_CASE("verify reports failure when the tolerance override forces it") {
    RunResult r = run_cli("verify --suite m-orth --tol 0 --format csv");
    CHECK(r.code == 1);
}

TEST_CASE("jsonl reports parse and carry the meta header first") {
    RunResult r = run_cli("verify --suite genfun --format jsonl");
    CHECK(r.code == 0);
    auto rows = lines_of(r.out);
    REQUIRE(rows.size() > 1);
    auto meta = nlohmann::json::parse(rows[0]);
    CHECK(meta.at("record") == "meta");
    CHECK(meta.at("tool") == "mkon");
    CHECK(meta.at("cases") == int(rows.size()) - 1);
    for (size_t i = 1; i < rows.size(); i++) {
        auto row = nlohmann::json::parse(rows[i]);
        CHECK(row.contains("suite"));
        CHECK(row.contains("case_id"));
        CHECK(row.at("pass").is_boolean());
    }
}

TEST_CASE("reports are byte-identical across repeated runs and thread counts") {
    std::string f1 = "/tmp/mkon_cli_det1.jsonl";
    std::string f2 = "/tmp/mkon_cli_det2.jsonl";
    RunResult a =
        run_cli("verify --suite laplace --threads 1 --out " + f1);
    RunResult b =
        run_cli("verify --suite laplace --threads 4 --out " + f2);
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    std::string ta = slurp(f1), tb = slurp(f2);
    REQUIRE(!ta.empty());
    CHECK(ta == tb);
    std::remove(f1.c_str());
    std::remove(f2.c_str());
}

TEST_CASE("case filters select by substring tokens with index sugar") {
    RunResult r = run_cli("verify --suite m-orth --filter k=r=2 --format csv");
    CHECK(r.code == 0);
    auto rows = lines_of(r.out);
    REQUIRE(rows.size() > 1);
    for (size_t i = 1; i < rows.size(); i++) {
        CHECK(rows[i].find("k2") != std::string::npos);
        CHECK(rows[i].find("r2") != std::string::npos);
    }
}
