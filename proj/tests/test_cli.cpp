#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

std::string g_binary;

struct Run {
    int code = -1;
    std::string out;
};

// Runs the workbench binary through the shell, capturing stdout+stderr and the
// exit code. `envprefix` may hold shell variable assignments ("X=1 ").
Run run(const std::string& args, const std::string& envprefix = "") {
    const std::string cmd = envprefix + "'" + g_binary + "' " + args + " 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) throw std::runtime_error("popen failed for: " + cmd);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
    int status = pclose(f);
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = std::move(out);
    return r;
}

} // namespace

TEST_CASE("lie character: table output with dimension") {
    Run r = run("sym lie --r 6 --n 2");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "1/6*p[6] - 1/6*p[3,3] - 1/6*p[2,2,2] + 1/6*p[1,1,1,1,1,1]\n"
          "dim(n=2) = 9\n");
}

TEST_CASE("lie character: csv output quotes partitions with commas") {
    Run r = run("sym lie --r 6 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "partition,coefficient\n"
          "[6],1/6\n"
          "\"[3,3]\",-1/6\n"
          "\"[2,2,2]\",-1/6\n"
          "\"[1,1,1,1,1,1]\",1/6\n");
}

TEST_CASE("lie character: json output carries exact rationals") {
    Run r = run("sym lie --r 3 --n 2 --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("n") == 2);
    CHECK(j.at("dim") == "2");
    CHECK(j.at("character").at("basis") == "p");
    CHECK(j.at("character").at("terms") ==
          nlohmann::json::parse(R"([[[3],"-1/3"],[[1,1,1],"1/3"]])"));
}

TEST_CASE("display basis switch") {
    Run r = run("sym lie --r 2 --basis e");
    CHECK(r.code == 0);
    CHECK(r.out == "e[2]\n");
    Run bad = run("sym lie --r 2 --basis q");
    CHECK(bad.code == 2);
}

TEST_CASE("adams operation on the default character") {
    Run r = run("sym chi --r 2");
    CHECK(r.code == 0);
    CHECK(r.out == "p[2]\n");
}

TEST_CASE("restricted character table") {
    Run r = run("sym restricted --p 2 --i 1 --k 1 --n 2");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "1/2*p[2] + 1/2*p[1,1]\n"
          "dim(n=2) = 3\n");
}

TEST_CASE("character input: inline JSON and @file") {
    const std::string two_copies = R"('{"basis":"p","terms":[[[1],"2"]]}')";
    Run inl = run("sym lie --r 2 --input " + two_copies);
    CHECK(inl.code == 0);
    CHECK(inl.out == "-p[2] + 2*p[1,1]\n");

    const std::string path = "/tmp/liewb_cli_input.json";
    {
        std::ofstream out(path);
        out << R"({"basis":"p","terms":[[[1],"2"]]})";
    }
    Run file = run("sym lie --r 2 --input @" + path);
    CHECK(file.code == 0);
    CHECK(file.out == inl.out);
    std::remove(path.c_str());

    Run missing = run("sym lie --r 2 --input @/tmp/liewb_no_such_file.json");
    CHECK(missing.code == 2);
    Run malformed = run("sym lie --r 2 --input '{\"basis\":'");
    CHECK(malformed.code == 2);
    Run fractional = run(R"(sym lie --r 2 --input '{"basis":"p","terms":[[[1],"1/2"]]}')");
    CHECK(fractional.code == 1); // integrality failure, not a usage error
}

TEST_CASE("ghost solver output and dimensions") {
    Run r = run("witt --p 2 --k 3 --m 1 --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("p") == 2);
    CHECK(j.at("k") == 3);
    CHECK(j.at("m") == 1);
    CHECK(j.at("dims") == nlohmann::json::parse(R"([["2","8"]])"));
    CHECK(j.at("positive") == nlohmann::json::parse("[true,true]"));

    Run csv = run("witt --p 2 --k 3 --m 1 --n 2 --n 3 --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.substr(0, csv.out.find('\n')) == "i,degree,dim_n2,dim_n3,positive");
    CHECK(csv.out.find("0,3,2,8,true") != std::string::npos);

    Run bad = run("witt --p 2 --k 2 --m 1");
    CHECK(bad.code == 2); // k must be coprime to p
}

TEST_CASE("green ring operations") {
    Run phi = run("modular phi --p 2 --module J2 --r 2");
    CHECK(phi.code == 0);
    CHECK(phi.out == "-2*J2 + 2*J1\n");

    Run psi = run("modular psi --p 2 --module J2 --r 2");
    CHECK(psi.code == 0);
    CHECK(psi.out == "2*J1\n");

    Run psicsv = run("modular psi --p 2 --module J2 --r 2 --format csv");
    CHECK(psicsv.code == 0);
    CHECK(psicsv.out == "block,coefficient\nJ1,2\nJ2,0\n");

    Run rho = run("modular rho --p 2 --module J2 --r 4");
    CHECK(rho.code == 0);
    CHECK(rho.out == "0\n");

    Run dec = run("modular decompose --p 2 --expr 'J2*J2'");
    CHECK(dec.code == 0);
    CHECK(dec.out == "2*J2\n");

    Run expr = run("modular decompose --p 3 --expr '(J2+J1)*J2-2*J1+J3^2'");
    CHECK(expr.code == 0);
    CHECK(expr.out == "4*J3 + J2 - J1\n");

    Run json = run("modular phi --p 2 --module J2 --r 2 --format json");
    CHECK(json.code == 0);
    CHECK(nlohmann::json::parse(json.out) ==
          nlohmann::json::parse(R"({"coords":["2","-2"],"p":2})"));
}

TEST_CASE("green ring expression errors") {
    CHECK(run("modular decompose --p 2 --expr 'J3'").code == 2);       // block too big
    CHECK(run("modular decompose --p 2 --expr 'J2^'").code == 2);      // dangling operator
    CHECK(run("modular decompose --p 2 --expr 'J2)('").code == 2);     // trailing garbage
    CHECK(run("modular decompose --p 2 --expr 'K2'").code == 2);       // unknown atom
    CHECK(run("modular decompose --p 2 --module J2 --expr J1").code == 2); // both given
    CHECK(run("modular decompose --p 2").code == 2);                   // neither given
    CHECK(run("modular psi --p 4 --module J2 --r 2").code == 2);       // p not prime
}

TEST_CASE("size budget is honored and reported as exit 3") {
    Run r = run("modular phi --p 2 --module J2 --r 4", "LIEWB_BUDGET=10 ");
    CHECK(r.code == 3);
    CHECK(r.out.find("budget") != std::string::npos);

    // same computation fits with the default budget
    CHECK(run("modular phi --p 2 --module J2 --r 4").code == 0);

    Run bad = run("modular phi --p 2 --module J2 --r 2", "LIEWB_BUDGET=abc ");
    CHECK(bad.code == 2);
    Run zero = run("modular phi --p 2 --module J2 --r 2", "LIEWB_BUDGET=0 ");
    CHECK(zero.code == 2);
}

TEST_CASE("rho exploration stops gracefully at the budget") {
    Run r = run("explore rho-powers --p 2 --module J2 --max-m 3");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "rho^2 = -J2 + 2*J1\n"
          "rho^4 = 0\n"
          "rho^8 = 0\n");

    Run tight = run("explore rho-powers --p 2 --module J2 --max-m 3 --format json",
                    "LIEWB_BUDGET=8 ");
    CHECK(tight.code == 0); // truncation is reported, not fatal
    auto j = nlohmann::json::parse(tight.out);
    CHECK(j.at("truncated_by_budget") == true);
    CHECK(j.at("rows").size() == 1);
    CHECK(j.at("rows").at(0).at("r") == 2);
}

TEST_CASE("verification suites") {
    Run r = run("verify --suite factorisation --format csv");
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "identity,params,pass,witness");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.find(",true,") != std::string::npos);
        CHECK((line.find("resolvent") != std::string::npos ||
               line.find("adams") != std::string::npos));
    }
    CHECK(rows >= 4);

    Run j = run("verify --suite witt --format json");
    CHECK(j.code == 0);
    auto rep = nlohmann::json::parse(j.out);
    CHECK(rep.at("all_pass") == true);
    CHECK(rep.at("suite") == "witt");
    CHECK(rep.at("seed") == 20260825);

    // byte-for-byte reproducibility
    Run j2 = run("verify --suite witt --format json");
    CHECK(j2.code == 0);
    CHECK(j2.out == j.out);

    CHECK(run("verify --suite nosuch").code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("").code == 2);                        // subcommand required
    CHECK(run("sym").code == 2);                     // sym needs a subcommand
    CHECK(run("sym lie").code == 2);                 // --r is required
    CHECK(run("sym lie --r 2 --bogus").code == 2);   // unknown flag
    CHECK(run("sym lie --r 2 --format yaml").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("--help").code == 0);                  // help is a clean exit
    CHECK(run("sym lie --help").code == 0);
}

int run_all(int argc, char** argv) {
    std::vector<char*> pass;
    pass.push_back(argv[0]);
    for (int i = 1; i < argc; ++i) {
        if (argv[i][0] != '-' && g_binary.empty())
            g_binary = argv[i];
        else
            pass.push_back(argv[i]);
    }
    if (g_binary.empty()) {
        std::fprintf(stderr, "usage: %s <path-to-workbench-binary> [doctest options]\n",
                     argv[0]);
        return 1;
    }
    doctest::Context ctx(static_cast<int>(pass.size()), pass.data());
    return ctx.run();
}

int main(int argc, char** argv) { return run_all(argc, argv); }
