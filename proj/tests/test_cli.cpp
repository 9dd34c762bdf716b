#include "doctest.h"

#include "flk/cli.hpp"
#include "json.hpp"

#include <sstream>

namespace {

struct Run {
    int code;
    nlohmann::json out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = flk::cli::run(args, out, err);
    nlohmann::json j;
    if (!out.str().empty()) j = nlohmann::json::parse(out.str(), nullptr, false);
    return {code, j, err.str()};
}

}  // namespace

TEST_CASE("report envelope") {
    const auto r = run({"classify", "block", "--type", "A1", "--l", "5", "--lambda", "4"});
    CHECK(r.code == 0);
    CHECK(r.out["command"] == "classify block");
    CHECK(r.out["version"] == flk::cli::kVersion);
    CHECK(r.out["result"]["verdict"] == "Finite");
    CHECK(r.out.contains("hypotheses_used"));
    CHECK(r.out["params"]["--l"] == "5");
}

TEST_CASE("classify variants") {
    CHECK(run({"classify", "block", "--type", "A2", "--l", "5", "--lambda", "1,2"}).out["result"]["verdict"] == "Wild");
    CHECK(run({"classify", "block", "--type", "G2", "--l", "9", "--lambda", "0,0"}).out["result"]["verdict"] == "OutOfScope");
    const auto all = run({"classify", "block", "--type", "B2", "--l", "5", "--all", "--jobs", "2"});
    CHECK(all.code == 0);
    CHECK(all.out["result"].dump().find("Finite") != std::string::npos);
    CHECK(run({"classify", "borel", "--type", "A1", "--l", "5"}).out["result"]["verdict"] == "Finite");
    CHECK(run({"classify", "gr", "--type", "A1", "--l", "5", "--p", "3", "--r", "1", "--lambda", "4", "--mu", "1"})
              .out["result"]["verdict"] == "TameCandidate");
}

TEST_CASE("other subcommands") {
    CHECK(run({"qbinom", "10", "3", "--at", "5"}).out["result"] == "0");
    const auto rs = run({"rootsys", "--type", "G2"});
    CHECK(rs.out["result"]["positive_roots"].size() == 6);
    CHECK(run({"quiver", "b1", "--l", "3", "--p", "3", "--xi", "0"}).out["result"]["dimension"] == 81);
    const auto fixture = std::string(FLK_FIXTURE_DIR) + "/kronecker_trivial_extension.txt";
    const auto f = run({"quiver", "file", fixture});
    CHECK(f.code == 0);
    CHECK(f.out["result"]["dimension"] == 8);
    const auto ar = run({"ar", "simulate", "--a", "0", "--b", "3", "--window", "-6:6", "--seed", "const:1", "--d", "3"});
    CHECK(ar.code == 0);
    CHECK(ar.out.dump().find("band") != std::string::npos);
    const auto uq = run({"uq-sl2", "blocks", "--l", "3"});
    CHECK(uq.code == 0);
    CHECK(uq.out.dump().find("18") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"classify", "block", "--type", "Q7", "--l", "5", "--lambda", "0"}).code == 2);
    CHECK(run({"classify", "block", "--type", "A1", "--l", "5", "--lambda", "9"}).code == 2);
    CHECK(run({"quiver", "file", std::string(FLK_FIXTURE_DIR) + "/not_nilpotent.txt", "--cap", "4"}).code == 1);
    CHECK(run({"quiver", "file", std::string(FLK_FIXTURE_DIR) + "/bad_arrow.txt"}).code == 2);
    CHECK(run({"ar", "simulate", "--window", "0:3", "--seed", "list:1,0,2,1"}).code == 1);
}
