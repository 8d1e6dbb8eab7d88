#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "trichrome/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;

    std::vector<json> json_lines() const {
        std::vector<json> rows;
        std::istringstream stream(out);
        std::string line;
        while (std::getline(stream, line))
            if (!line.empty()) rows.push_back(json::parse(line));
        return rows;
    }
};

RunResult run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    RunResult result;
    result.code = trichrome::run_cli(args, in, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

} // namespace

TEST_CASE("analyze reports invariants as json lines") {
    auto r = run({"analyze", "Bw"});
    REQUIRE(r.code == 0);
    auto rows = r.json_lines();
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["n"] == 3);
    CHECK(rows[0]["m"] == 3);
    CHECK(rows[0]["omega"] == 3);
    CHECK(rows[0]["chi"] == 3);
    CHECK(rows[0]["gamma"] == 3);
    CHECK(rows[0]["psi"] == 3);
    CHECK(rows[0]["witnesses"]["chi"].size() == 3);
}

TEST_CASE("analyze reads stdin and keeps input order") {
    auto r = run({"analyze"}, "Bw\n@\n");
    REQUIRE(r.code == 0);
    auto rows = r.json_lines();
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["n"] == 3);
    CHECK(rows[1]["n"] == 1);
}

TEST_CASE("analyze flags bad graph6 and keeps going") {
    auto r = run({"analyze", "Bw", "!!bad!!", "@"});
    CHECK(r.code == 2);
    auto rows = r.json_lines();
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["n"] == 3);
    CHECK(rows[1].contains("error"));
    CHECK(rows[1]["input"] == "!!bad!!");
    CHECK(rows[2]["n"] == 1);
}

TEST_CASE("analyze pretty prints a table") {
    auto r = run({"analyze", "--pretty", "Bw"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("omega") != std::string::npos);
    CHECK(r.out.find("chi") != std::string::npos);
}

TEST_CASE("construct emits graph6 and optional labels") {
    auto r = run({"construct", "gstar", "--g", "3", "--h", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "CU\n"); // edges u1w2 u1w3 u2w3 in the u-then-w numbering

    auto labeled = run({"construct", "bk", "--k", "3", "--labels"});
    REQUIRE(labeled.code == 0);
    auto rows = labeled.json_lines();
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["graph6"] == "CU");
    CHECK(rows[0]["labels"] == json::array({"u1", "u2", "w2", "w3"}));

    CHECK(run({"construct", "kf", "--f", "4"}).code == 0);
    CHECK(run({"construct", "l1", "--h", "5"}).code == 0);
    CHECK(run({"construct", "l2", "--h", "5"}).code == 0);
    CHECK(run({"construct", "reduced", "--t", "3"}).code == 0);
    CHECK(run({"construct", "extended", "--ell", "3"}).code == 0);
}

TEST_CASE("construct rejects missing arguments and unknown families") {
    auto missing = run({"construct", "gstar", "--g", "3"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("--h") != std::string::npos);
    CHECK(run({"construct", "flower", "--k", "3"}).code == 1);
    CHECK(run({"construct", "bk", "--k", "1"}).code == 1); // invalid size
}

TEST_CASE("min-order prints the formula value or null") {
    auto ok = run({"min-order", "--f", "3", "--g", "4", "--h", "6"});
    REQUIRE(ok.code == 0);
    auto rows = ok.json_lines();
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["realizable"] == true);
    CHECK(rows[0]["min_order"] == 9);

    auto unreal = run({"min-order", "--f", "2", "--g", "2", "--h", "3"});
    REQUIRE(unreal.code == 0);
    rows = unreal.json_lines();
    CHECK(rows[0]["realizable"] == false);
    CHECK(rows[0]["min_order"].is_null());

    CHECK(run({"min-order", "--f", "3", "--g", "2", "--h", "4"}).code == 1); // f > g
    CHECK(run({"min-order", "--f", "3", "--g", "4"}).code == 1);             // missing flag
}

TEST_CASE("realize produces a graph or a data error") {
    auto ok = run({"realize", "--f", "2", "--g", "3", "--h", "3"});
    REQUIRE(ok.code == 0);
    CHECK(ok.out == "CU\n");

    auto unreal = run({"realize", "--f", "2", "--g", "2", "--h", "4"});
    CHECK(unreal.code == 2);
    CHECK(unreal.json_lines()[0]["error"] == "triple is not realizable");
}

TEST_CASE("enumerate counts and streams") {
    auto count = run({"enumerate", "--n", "6", "--count"});
    REQUIRE(count.code == 0);
    auto rows = count.json_lines();
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["n"] == 6);
    CHECK(rows[0]["class_count"] == 112);
    CHECK(rows[0].contains("elapsed_ms"));

    auto stream = run({"enumerate", "--n", "4"});
    REQUIRE(stream.code == 0);
    // Six connected classes on four vertices, one graph6 token per line.
    std::istringstream lines(stream.out);
    std::string line;
    int count4 = 0;
    while (std::getline(lines, line))
        if (!line.empty()) ++count4;
    CHECK(count4 == 6);
}

TEST_CASE("enumerate output does not depend on the thread count") {
    auto one = run({"enumerate", "--n", "7", "--threads", "1"});
    auto four = run({"enumerate", "--n", "7", "--threads", "4"});
    REQUIRE(one.code == 0);
    REQUIRE(four.code == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("enumerate guards its budgets") {
    CHECK(run({"enumerate", "--n", "9"}).code == 1);  // needs --extended
    CHECK(run({"enumerate", "--n", "11"}).code == 2); // beyond the enumerator
    CHECK(run({"enumerate"}).code == 1);              // no size given
    CHECK(run({"enumerate", "--h-optimal", "3"}).code == 1);
    CHECK(run({"enumerate", "--h-optimal", "7"}).code == 2);
    CHECK(run({"enumerate", "--h-optimal", "6"}).code == 1); // needs --extended
}

TEST_CASE("enumerate lists the extremal catalogue") {
    auto r = run({"enumerate", "--h-optimal", "4"});
    REQUIRE(r.code == 0);
    auto rows = r.json_lines();
    REQUIRE(rows.size() == 7);
    for (const auto& row : rows) {
        CHECK(row["n"] == 6);
        CHECK(row["chi"] == 3);
        CHECK(row["gamma"] == 3);
        CHECK(row["psi"] == 4);
        CHECK(row.contains("graph6"));
    }
}

TEST_CASE("verify single scopes") {
    auto ok = run({"verify", "minorder", "--f", "2", "--g", "3", "--h", "3"});
    REQUIRE(ok.code == 0);
    auto rows = ok.json_lines();
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["pass"] == true);

    auto unreal = run({"verify", "minorder", "--f", "2", "--g", "2", "--h", "3"});
    CHECK(unreal.code == 2);
    CHECK(unreal.json_lines()[0].contains("error"));

    auto capped = run({"verify", "hoptimal", "--h", "7"});
    CHECK(capped.code == 3);
    CHECK(capped.json_lines()[0]["skipped"] == "capacity");

    auto gated = run({"verify", "hoptimal", "--h", "6"});
    CHECK(gated.code == 3);
    CHECK(gated.json_lines()[0]["skipped"] == "extended");

    CHECK(run({"verify", "minorder", "--f", "2"}).code == 1);
    CHECK(run({"verify", "everything"}).code == 1);
}

TEST_CASE("certify judges certificates") {
    // "Cs" is the star with center 0; {1} is dominated by the stable set {0}.
    auto good = run({"certify", "Cs", "--cert", R"({"h_set":[1],"s_set":[0],"k":1})"});
    REQUIRE(good.code == 0);
    auto rows = good.json_lines();
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["ok"] == true);
    CHECK(rows[0]["implied_lower_bound"] == 2);
    CHECK(rows[0]["reason"].is_null());

    auto bad = run({"certify", "Cs", "--cert", R"({"h_set":[1],"s_set":[1],"k":1})"});
    REQUIRE(bad.code == 0);
    rows = bad.json_lines();
    CHECK(rows[0]["ok"] == false);
    CHECK(rows[0]["reason"] == "not disjoint");
    CHECK(rows[0]["implied_lower_bound"].is_null());

    auto malformed = run({"certify", "Cs", "--cert", "{not json"});
    CHECK(malformed.code == 1);
    CHECK(malformed.err.find("malformed certificate JSON") != std::string::npos);

    auto out_of_range = run({"certify", "Cs", "--cert", R"({"h_set":[99],"s_set":[0],"k":1})"});
    CHECK(out_of_range.code == 2);
    CHECK(out_of_range.json_lines()[0].contains("error"));

    auto no_cert = run({"certify", "Cs"});
    CHECK(no_cert.code == 1);
}

TEST_CASE("top level usage errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}
