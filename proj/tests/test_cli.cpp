#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "psskit/cli.hpp"
#include "psskit/genlib.hpp"
#include "psskit/io.hpp"
#include "psskit/spanset.hpp"
#include "support.hpp"

using namespace psskit;
using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

json report(const std::vector<std::string>& args, const std::string& input) {
    const auto r = run(args, input);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

const char* kTriangle = R"({"dim": 2, "vectors": [["1", "0"], ["0", "1"], ["-1", "-1"]]})";

}  // namespace

TEST_CASE("vector set JSON round trip") {
    const auto x = example_x9();
    CHECK(parse_vecset(format_vecset(x)) == x);
    const VecSet q(2, {QVec{Rat(1, 2), Rat(-3, 7)}, QVec{0, 5}});
    const auto text = format_vecset(q);
    CHECK(text == "{\"dim\":2,\"vectors\":[[\"1/2\",\"-3/7\"],[\"0\",\"5\"]]}\n");
    CHECK(parse_vecset(text) == q);
    CHECK(parse_vecset(R"({"dim": 1, "vectors": [[2], ["-3"]]})") == VecSet(1, {QVec{2}, QVec{-3}}));
}

TEST_CASE("input diagnostics name the offending vector") {
    auto expect = [](const std::string& text, const std::string& needle) {
        try {
            (void)parse_vecset(text);
            FAIL("no error for " << text);
        } catch (const Error& e) {
            CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos, e.what());
        }
    };
    expect("not json", "JSON");
    expect(R"({"vectors": []})", "dim");
    expect(R"({"dim": 2, "vectors": [["1", "0"], ["1"]]})", "vector 1");
    expect(R"({"dim": 2, "vectors": [["1", "0"], ["1", "x"]]})", "vector 1, entry 1");
    expect(R"({"dim": 2, "vectors": [["1", "0"], ["0", "0"]]})", "vector 1 is zero");
    expect(R"({"dim": 2, "vectors": [["1", "0"], ["2/2", "0"]]})", "vector 1 duplicates vector 0");
    expect(R"({"dim": 2, "vectors": [["1", "0"], ["1/0", "1"]]})", "vector 1, entry 0");
}

TEST_CASE("generate then analyze") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"generate", "cross", "--dim", "3"},
             {"generate", "simplex", "--dim", "2", "--scales", "2,1"},
             {"generate", "antichain", "--dim", "3", "--subsets", "1,2;2,3", "--weights", "1,2;1/2,3"},
             {"generate", "x9"},
             {"generate", "polygon", "--n", "4"},
             {"generate", "random", "--dim", "4", "--n", "2", "--seed", "7"},
         }) {
        const auto g = run(args);
        REQUIRE(g.code == 0);
        const auto x = parse_vecset(g.out);
        const auto a = report({"analyze"}, g.out);
        CHECK(a["command"] == "analyze");
        CHECK(a["counts"]["vectors"] == x.size());
        CHECK(a["flags"]["pss"] == is_pss(x));
    }
    CHECK(parse_vecset(run({"generate", "random", "--dim", "4", "--n", "2", "--seed", "7"}).out) ==
          random_positive_basis(4, 2, 7));
}

TEST_CASE("analyze report on the 9-vector example") {
    const auto a = report({"analyze", "-"}, format_vecset(example_x9()));
    CHECK(a["flags"]["pss"] == true);
    CHECK(a["flags"]["positive_basis"] == false);
    CHECK(a["flags"]["locally_equilibrated"] == true);
    CHECK(a["counts"]["rank"] == 5);
    CHECK(a["counts"]["simplices"] == 5);
    CHECK(a["counts"]["dependencies"] == 4);
    CHECK(a["counts"]["lattice_size"] == 22);
    CHECK(a["certificates"]["positive_dependence"]["element"] == 2);
    // Indices in reports are 0-based: x6 is element 5.
    bool found = false;
    for (const auto& w : a["certificates"]["positively_dependent_elements"])
        if (w["element"] == 5) {
            found = true;
            std::vector<std::size_t> ids;
            for (const auto& [k, v] : w["coefficients"].items()) {
                ids.push_back(std::stoul(k));
                CHECK(v == "1");
            }
            CHECK(ids == std::vector<std::size_t>{0, 1, 7, 8});
        }
    CHECK(found);
    CHECK_FALSE(a["certificates"]["factorization_failure"].is_null());
}

TEST_CASE("other commands") {
    auto r = report({"simplices"}, kTriangle);
    CHECK(r["count"] == 1);
    r = report({"lattice"}, format_vecset(make_cross(2)));
    CHECK(r["size"] == 4);
    CHECK(r["isomorphic_to_powerset"] == true);
    r = report({"mns"}, format_vecset(make_cross(3)));
    CHECK(r["count"] == 8);
    r = report({"cones"}, format_vecset(make_cross(2)));
    CHECK(r["parts"].size() == 3);
    CHECK(r["frame_family"].size() == 4);
    r = report({"gale"}, format_vecset(make_cross(2)));
    CHECK(r["dependencies"].size() == 2);
    r = report({"reay"}, format_vecset(make_cross(3)));
    CHECK(r["parts"].size() == 3);
    CHECK(r["dimensions"] == json::array({1, 2, 3}));
    r = report({"verify"}, format_vecset(example_x9()));
    CHECK(r["failed"] == 0);
}

TEST_CASE("exit codes") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"analyze", "--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"generate", "hexagon"}).code == 2);
    CHECK(run({"analyze"}, "{").code == 2);
    CHECK(run({"analyze", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"reay"}, format_vecset(example_x9())).code == 2);  // precondition: not a positive basis
    CHECK(run({"lattice"}, R"({"dim": 2, "vectors": [["1", "0"]]})").code == 2);
    CHECK(run({"generate", "antichain", "--dim", "2", "--subsets", "1;1,2"}).code == 2);

    // Known false statements make verify fail with exit code 1.
    const auto v = run({"verify"}, format_vecset(polygon_example(3)));
    CHECK(v.code == 1);
    CHECK(json::parse(v.out)["failed"] == 1);
}

TEST_CASE("size guard") {
    const auto big = format_vecset(testsupport::with_extra(make_cross(2), {QVec{1, 1}, QVec{-1, -1}}));
    auto r = run({"analyze", "--max-size", "5"}, big);
    CHECK(r.code == 2);
    CHECK(r.err.find("size guard") != std::string::npos);
    CHECK(run({"analyze", "--max-size", "6"}, big).code == 0);

    setenv("PSSKIT_MAX_SIZE", "4", 1);
    CHECK(run({"analyze"}, big).code == 2);
    CHECK(run({"analyze", "--max-size", "6"}, big).code == 0);
    setenv("PSSKIT_MAX_SIZE", "lots", 1);
    CHECK(run({"analyze"}, big).code == 2);
    unsetenv("PSSKIT_MAX_SIZE");

    const auto huge = run({"generate", "polygon", "--n", "10"});
    CHECK(run({"analyze"}, huge.out).code == 2);  // 20 > 18
}

TEST_CASE("error messages carry the vector index") {
    const auto r = run({"analyze"}, R"({"dim": 2, "vectors": [["1", "0"], ["0", "1"], ["0", "0"]]})");
    CHECK(r.code == 2);
    CHECK(r.err.find("vector 2") != std::string::npos);
}

TEST_CASE("output is byte-for-byte deterministic") {
    const auto text = format_vecset(example_x9());
    for (const auto& cmd : {"analyze", "simplices", "lattice", "mns", "cones", "gale", "verify"}) {
        const auto a = run({cmd}, text), b = run({cmd}, text);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}
