#include <doctest.h>

#include <sstream>

#include "hyperbinary/cli.hpp"
#include "hyperbinary/stern.hpp"
#include "hyperbinary/verify.hpp"

using namespace hyperbinary;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("eval") {
    for (const char* algo : {"rec", "mat", "matblk", "alg1", "blockfold"}) {
        const auto r = call({"eval", "--fn", "b", "--n", "42", "--algo", algo});
        CHECK(r.code == cli::kOk);
        CHECK(r.out == "13\n");
    }
    CHECK(call({"eval", "--fn", "v", "--n", "18"}).out == "2\n");
    CHECK(call({"eval", "--fn", "v", "--n", "18", "--algo", "graph"}).out == "2\n");
    CHECK(call({"eval", "--fn", "a", "--n", "4"}).out == "2\n");
    CHECK(call({"eval", "--fn", "c", "--n", "43"}).out == "13\n");
    CHECK(call({"eval", "--fn", "c", "--n", "11", "--algo", "cmat"}).out == "5\n");
    CHECK(call({"eval", "--fn", "b", "--n", "0b101010"}).out == "13\n");
}

TEST_CASE("domain errors exit 1") {
    CHECK(call({"eval", "--fn", "c", "--n", "0"}).code == cli::kDomainError);
    CHECK(call({"eval", "--fn", "b", "--n", "-3"}).code == cli::kDomainError);
    CHECK(call({"eval", "--fn", "b", "--n", "forty"}).code == cli::kDomainError);
    CHECK(call({"eval", "--fn", "q", "--n", "1"}).code == cli::kDomainError);
    CHECK(call({"eval", "--fn", "b", "--n", "1", "--algo", "fast"}).code == cli::kDomainError);
    CHECK(call({"frobnicate"}).code == cli::kDomainError);
    CHECK(call({}).code == cli::kDomainError);
    const auto r = call({"eval", "--n"});
    CHECK(r.code == cli::kDomainError);
    CHECK_FALSE(r.err.empty());
    CHECK(r.out.empty());
}

TEST_CASE("size limit exits 2") {
    const auto r = call({"graph", "--n", "1000000", "--limit", "5"});
    CHECK(r.code == cli::kLimitExceeded);
    CHECK(r.out.empty());
    CHECK(call({"iso", "--m", "1000000", "--n", "10", "--limit", "5", "--structural"}).code == cli::kLimitExceeded);
    CHECK(call({"iso", "--m", "1000000", "--n", "10", "--limit", "5"}).out == "not isomorphic\n");
}

TEST_CASE("graph output") {
    const auto dot = call({"graph", "--n", "4"});
    CHECK(dot.code == cli::kOk);
    CHECK(dot.out == "digraph \"A(4)\" {\n"
                     "  \"12\";\n"
                     "  \"20\";\n"
                     "  \"100\";\n"
                     "  \"12\" -> \"20\" [label=\"d\"];\n"
                     "  \"20\" -> \"100\" [label=\"s\"];\n"
                     "}\n");
    const auto json = call({"graph", "--n", "4", "--format", "json"});
    CHECK(json.code == cli::kOk);
    CHECK(json.out.rfind("{\"n\":4,\"vertices\":[\"12\",\"20\",\"100\"]", 0) == 0);
    CHECK(json.out.find("\"label\":\"double\"") != std::string::npos);
    const auto placed = call({"graph", "--n", "10", "--places"});
    CHECK(placed.code == cli::kOk);
    CHECK(placed.out.find("\"202\" -> \"210\" [label=\"s\", place=2];") != std::string::npos);
    CHECK(call({"graph", "--n", "11", "--places"}).code == cli::kDomainError);
}

TEST_CASE("decompose") {
    const auto r = call({"decompose", "--n", "42"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "T1 t=1\nT1 t=1\nT2 t=1\ntail=1^0\n");
    CHECK(call({"decompose", "--n", "7"}).out == "tail=1^3\n");
}

TEST_CASE("iso") {
    CHECK(call({"iso", "--m", "10", "--n", "12"}).out == "not isomorphic\n");
    CHECK(call({"iso", "--m", "10", "--n", "21"}).out == "isomorphic\n");
    const auto s = call({"iso", "--m", "10", "--n", "21", "--structural"});
    CHECK(s.code == cli::kOk);
    CHECK(s.out.rfind("isomorphic\n", 0) == 0);
    CHECK(s.out.find("122 → 1221\n") != std::string::npos);
    CHECK(call({"iso", "--m", "10", "--n", "12", "--structural"}).out == "not isomorphic\n");
}

TEST_CASE("verify") {
    const auto r = call({"verify", "--max", "256", "--workers", "3"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "OK 256\n");
}

TEST_CASE("an injected wrong route is caught with the smallest n") {
    for (unsigned workers : {1u, 4u}) {
        VerifyOptions options;
        options.max = 300;
        options.workers = workers;
        options.b_routes.push_back({"broken", [](const Integer& n) {
                                        Integer b = b_recursive(n);
                                        return n >= 100 && n % 7 == 3 ? b + 1 : b;
                                    }});
        const auto cex = verify_range(options);
        REQUIRE(cex);
        CHECK(cex->n == 101);
        CHECK(cex->function == "b");
        const std::string text = cex->describe();
        CHECK(text.rfind("counterexample n=101 b:", 0) == 0);
        CHECK(text.find("rec=") != std::string::npos);
        CHECK(text.find("broken=") != std::string::npos);
    }
    VerifyOptions options;
    options.max = 64;
    options.v_routes.push_back({"off", [](const Integer& n) { return cyclomatic_number(n) + (n == 40 ? 1 : 0); }});
    const auto cex = verify_range(options);
    REQUIRE(cex);
    CHECK(cex->n == 40);
    CHECK(cex->function == "v");
}

TEST_CASE("table") {
    const auto r = call({"table", "--max", "10", "--format", "csv"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.rfind("n,b,a,v\n0,1,0,0\n1,1,0,0\n2,2,1,0\n", 0) == 0);
    CHECK(r.out.find("\n10,5,5,1\n") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::vector<std::string>> commands{
        {"table", "--max", "500", "--format", "csv"},
        {"graph", "--n", "84", "--format", "json"},
        {"graph", "--n", "84", "--places"},
        {"iso", "--m", "20", "--n", "41", "--structural"},
        {"verify", "--max", "300", "--workers", "4"},
    };
    for (const auto& args : commands) {
        const auto first = call(args);
        const auto second = call(args);
        CHECK(first.code == cli::kOk);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("bench") {
    const auto r = call({"bench", "--bits", "256", "--algo", "matblk", "--reps", "3", "--seed", "7"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.rfind("algo=matblk bits=256 reps=3 mean_us=", 0) == 0);
    CHECK(r.out.find("checksum_bits=") != std::string::npos);
    CHECK(call({"bench", "--bits", "0"}).code == cli::kDomainError);
}
