#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"

using oracle::data_path;
namespace cli = symprod::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string path(const char* name) { return data_path(std::string(name) + ".json"); }

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("symprod_test_" + name);
}

}  // namespace

TEST_CASE("validate") {
    auto ok = run({"validate", path("k3")});
    CHECK(ok.code == cli::kOk);
    CHECK(ok.out.find("b2=22") != std::string::npos);
    CHECK(ok.out.find("24*pt@1 ; id") != std::string::npos);

    CHECK(run({"validate", path("no_such_file")}).code == cli::kParseFailure);
    CHECK(run({"validate"}).code == cli::kParseFailure);

    // Break associativity by rewriting one structure constant of P4.
    auto doc = nlohmann::json::parse(std::ifstream(path("p4")));
    bool changed = false;
    for (auto& p : doc["products"]) {
        if (p[0] == "h" && p[1] == "h2" && p[2] == "h3") {
            p[3] = "2";
            changed = true;
        }
    }
    REQUIRE(changed);
    auto broken = temp_file("broken_p4.json");
    std::ofstream(broken) << doc.dump();
    auto bad = run({"validate", broken.string()});
    CHECK(bad.code == cli::kInvalidAlgebra);
    CHECK(bad.err.find("associativity") != std::string::npos);
    CHECK(bad.err.find("(h, h, h2)") != std::string::npos);
    std::filesystem::remove(broken);
}

TEST_CASE("multiply") {
    auto a = run({"multiply", path("a2"), "-n", "2", "1@1 ; (1 2)", "1@1 ; (1 2)"});
    CHECK(a.code == cli::kOk);
    CHECK(a.out == "1*1@1 (x) x@2 ; id + 1*x@1 (x) 1@2 ; id\n");

    auto b = run({"multiply", path("k3"), "-n", "3", "1@1 ; (1 2 3)", "1@1 ; (1 2 3)"});
    CHECK(b.code == cli::kOk);
    CHECK(b.out == "24*pt@1 ; (1 3 2)\n");

    auto sym = run({"multiply", path("a2"), "-n", "2", "--sym", "x@1 (x) 1@2 ; id", "1@1 (x) 1@2 ; id"});
    CHECK(sym.out == "1/2*1@1 (x) x@2 ; id + 1/2*x@1 (x) 1@2 ; id\n");

    auto bad = run({"multiply", path("a2"), "-n", "2", "x@1 ; (1 2 3)", "1@1 (x) 1@2 ; id"});
    CHECK(bad.code == cli::kBadExpression);
    CHECK(bad.err.find("^") != std::string::npos);
    CHECK(run({"multiply", path("a2"), "-n", "2", "1@1 (x) 1@2 ; id", "y@1 (x) 1@2 ; id"}).code == cli::kBadExpression);
}

TEST_CASE("betti") {
    auto k3 = run({"betti", path("k3"), "-n", "2", "--gottsche"});
    CHECK(k3.code == cli::kOk);
    CHECK(k3.out.find("324") != std::string::npos);
    CHECK(run({"betti", path("a2"), "-n", "3"}).code == cli::kOk);
    auto json = run({"betti", path("k3"), "-n", "3", "--gottsche", "--json"});
    CHECK(nlohmann::json::parse(json.out)["agree"] == true);
    CHECK(run({"betti", path("p4"), "-n", "2", "--gottsche"}).code == cli::kNotASurface);
    CHECK(run({"betti", path("p4"), "-n", "2"}).code == cli::kOk);
}

TEST_CASE("check") {
    auto r = run({"check", path("a2"), "-n", "3", "--seed", "42"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("all properties hold") != std::string::npos);
    CHECK(run({"check", path("a2"), "-n", "0"}).code == cli::kParseFailure);
}

TEST_CASE("table is independent of the thread count") {
    auto one = run({"table", path("a2"), "-n", "3", "--threads", "1"});
    auto many = run({"table", path("a2"), "-n", "3", "--threads", "8"});
    CHECK(one.code == cli::kOk);
    CHECK(one.out == many.out);
    auto doc = nlohmann::json::parse(one.out);
    CHECK(doc["basis"].size() == 10);

    auto file = temp_file("table.json");
    auto written = run({"table", path("a2"), "-n", "2", "-o", file.string(), "--max-degree", "4"});
    CHECK(written.code == cli::kOk);
    auto saved = nlohmann::json::parse(std::ifstream(file));
    CHECK(saved["truncated"] == true);
    CHECK(saved["basis"].size() == 3);
    std::filesystem::remove(file);

    CHECK(cli::resolve_threads(3) == 3);
    CHECK(cli::resolve_threads(0) >= 1);
}
