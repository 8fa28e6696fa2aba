#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

int run_cli(const std::string& args, std::string* captured = nullptr) {
    std::string cmd = std::string("\"") + SU3MULT_CLI_PATH + "\" " + args +
                      " >cli_stdout.txt 2>cli_stderr.txt";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    if (captured) *captured = read_file("cli_stdout.txt");
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("octet decomposition report", "[cli]") {
    CHECK(run_cli("decompose --p1 1 --q1 1 --p2 1 --q2 1 --json cli_octet.json") == 0);
    json rep = json::parse(read_file("cli_octet.json"));
    CHECK(rep["dimension_check"] == true);
    CHECK(rep["oracle_agreement"] == true);
    CHECK(rep["factors"] == json({{1, 1}, {1, 1}}));
    REQUIRE(rep["terms"].size() == 5);
    bool saw_octet = false;
    for (const auto& t : rep["terms"]) {
        CHECK(t["exact"] == true);
        if (t["p"] == 1 && t["q"] == 1) {
            saw_octet = true;
            CHECK(t["multiplicity"] == 2);
            CHECK(t["c4prime_eigenvalues"] == json({"3/4", "0"}));
        }
    }
    CHECK(saw_octet);
}

TEST_CASE("singlet factor passes through", "[cli]") {
    std::string text;
    CHECK(run_cli("decompose --p1 0 --q1 0 --p2 2 --q2 1", &text) == 0);
    CHECK(text.find("(2,1)  multiplicity 1") != std::string::npos);
    CHECK(text.find("oracle agreement: pass") != std::string::npos);
}

TEST_CASE("triplet against antitriplet", "[cli]") {
    CHECK(run_cli("decompose --p1 1 --q1 0 --p2 0 --q2 1 --json cli_pair.json") == 0);
    json rep = json::parse(read_file("cli_pair.json"));
    REQUIRE(rep["terms"].size() == 2);
    CHECK(rep["terms"][0]["p"] == 0);
    CHECK(rep["terms"][0]["q"] == 0);
    CHECK(rep["terms"][1]["p"] == 1);
    CHECK(rep["terms"][1]["q"] == 1);
}

TEST_CASE("csv export", "[cli]") {
    CHECK(run_cli("decompose --p1 1 --q1 1 --p2 1 --q2 1 --csv cli_octet.csv") == 0);
    std::string csv = read_file("cli_octet.csv");
    CHECK(csv.rfind("p,q,multiplicity,c4prime_eigenvalues,exact\n", 0) == 0);
    CHECK(csv.find("1,1,2,\"3/4;0\",true") != std::string::npos);
}

TEST_CASE("reports are byte stable", "[cli]") {
    CHECK(run_cli("decompose --p1 1 --q1 0 --p2 1 --q2 1 --json cli_a.json") == 0);
    CHECK(run_cli("decompose --p1 1 --q1 0 --p2 1 --q2 1 --json cli_b.json") == 0);
    CHECK(read_file("cli_a.json") == read_file("cli_b.json"));
}

TEST_CASE("oracle subcommand omits eigenvalue fields", "[cli]") {
    CHECK(run_cli("oracle --p1 1 --q1 1 --p2 1 --q2 1 --json cli_oracle.json") == 0);
    json rep = json::parse(read_file("cli_oracle.json"));
    REQUIRE(rep["terms"].size() == 5);
    for (const auto& t : rep["terms"]) {
        CHECK(t.contains("multiplicity"));
        CHECK_FALSE(t.contains("c4prime_eigenvalues"));
        CHECK_FALSE(t.contains("exact"));
    }
    CHECK_FALSE(rep.contains("dimension_check"));
}

TEST_CASE("spectrum emits eigenvalues and exact matrices", "[cli]") {
    CHECK(run_cli("spectrum --p1 1 --q1 1 --p2 1 --q2 1 --p 1 --q 1 --json cli_spectrum.json") == 0);
    json rep = json::parse(read_file("cli_spectrum.json"));
    CHECK(rep["multiplicity"] == 2);
    REQUIRE(rep["eigenvalues"].size() == 2);
    CHECK(rep["eigenvalues"][0]["value"] == "3/4");
    CHECK(rep["eigenvalues"][0]["exact"] == true);
    CHECK(rep["eigenvalues"][1]["value"] == "0");
    for (const char* key : {"pairing", "gram"}) {
        const json& m = rep[key];
        CHECK(m["domain"] == json({1, 1, 1, 1}));
        CHECK(m["codomain"] == json({1, 1, 1, 1}));
        CHECK(m["entries"].size() > 0);
        for (const auto& e : m["entries"]) {
            REQUIRE(e.size() == 3);
            CHECK(e[2].is_string());
        }
    }
}

TEST_CASE("empty target spectrum", "[cli]") {
    std::string text;
    CHECK(run_cli("spectrum --p1 1 --q1 0 --p2 1 --q2 0 --p 1 --q 1", &text) == 0);
    CHECK(text.find("multiplicity 0") != std::string::npos);
}

TEST_CASE("battery bounds", "[cli]") {
    CHECK(run_cli("battery --bound 0 --json cli_b0.json") == 0);
    json b0 = json::parse(read_file("cli_b0.json"));
    REQUIRE(b0.size() == 1);
    CHECK(b0[0]["agreement"] == true);
    CHECK(b0[0]["distinct"] == true);

    CHECK(run_cli("battery --bound 1 --json cli_b1.json") == 0);
    CHECK(json::parse(read_file("cli_b1.json")).size() == 9);
}

TEST_CASE("verification suites pass at small truncation", "[cli]") {
    CHECK(run_cli("verify identities --nmax 4 --json cli_ver.json") == 0);
    json rows = json::parse(read_file("cli_ver.json"));
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) {
        CHECK(r["status"] == "pass");
        CHECK(r["nmax"] == 4);
        CHECK(r["states_checked"] > 0);
        CHECK_FALSE(r.contains("counterexample"));
    }
    CHECK(run_cli("verify so42 --nmax 3 --margin 2") == 0);
}

TEST_CASE("usage errors exit with code 2", "[cli]") {
    CHECK(run_cli("decompose --p1 -1") == 2);
    CHECK(run_cli("verify so42 --nmax 12") == 2);
    CHECK(run_cli("verify nonsense --nmax 2") == 2);
    CHECK(run_cli("bogus") == 2);
    CHECK(run_cli("decompose --p1 1 --q1 1 --p2 1 --q2 1 --l1 -1") == 2);
    CHECK(run_cli("") == 2);
}

TEST_CASE("custom coefficients flow through", "[cli]") {
    CHECK(run_cli("decompose --p1 1 --q1 1 --p2 1 --q2 1 --l1 0 --l2 1 "
                  "--json cli_l2.json") == 0);
    json rep = json::parse(read_file("cli_l2.json"));
    CHECK(rep["oracle_agreement"] == true);
    for (const auto& t : rep["terms"])
        if (t["p"] == 1 && t["q"] == 1) CHECK(t["c4prime_eigenvalues"].size() == 2);
}
