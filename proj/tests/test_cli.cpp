#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plap/graph.hpp"
#include "plap/json_io.hpp"
#include "plap/symmetry.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace plap;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

/// Runs the installed binary with stderr dropped; stdout and the exit code
/// come back.
RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = std::string(PLAP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const char* name) {
    return std::string(PLAP_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("eigen prints the eigenpair as JSON and exits cleanly") {
    RunResult r = run("eigen --p 4 " + data("example41.json"));
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["p"] == 4.0);
    CHECK(j["lambda"].get<double>() == doctest::Approx(0.110098945).epsilon(1e-8));
    CHECK(j["certified"] == true);
    CHECK(j["residual"].get<double>() <= 1e-9);
    REQUIRE(j["u"].size() == 3);
    CHECK(j["u"]["v1"].get<double>() == doctest::Approx(j["u"]["v3"].get<double>()));
    CHECK(j["u"]["v2"].get<double>() > j["u"]["v1"].get<double>());
}

TEST_CASE("eigen on a singleton gives boundary weight over measure") {
    RunResult r = run("eigen --p 2 " + data("singleton.json"));
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["lambda"] == 1.5);
}

TEST_CASE("eigen --max appends the alternating eigenpair") {
    RunResult r = run("eigen --p 4 --max " + data("example41.json"));
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string first, second;
    REQUIRE(std::getline(lines, first));
    REQUIRE(std::getline(lines, second));
    Json lo = Json::parse(first), hi = Json::parse(second);
    CHECK(lo["lambda"].get<double>() == doctest::Approx(0.110098945).epsilon(1e-8));
    CHECK(hi["lambda"].get<double>() == doctest::Approx(5.99940378).epsilon(1e-8));
    CHECK(hi["u"]["v1"].get<double>() > 0);
    CHECK(hi["u"]["v2"].get<double>() < 0);
}

TEST_CASE("repeat runs are byte-identical") {
    std::string cmd = "eigen --p 4 --max --seed 9 " + data("example41.json");
    CHECK(run(cmd).out == run(cmd).out);
    std::string model = "model antitree --a 3 --format csv";
    CHECK(run(model).out == run(model).out);
    std::string ver = "verify-paper --only example51 --json";
    CHECK(run(ver).out == run(ver).out);
}

TEST_CASE("cheeger reports the exact constant and every cut") {
    RunResult r = run("cheeger " + data("fig2.json"));
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["h"] == "1/3");
    REQUIRE(j["cuts"].size() == 2);
    CHECK(j["cuts"][0] == Json::array({"v1", "v2"}));
    CHECK(j["cuts"][1] == Json::array({"v1", "v2", "v3"}));
    CHECK(j["subsetsExamined"] == 31);

    // parse(print) round-trip: the h token reparses to the same rational
    CHECK(rat_from_json(j["h"]) == Rat(1, 3));
}

TEST_CASE("orbit restriction reaches the same constant over fewer subsets") {
    Json full = Json::parse(run("cheeger " + data("example41.json")).out);
    Json restricted = Json::parse(
        run("cheeger --orbit-restrict " + data("parts41.json") + " " +
            data("example41.json"))
            .out);
    CHECK(full["h"] == restricted["h"]);
    CHECK(restricted["subsetsExamined"].get<int>() <
          full["subsetsExamined"].get<int>());
}

TEST_CASE("autgroup lists the orbit cells") {
    Json j = Json::parse(run("autgroup " + data("example41.json")).out);
    CHECK(j["size"] == 2);
    CHECK(j["cells"] == Json::array({Json::array({"v1", "v3"}), Json::array({"v2"})}));

    Json star = Json::parse(run("autgroup " + data("star.json")).out);
    CHECK(star["size"] == 720);
    REQUIRE(star["cells"].size() == 2);
    CHECK(star["cells"][1].size() == 6);
}

TEST_CASE("quotient output is a loadable domain with the same spectrum") {
    RunResult r = run("quotient " + data("example41.json"));
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    WeightedGraph g = graph_from_json(j);
    DirichletDomain q = build_domain(g, omega_from_json(j, g));

    // against the in-process quotient of the same fixture
    Json src = load_json_file(data("example41.json"));
    WeightedGraph ambient = graph_from_json(src);
    DirichletDomain d = build_domain(ambient, omega_from_json(src, ambient));
    VertexPartition parts = orbits(enumerate_automorphisms(d), d.size());
    DirichletDomain expect = quotient(d, parts);

    REQUIRE(q.size() == expect.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        CHECK(q.ids[i] == expect.ids[i]);
        CHECK(q.nu[i] == expect.nu[i]);
        CHECK(q.boundary[i] == expect.boundary[i]);
    }
    REQUIRE(q.edges.size() == expect.edges.size());
    for (std::size_t e = 0; e < q.edges.size(); ++e)
        CHECK(q.edges[e].mu == expect.edges[e].mu);

    // the file round-trips through eigen with the original first eigenvalue
    std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                      "/plap_cli_quotient.json";
    std::ofstream(tmp) << r.out;
    Json eig = Json::parse(run("eigen --p 2 " + tmp).out);
    CHECK(eig["lambda"].get<double>() == doctest::Approx(0.292893219).epsilon(1e-8));
    std::remove(tmp.c_str());
}

TEST_CASE("model table row for an anti-tree") {
    RunResult r = run("model antitree --a 2 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "a,h,h_inf,h_M,h_inf_M,h_N,h_inf_N,flags\n"
          "2,4,INF,1.26491106,2.12132034,0,0,ADACTC\n");
}

TEST_CASE("model JSON carries exact values where they exist") {
    Json j = Json::parse(run("model antitree --a 2 --scheme physical").out);
    CHECK(j["family"] == "antitree");
    CHECK(j["order"] == 2);
    REQUIRE(j["schemes"].size() == 1);
    const Json& s = j["schemes"][0];
    CHECK(s["h"]["value"] == 4.0);
    CHECK(s["h"]["exact"] == "4");
    CHECK(s["h"]["attained"] == true);
    CHECK(s["h_inf"]["status"] == "diverges");

    Json t = Json::parse(run("model tree --m 2 --scheme normalized").out);
    const Json& ts = t["schemes"][0];
    CHECK(ts["h"]["attained"] == false);
    CHECK(ts["h"]["exact"] == "1/3");
    CHECK(ts["h_inf"]["status"] == "converged");
    CHECK(ts["h_inf"]["exact"] == "1/3");
}

TEST_CASE("model accepts a spec file and flags equally") {
    std::string fromFile = run("model " + data("model_antitree2.json")).out;
    std::string fromFlags = run("model antitree --a 2 --scheme physical").out;
    CHECK(fromFile == fromFlags);
}

TEST_CASE("verify subsets pass and fail as recorded") {
    RunResult ok = run("verify-paper --only example51");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("[PASS]") != std::string::npos);
    CHECK(ok.out.find("1/1 criteria passed") != std::string::npos);

    RunResult red = run("verify-paper --only example41");
    CHECK(red.code == 2);
    CHECK(red.out.find("[FAIL]") != std::string::npos);

    RunResult js = run("verify-paper --only example51 --json");
    Json rep = Json::parse(js.out);
    REQUIRE(rep.size() == 1);
    CHECK(rep[0]["name"] == "example51");
    CHECK(rep[0]["passed"] == true);
}

TEST_CASE("exit codes separate usage errors from numerical ones") {
    CHECK(run("eigen /no/such/file.json").code == 1);
    CHECK(run("eigen --p 0.5 " + data("example41.json")).code == 1);
    CHECK(run("eigen --p 2 --max " + data("fig2.json")).code == 1);  // odd cycle
    CHECK(run("cheeger --cap 2 " + data("fig2.json")).code == 1);
    CHECK(run("model tree").code == 1);
    CHECK(run("model antitree --a 2 --m 3").code == 1);
    CHECK(run("verify-paper --only nope").code == 1);
    CHECK(run("").code == 1);
}
