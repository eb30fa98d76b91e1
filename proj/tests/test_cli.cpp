#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "cyclecert/generators.hpp"
#include "cyclecert/graph.hpp"

using namespace cyclecert;
using nlohmann::json;

namespace {

std::string cli_path() {
    const char* p = std::getenv("CYCLECERT_CLI");
    if (!p) throw std::runtime_error("CYCLECERT_CLI is not set");
    return p;
}

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs the CLI through the shell, capturing stdout and the exit code.
// stderr is dropped: the contract under test is stdout + exit code.
RunResult run(const std::string& args) {
    std::string cmd = "'" + cli_path() + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    RunResult res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

// Full shell pipeline (used for the gen | spectrum composition test).
RunResult run_shell(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    RunResult res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

const std::string& temp_dir() {
    static std::string dir = [] {
        char tmpl[] = "/tmp/cyclecert_cli_XXXXXX";
        char* d = mkdtemp(tmpl);
        if (!d) throw std::runtime_error("mkdtemp failed");
        return std::string(d);
    }();
    return dir;
}

std::string write_graph(const std::string& name, const Graph& g) {
    std::string path = temp_dir() + "/" + name;
    std::ofstream f(path);
    f << serialize(g);
    return path;
}

std::string path_arg(int count) {
    std::string out;
    for (int i = 0; i < count; ++i) {
        if (i) out += ',';
        out += std::to_string(i);
    }
    return out;
}

} // namespace

TEST_CASE("spectrum exit codes separate pancyclic from gapped") {
    std::string k33 = write_graph("k33.txt", make_complete_bipartite(3, 3));
    RunResult r = run("spectrum " + k33 + " --format json");
    CHECK(r.code == 1);
    json doc = json::parse(r.out);
    CHECK(doc["missing"] == json::array({3, 5}));
    CHECK(doc["n"] == 6);

    std::string k5 = write_graph("k5.txt", make_complete(5));
    CHECK(run("spectrum " + k5).code == 0);
}

TEST_CASE("spectrum output is byte-stable across runs") {
    std::string k5 = write_graph("k5b.txt", make_complete(5));
    RunResult a = run("spectrum " + k5 + " --format json");
    RunResult b = run("spectrum " + k5 + " --format json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("oversized spectrum requests are an input error") {
    std::string k17 = write_graph("k17.txt", make_complete(17));
    RunResult r = run("spectrum " + k17 + " --format json");
    CHECK(r.code == 3);
    json doc = json::parse(r.out);
    CHECK(doc["status"] == "input-error");
}

TEST_CASE("certify succeeds on a complete graph and is reproducible") {
    std::string k10 = write_graph("k10.txt", make_complete(10));
    RunResult a = run("certify " + k10 + " --epsilon 0.5 --seed 1 --format json");
    CHECK(a.code == 0);
    json doc = json::parse(a.out);
    CHECK(doc["certificate"]["missing"].empty());
    CHECK(doc["certificate"]["pancyclic"] == true);
    RunResult b = run("certify " + k10 + " --epsilon 0.5 --seed 1 --format json");
    CHECK(a.out == b.out);
}

TEST_CASE("certify rejects graphs outside the hypothesis with code 2") {
    std::string k55 = write_graph("k55.txt", make_complete_bipartite(5, 5));
    RunResult r = run("certify " + k55 + " --epsilon 0.5 --seed 1 --format json");
    CHECK(r.code == 2);
    json doc = json::parse(r.out);
    CHECK(doc["status"] == "rejected");
}

TEST_CASE("missing required options are input errors") {
    std::string k6 = write_graph("k6.txt", make_complete(6));
    CHECK(run("certify " + k6 + " --seed 1").code == 3);
    CHECK(run("partition " + k6).code == 3);
    CHECK(run("profile " + k6 + " --no-such-flag").code == 3);
    CHECK(run("profile /no/such/file").code == 3);
}

TEST_CASE("profile reports the exact invariants") {
    Graph pet = make_petersen();
    std::string path = write_graph("petersen.txt", pet);
    RunResult r = run("profile " + path + " --format json");
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["n"] == 10);
    CHECK(doc["delta"] == 3);
    CHECK(doc["kappa"] == 3);
    CHECK(doc["alpha"]["lo"] == 4);
    CHECK(doc["alpha"]["hi"] == 4);
    CHECK(doc["alpha"]["exact"] == true);
    CHECK(doc["digest"] == graph_digest(pet));
}

TEST_CASE("partition emits a verified split") {
    std::string k6 = write_graph("k6p.txt", make_complete(6));
    RunResult r = run("partition " + k6 + " --seed 5 --format json");
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["edge_count"] == doc["edges"].size());
    CHECK(doc["seed"] == 5);
    RunResult again = run("partition " + k6 + " --seed 5 --format json");
    CHECK(again.out == r.out);
}

TEST_CASE("even-cycle distinguishes found from verified-absent") {
    std::string c6 = write_graph("c6.txt", make_cycle(6));
    RunResult hit = run("even-cycle " + c6 + " --half-length 3 --format json");
    CHECK(hit.code == 0);
    CHECK(json::parse(hit.out)["found"] == true);

    RunResult miss = run("even-cycle " + c6 + " --half-length 2 --format json");
    CHECK(miss.code == 1);
    CHECK(json::parse(miss.out)["found"] == false);
}

TEST_CASE("hamilton-triangles reports the decorated cycle") {
    std::string k7 = write_graph("k7.txt", make_complete(7));
    RunResult r = run("hamilton-triangles " + k7 + " --format json");
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["length"] == 7);
    CHECK(doc["r"] == 2);
    CHECK(doc["order"].size() == 7);
}

TEST_CASE("shorten lands inside the reported window") {
    std::string k30 = write_graph("k30.txt", make_complete(30));
    RunResult r = run("shorten " + k30 + " --path " + path_arg(30) +
                      " --mode degree --format json");
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["mechanism"] == "degree-shorten");
    CHECK(doc["window"] == json::array({8, 28}));
    int new_len = doc["new_length"];
    CHECK(new_len >= 8);
    CHECK(new_len <= 28);
}

TEST_CASE("augment grows a short path by at most r") {
    std::string k30 = write_graph("k30a.txt", make_complete(30));
    RunResult r = run("augment " + k30 + " --path " + path_arg(12) +
                      " --r 9 --format json");
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["mechanism"] == "augment");
    int old_len = doc["old_length"];
    int new_len = doc["new_length"];
    CHECK(old_len == 11);
    CHECK(new_len > old_len);
    CHECK(new_len <= old_len + 9);
}

TEST_CASE("gen writes a parseable edge list") {
    RunResult r = run("gen complete:6");
    CHECK(r.code == 0);
    Graph g = parse_edge_list(r.out);
    CHECK(g == make_complete(6));
}

TEST_CASE("gen requires a seed only for randomized families") {
    CHECK(run("gen gnp:12,0.5").code == 3);
    RunResult a = run("gen gnp:12,0.5 --seed 4");
    RunResult b = run("gen gnp:12,0.5 --seed 4");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(parse_edge_list(a.out).num_vertices() == 12);
    CHECK(run("gen petersen").code == 0);
}

TEST_CASE("generated graphs pipe straight into analysis") {
    std::string cli = cli_path();
    RunResult r = run_shell("'" + cli + "' gen complete:6 | '" + cli +
                            "' spectrum -");
    CHECK(r.code == 0);
}

TEST_CASE("bench profiles a corpus and reports one row per file") {
    std::string k6 = write_graph("k6b.txt", make_complete(6));
    std::string pet = write_graph("petb.txt", make_petersen());
    RunResult r = run("bench " + k6 + " " + pet + " --format json");
    CHECK(r.code == 0);
    json rows = json::parse(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["kappa"] == 5);
    CHECK(rows[1]["kappa"] == 3);
    CHECK(run("bench " + k6 + " --epsilon 0.5").code == 3);
}
