#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cgraph/cli.hpp"
#include "cgraph/colored_graph.hpp"
#include "json.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cgraph::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("cgraph_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

// Last non-comment line of a CSV-style output.
std::string last_line(const std::string& s) {
    std::istringstream in(s);
    std::string line, last;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') last = line;
    return last;
}

}  // namespace

TEST_CASE("count prints the Catalan number") {
    Run r = run({"count", "--dim", "3", "--p", "4"});
    CHECK(r.code == 0);
    CHECK(last_line(r.out) == "140");
    CHECK(r.out.find("# ") == 0);
}

TEST_CASE("degree on the supermelon") {
    std::string path = write_temp("supermelon.json", cgraph::serialize(cgraph::supermelon(3)));
    Run r = run({"degree", path});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["omega"] == 0);
    CHECK(doc["jackets"].size() == 3);
    for (const auto& j : doc["jackets"]) CHECK(j["genus"] == 0);
    CHECK(doc.contains("config"));
}

TEST_CASE("validate reports a corrupted file") {
    std::string path = write_temp("bad.json",
                                  R"({"dimension":1,"kind":"closed","positive_count":1,"negative_count":1,"edges":[[0,0,1],[0,0,1]]})");
    Run r = run({"validate", path});
    CHECK(r.code == cgraph::cli::validation_failure);
    CHECK(r.err.find("duplicate color at vertex") != std::string::npos);
}

TEST_CASE("error exit codes") {
    CHECK(run({"validate", "/nonexistent/graph.json"}).code == cgraph::cli::io_failure);
    CHECK(run({"count", "--bogus"}).code == cgraph::cli::config_failure);
    CHECK(run({"hausdorff", "--estimator", "nope", "--sizes", "8,16"}).code == cgraph::cli::config_failure);
}

TEST_CASE("stochastic commands are reproducible") {
    std::vector<std::string> h{"hausdorff", "--sizes", "32,64,128,256", "--samples", "5", "--seed", "3", "--jobs", "2"};
    Run a = run(h), b = run(h);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("# seed=3") != std::string::npos);
    std::vector<std::string> s{"sample", "--dim", "3", "--p", "20", "--seed", "5", "-n", "3"};
    CHECK(run(s).out == run(s).out);
}

TEST_CASE("every subcommand has help") {
    for (const char* cmd : {"validate", "boundary", "bubbles", "homology", "reduce", "degree", "bracket", "count", "sample",
                            "hausdorff", "spectral", "susceptibility"}) {
        Run r = run({cmd, "--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find(cmd) != std::string::npos);
    }
}

TEST_CASE("reduce, homology, bubbles and bracket run on a file") {
    std::string path = write_temp("supermelon2.json", cgraph::serialize(cgraph::supermelon(3)));
    CHECK(run({"reduce", path}).code == 0);
    CHECK(run({"homology", path, "--matrices"}).code == 0);
    CHECK(run({"bubbles", path, "--export"}).code == 0);
    std::string small = write_temp("supermelon3.json", cgraph::serialize(cgraph::supermelon(2)));
    CHECK(run({"bracket", small, small}).code == 0);
}
