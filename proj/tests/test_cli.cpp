#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "spectra/colouring.hpp"

namespace fs = std::filesystem;

namespace {

int run(std::initializer_list<std::string> args) {
    return spectra::cli::run(std::vector<std::string>(args));
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "spectra_cli_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("psi run writes a loadable witness") {
    const auto dir = fresh_dir("psi");
    CHECK(run({"--out", dir.string(), "psi", "--k", "4", "--t-max", "3"}) == 0);
    const auto witness = spectra::load_witness_file(dir / "psi_k4_tmax3" / "witness.json");
    CHECK(witness.k() == 4);
    CHECK(witness == spectra::canonical_colours(spectra::small_rainbow(3)));
    CHECK(slurp(dir / "psi_k4_tmax3" / "report.json").find("\"psi_template\": 3") !=
          std::string::npos);
}

TEST_CASE("laws run is deterministic across worker counts") {
    const auto d1 = fresh_dir("laws1");
    const auto d4 = fresh_dir("laws4");
    CHECK(run({"--out", d1.string(), "laws", "--t-max", "4", "--k-max", "5",
               "--workers", "1"}) == 0);
    CHECK(run({"--out", d4.string(), "laws", "--t-max", "4", "--k-max", "5",
               "--workers", "4"}) == 0);
    for (const char* name : {"report.json", "summary.csv"})
        CHECK(slurp(d1 / "laws_t4_k5" / name) == slurp(d4 / "laws_t4_k5" / name));
    // every cell witness byte-identical too
    int compared = 0;
    for (const auto& entry : fs::directory_iterator(d1 / "laws_t4_k5")) {
        const auto other = d4 / "laws_t4_k5" / entry.path().filename();
        CHECK(slurp(entry.path()) == slurp(other));
        ++compared;
    }
    CHECK(compared >= 6);
}

TEST_CASE("witness files survive the save/check loop") {
    const auto dir = fresh_dir("roundtrip");
    spectra::write_witness_file(spectra::bipartite_rainbow(2, 3), dir / "br.json");
    CHECK(run({"check-witness", "--file", (dir / "br.json").string()}) == 0);
    // corrupt it: drop surjectivity
    std::ofstream(dir / "bad.json")
        << R"({"t":2,"k":3,"background":3,"edges":[[1,2,1]]})";
    CHECK(run({"check-witness", "--file", (dir / "bad.json").string()}) == 2);
}

TEST_CASE("exit codes follow the contract") {
    const auto dir = fresh_dir("codes");
    // usage errors
    CHECK(run({"psi", "--k", "4"}) == 2);                       // missing flag
    CHECK(run({"nonsense"}) == 2);                              // unknown command
    CHECK(run({"gset", "--colouring", "nope", "--n", "4"}) == 2);
    CHECK(run({"--out", dir.string(), "psi", "--k", "11", "--t-max", "5"}) == 2); // guard
    CHECK(run({"sieve", "h", "--x", "10", "--y", "5", "--z", "2"}) == 2);
    // inconclusive searches
    CHECK(run({"weak-homog", "--colouring", "constant", "--n", "3", "--bound", "12"}) == 3);
    CHECK(run({"canonical-check", "--colouring", "constant", "--n", "3", "--bound", "12"}) == 3);
    // passing searches
    CHECK(run({"weak-homog", "--colouring", "injective", "--n", "3", "--bound", "6"}) == 0);
    CHECK(run({"canonical-check", "--colouring", "injective", "--n", "4", "--bound", "12"}) == 0);
}

TEST_CASE("sieve and minsize commands write their artifacts") {
    const auto dir = fresh_dir("sieve");
    CHECK(run({"--out", dir.string(), "sieve", "evidence", "--k", "16", "--k", "100"}) == 0);
    const auto csv = slurp(dir / "evidence.csv");
    CHECK(csv.find("16,1,3,5,12,") != std::string::npos);
    CHECK(csv.find("100,1,9,11,51,") != std::string::npos);

    CHECK(run({"--out", dir.string(), "minsize", "--m", "3", "--n-max", "4"}) == 0);
    const auto witness = spectra::load_graph_file(dir / "minsize_m3_n4" / "witness.json");
    CHECK(witness.edge_count() == 3);
    const auto summary = slurp(dir / "minsize_m3_n4" / "summary.csv");
    CHECK(summary.find("3,4,3,witness.json") != std::string::npos);
}

TEST_CASE("SPECTRA_OUT steers the default output directory") {
    const auto dir = fresh_dir("envout");
    setenv("SPECTRA_OUT", dir.string().c_str(), 1);
    CHECK(run({"psi", "--k", "2", "--t-max", "2"}) == 0);
    unsetenv("SPECTRA_OUT");
    CHECK(fs::exists(dir / "psi_k2_tmax2" / "witness.json"));

    // an explicit --out wins over the environment
    const auto flag_dir = fresh_dir("flagout");
    setenv("SPECTRA_OUT", dir.string().c_str(), 1);
    CHECK(run({"--out", flag_dir.string(), "psi", "--k", "2", "--t-max", "2"}) == 0);
    unsetenv("SPECTRA_OUT");
    CHECK(fs::exists(flag_dir / "psi_k2_tmax2" / "witness.json"));
}

TEST_CASE("--force lifts a guard with a warning") {
    const auto dir = fresh_dir("force");
    CHECK(run({"--out", dir.string(), "psi", "--k", "2", "--t-max", "7"}) == 2);
    CHECK(run({"--out", dir.string(), "psi", "--k", "2", "--t-max", "7", "--force"}) == 0);
}

TEST_CASE("fset sources") {
    const auto dir = fresh_dir("fset");
    spectra::write_graph_file(spectra::SimpleGraph::path(3), dir / "p3.json");
    CHECK(run({"fset", "--small-rainbow", "3"}) == 0);
    CHECK(run({"fset", "--bipartite", "2", "2"}) == 0);
    CHECK(run({"fset", "--graph", (dir / "p3.json").string()}) == 0);
    CHECK(run({"fset"}) == 2); // no source
}
