// End-to-end exercises of the horolat binary: exit-code contract,
// wire formats, and byte-determinism of the scan outputs.
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string bin() {
    const char* b = std::getenv("HOROLAT_BIN");
    REQUIRE_MESSAGE(b != nullptr, "HOROLAT_BIN must point at the horolat binary");
    return std::string(b);
}

fs::path work_dir() {
    fs::path d = fs::temp_directory_path() / "horolat_cli_test";
    fs::create_directories(d);
    return d;
}

int run(const std::string& args, const fs::path& stdout_file = {}) {
    std::string cmd = "\"" + bin() + "\" " + args;
    if (!stdout_file.empty()) cmd += " > \"" + stdout_file.string() + "\"";
    cmd += " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

void write(const fs::path& p, const std::string& s) {
    std::ofstream out(p);
    out << s;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kGaussianPair = R"({
  "f1": {"side": "U", "basis": [[{"re":"1","im":"0"},{"re":"0","im":"0"}],
                                 [{"re":"0","im":"1"},{"re":"0","im":"0"}],
                                 [{"re":"0","im":"0"},{"re":"1","im":"0"}],
                                 [{"re":"0","im":"0"},{"re":"0","im":"1"}]]},
  "f2": {"side": "Uminus", "basis": [[{"re":"1","im":"0"},{"re":"0","im":"0"}],
                                      [{"re":"0","im":"1"},{"re":"0","im":"0"}],
                                      [{"re":"0","im":"0"},{"re":"1","im":"0"}],
                                      [{"re":"0","im":"0"},{"re":"0","im":"1"}]]},
  "config": {"max_word_len": 3, "eps2": "1/2", "cascade_max": 0, "element_cap": 1000000,
             "height_cap": 64}
})";

std::string scaled_pair_json() {
    std::string s = kGaussianPair;
    // scale the f2 basis entries by 1/10
    std::size_t f2 = s.find("\"f2\"");
    for (std::size_t p = s.find("\"1\"", f2); p != std::string::npos; p = s.find("\"1\"", p + 1))
        s.replace(p, 3, "\"1/10\"");
    std::size_t cfg = s.find("\"max_word_len\": 3");
    s.replace(cfg, std::string("\"max_word_len\": 3").size(), "\"max_word_len\": 4");
    return s;
}

}  // namespace

TEST_CASE("check-discrete exit codes and verdict json") {
    fs::path dir = work_dir();

    write(dir / "gauss.json", kGaussianPair);
    fs::path out = dir / "gauss_out.json";
    CHECK(run("check-discrete --input \"" + (dir / "gauss.json").string() + "\"", out) == 0);
    auto v = nlohmann::json::parse(slurp(out));
    CHECK(v.at("kind") == "NoShortElements");
    CHECK(v.at("min_nontrivial_frob2") == "1");

    write(dir / "scaled.json", scaled_pair_json());
    fs::path out2 = dir / "scaled_out.json";
    CHECK(run("check-discrete --input \"" + (dir / "scaled.json").string() + "\"", out2) == 2);
    auto v2 = nlohmann::json::parse(slurp(out2));
    CHECK(v2.at("kind") == "ShortElementFound");
    CHECK(v2.at("witness_frob2") == "1/100");
    CHECK(v2.at("witness").at("word").size() == 1);

    // R-dependent basis vectors violate the lattice invariant
    std::string bad = kGaussianPair;
    std::size_t p = bad.find("\"im\":\"1\"");
    bad.replace(p, 8, "\"im\":\"0\"");
    write(dir / "bad.json", bad);
    CHECK(run("check-discrete --input \"" + (dir / "bad.json").string() + "\"") == 1);

    write(dir / "garbage.json", "{not json");
    CHECK(run("check-discrete --input \"" + (dir / "garbage.json").string() + "\"") == 1);
    CHECK(run("check-discrete --input \"" + (dir / "missing.json").string() + "\"") == 1);
}

TEST_CASE("check-discrete cascade and inconclusive exit codes") {
    fs::path dir = work_dir();

    // rho = 1/100: generators land inside the contraction ball, the
    // auto-triggered cascade survives to depth 3
    std::string deep = kGaussianPair;
    std::size_t f2 = deep.find("\"f2\"");
    for (std::size_t p = deep.find("\"1\"", f2); p != std::string::npos;
         p = deep.find("\"1\"", p + 1))
        deep.replace(p, 3, "\"1/100\"");
    std::size_t cfg = deep.find("\"config\"");
    deep.replace(cfg, deep.size() - cfg,
                 "\"config\": {\"max_word_len\": 4, \"eps2\": \"1/1024\", "
                 "\"cascade_max\": 3, \"element_cap\": 1000000, \"height_cap\": 64}})");
    write(dir / "deep.json", deep);
    fs::path out = dir / "deep_out.json";
    CHECK(run("check-discrete --input \"" + (dir / "deep.json").string() + "\"", out) == 3);
    auto v = nlohmann::json::parse(slurp(out));
    CHECK(v.at("kind") == "IndiscretenessEvidence");
    CHECK(v.at("certified_bound") == "1/16384");  // (1/16)^2 / 4^3

    // rho = 1/10 with a 2-digit height cap: the potentially short products
    // are exactly the rejected ones, so a negative search is inconclusive
    std::string capped = kGaussianPair;
    f2 = capped.find("\"f2\"");
    for (std::size_t p = capped.find("\"1\"", f2); p != std::string::npos;
         p = capped.find("\"1\"", p + 1))
        capped.replace(p, 3, "\"1/10\"");
    cfg = capped.find("\"config\"");
    capped.replace(cfg, capped.size() - cfg,
                   "\"config\": {\"max_word_len\": 3, \"eps2\": \"1/1024\", "
                   "\"cascade_max\": 0, \"element_cap\": 1000000, \"height_cap\": 2}})");
    write(dir / "capped.json", capped);
    fs::path out2 = dir / "capped_out.json";
    CHECK(run("check-discrete --input \"" + (dir / "capped.json").string() + "\"", out2) == 4);
    auto v2 = nlohmann::json::parse(slurp(out2));
    CHECK(v2.at("kind") == "Inconclusive");
    CHECK(v2.at("stats").at("height_rejections") > 0);
}

TEST_CASE("scan-slice canonical grids") {
    fs::path dir = work_dir();

    fs::path one = dir / "one";
    CHECK(run("scan-slice --grid 1:1:1,0:0:1 --output \"" + one.string() +
              "\" --max-word-len 2 --cascade-max 0 --eps2 1/2") == 0);
    std::string csv = slurp(one / "scan.csv");
    CHECK(csv == "x,y,verdict,bound\n1,0,NoShortElements,1\n");
    CHECK(slurp(one / "scan.pgm") == "P2\n1 1\n3\n0\n");

    fs::path grid = dir / "grid";
    std::string args = "scan-slice --grid -1/4:1/4:3,-1/4:1/4:3 --output \"" + grid.string() +
                       "\" --max-word-len 2 --cascade-max 0 --eps2 1/2";
    CHECK(run(args) == 0);
    std::string csv9 = slurp(grid / "scan.csv");
    // 9 cells, the center rho = 0 skipped, the rest classified
    CHECK(std::count(csv9.begin(), csv9.end(), '\n') == 10);
    CHECK(csv9.find("0,0,Skipped,") != std::string::npos);
    CHECK(std::count(csv9.begin(), csv9.end(), 'S') >= 8);

    // byte-identical reruns, independent of the worker count
    fs::path grid2 = dir / "grid2";
    std::string args2 = "scan-slice --grid -1/4:1/4:3,-1/4:1/4:3 --output \"" + grid2.string() +
                        "\" --max-word-len 2 --cascade-max 0 --eps2 1/2 --jobs 2";
    CHECK(run(args2) == 0);
    CHECK(slurp(grid / "scan.csv") == slurp(grid2 / "scan.csv"));
    CHECK(slurp(grid / "scan.pgm") == slurp(grid2 / "scan.pgm"));

    CHECK(run("scan-slice --grid 1:1:0,0:0:1 --output \"" + (dir / "z").string() + "\"") == 1);
}

TEST_CASE("verify subcommand") {
    CHECK(run("verify bogus") == 1);
    CHECK(run("verify adjoint") == 0);
    CHECK(run("verify siegel") == 0);

    fs::path out = work_dir() / "phi.json";
    CHECK(run("verify phi --json", out) == 0);
    auto rep = nlohmann::json::parse(slurp(out));
    REQUIRE(rep.is_array());
    CHECK(rep.at(0).at("name") == "phi");
    CHECK(rep.at(0).at("passed") == 500);
    CHECK(rep.at(0).at("total") == 500);
}

TEST_CASE("orbit-trace output") {
    fs::path dir = work_dir();
    write(dir / "orbit.json", R"({
      "g1": [["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]],
      "path": {"kind": "unipotent_real", "t_min": 0.0, "t_max": 10.0, "steps": 100},
      "side": "left"
    })");
    fs::path out = dir / "orbit";
    CHECK(run("orbit-trace --input \"" + (dir / "orbit.json").string() + "\" --output \"" +
              out.string() + "\"") == 0);
    std::string csv = slurp(out / "trace.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 101);
    CHECK(csv.substr(0, 22) == "t,systole2,covol,flag\n");
    CHECK(csv.find("0,1,1,0\n") == 22);  // t = 0 row: exact systole 1

    CHECK(run("orbit-trace --input \"" + (dir / "nope.json").string() + "\"") == 1);
}
