// Batch front door: discreteness checks, parameter-slice scans, orbit
// traces, and the randomized property suites. All outputs are static files
// or stdout; identical inputs give byte-identical CSV/PGM regardless of the
// worker count.

#include <CLI11.hpp>

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "horolat/discreteness.hpp"
#include "horolat/json_io.hpp"
#include "horolat/orbit.hpp"
#include "horolat/verify.hpp"

namespace fs = std::filesystem;
using namespace horolat;

namespace {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::uint64_t seed_from_env() {
    const char* s = std::getenv("HOROLAT_SEED");
    if (!s || !*s) return 1;
    return std::strtoull(s, nullptr, 10);
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    Json j;
    in >> j;
    return j;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
}

int exit_code_for(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::NoShortElements: return 0;
        case VerdictKind::ShortElementFound: return 2;
        case VerdictKind::IndiscretenessEvidence: return 3;
        case VerdictKind::Inconclusive: return 4;
    }
    return 1;
}

int cmd_check_discrete(const std::string& input, const std::string& output_dir) {
    CheckDiscreteInput in = check_input_from_json(load_json(input));
    Verdict v = run_engine(in.f1, in.f2, in.config);
    std::string text = to_json(v).dump(2) + "\n";
    std::cout << text;
    if (!output_dir.empty()) {
        fs::create_directories(output_dir);
        write_file(fs::path(output_dir) / "verdict.json", text);
    }
    return exit_code_for(v.kind);
}

struct GridAxis {
    Rational lo, hi;
    int count = 0;
    Rational point(int i) const {
        if (count == 1) return lo;
        return lo + (hi - lo) * Rational(i) / Rational(count - 1);
    }
};

// "x0:x1:nx,y0:y1:ny" with rational endpoints.
std::pair<GridAxis, GridAxis> parse_grid(const std::string& spec) {
    auto parse_axis = [](const std::string& s) {
        GridAxis ax;
        std::size_t a = s.find(':'), b = s.rfind(':');
        if (a == std::string::npos || a == b)
            throw std::invalid_argument("grid axis must be lo:hi:count");
        ax.lo = parse_rational(s.substr(0, a));
        ax.hi = parse_rational(s.substr(a + 1, b - a - 1));
        ax.count = std::stoi(s.substr(b + 1));
        if (ax.count < 1) throw std::invalid_argument("grid resolution must be >= 1");
        return ax;
    };
    std::size_t comma = spec.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("grid must be x0:x1:nx,y0:y1:ny");
    return {parse_axis(spec.substr(0, comma)), parse_axis(spec.substr(comma + 1))};
}

struct CellResult {
    std::string verdict = "Skipped";
    std::string bound;
    int gray = 1;
};

int cmd_scan_slice(const std::string& grid_spec, const std::string& input,
                   const std::string& output_dir, const EngineConfig& cfg,
                   const std::string& mode, int jobs) {
    auto [xs, ys] = parse_grid(grid_spec);
    HoroLattice f1 = HoroLattice::gaussian_integers({HoroTag::U});
    HoroLattice f2 = HoroLattice::gaussian_integers({HoroTag::Uminus});
    if (!input.empty()) {
        Json j = load_json(input);
        f1 = horolattice_from_json(j.at("f1"));
        f2 = horolattice_from_json(j.at("f2"));
    }
    if (mode != "scale" && mode != "conjugate")
        throw std::invalid_argument("mode must be scale | conjugate");
    cfg.validate();

    const int nx = xs.count, ny = ys.count;
    std::vector<CellResult> cells(static_cast<std::size_t>(nx) * ny);
    std::atomic<int> next{0};

    auto worker = [&]() {
        for (;;) {
            int idx = next.fetch_add(1);
            if (idx >= nx * ny) return;
            int iy = idx / nx, ix = idx % nx;
            GaussianRational rho(xs.point(ix), ys.point(iy));
            CellResult& cell = cells[idx];
            if (rho.is_zero()) continue;  // degenerate lattice, stays Skipped
            try {
                Verdict v;
                if (mode == "scale") {
                    v = run_engine(f1, f2.scaled(rho), cfg);
                } else {
                    GMatrix a = GMatrix::identity(2);
                    a.at(0, 1) = rho;
                    LeviElement h{a};
                    v = run_engine(conjugate_lattice(h, f1), conjugate_lattice(h, f2), cfg);
                }
                cell.verdict = verdict_name(v.kind);
                switch (v.kind) {
                    case VerdictKind::NoShortElements: cell.gray = 0; break;
                    case VerdictKind::Inconclusive: cell.gray = 1; break;
                    case VerdictKind::ShortElementFound: cell.gray = 2; break;
                    case VerdictKind::IndiscretenessEvidence: cell.gray = 3; break;
                }
                if (v.certified_bound)
                    cell.bound = rational_str(*v.certified_bound);
                else if (v.witness_frob2)
                    cell.bound = rational_str(*v.witness_frob2);
                else if (v.min_nontrivial_frob2)
                    cell.bound = rational_str(*v.min_nontrivial_frob2);
            } catch (const std::exception&) {
                cell.verdict = "Error";
                cell.gray = 1;
            }
        }
    };

    if (jobs < 1) jobs = 1;
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::string csv = "x,y,verdict,bound\n";
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix) {
            const CellResult& cell = cells[static_cast<std::size_t>(iy) * nx + ix];
            csv += rational_str(xs.point(ix)) + "," + rational_str(ys.point(iy)) + "," +
                   cell.verdict + "," + cell.bound + "\n";
        }

    std::string pgm = "P2\n" + std::to_string(nx) + " " + std::to_string(ny) + "\n3\n";
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            if (ix) pgm += ' ';
            pgm += std::to_string(cells[static_cast<std::size_t>(iy) * nx + ix].gray);
        }
        pgm += '\n';
    }

    fs::create_directories(output_dir);
    write_file(fs::path(output_dir) / "scan.csv", csv);
    write_file(fs::path(output_dir) / "scan.pgm", pgm);
    std::cout << "scan-slice: " << nx * ny << " cells -> " << output_dir << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, bool as_json) {
    std::vector<SuiteReport> reports = run_suites(suite, seed_from_env());
    bool all_ok = true;
    Json out = Json::array();
    for (const SuiteReport& r : reports) {
        if (as_json) {
            out.push_back(Json{{"name", r.name},
                               {"passed", r.passed},
                               {"total", r.total},
                               {"first_failure", r.first_failure}});
        } else {
            std::cout << r.name << ": " << r.passed << "/" << r.total
                      << (r.ok() ? " pass" : " FAIL") << "\n";
            if (!r.ok())
                std::cout << "  first counterexample: " << r.first_failure << "\n";
        }
        all_ok = all_ok && r.ok();
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

int cmd_orbit_trace(const std::string& input, const std::string& output_dir) {
    OrbitTraceInput in = orbit_input_from_json(load_json(input));
    OrbitTrace trace = orbit_trace(in.g1, in.path, in.side);
    std::string csv = "t,systole2,covol,flag\n";
    std::size_t failures = 0;
    for (const OrbitSample& s : trace.samples) {
        csv += format_double(s.t) + "," + format_double(s.systole2) + "," +
               format_double(s.covol) + "," + (s.ok ? "0" : "1") + "\n";
        if (!s.ok) ++failures;
    }
    if (!output_dir.empty()) {
        fs::create_directories(output_dir);
        write_file(fs::path(output_dir) / "trace.csv", csv);
    } else {
        std::cout << csv;
    }
    if (failures > 0)
        std::cerr << "orbit-trace: " << failures << " samples flagged as numeric failures\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for subgroups generated by horospherical lattice pairs"};
    app.require_subcommand(1);

    std::string input, output_dir, grid, mode = "scale", suite;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    EngineConfig cfg;
    std::string eps2_str;

    auto* check = app.add_subcommand("check-discrete",
                                     "run the enumeration engine on a lattice pair");
    check->add_option("--input", input, "pair + config JSON file")->required();
    check->add_option("--output", output_dir, "directory for verdict.json");

    auto* scan = app.add_subcommand("scan-slice", "classify a grid of scale factors rho");
    scan->add_option("--grid", grid, "x0:x1:nx,y0:y1:ny (rational endpoints)")->required();
    scan->add_option("--output", output_dir, "directory for scan.csv / scan.pgm")->required();
    scan->add_option("--input", input, "base pair JSON (default: Z[i]^2 pair)");
    scan->add_option("--max-word-len", cfg.max_word_len, "word length per cell");
    scan->add_option("--eps2", eps2_str, "squared ball radius, p/q");
    scan->add_option("--cascade-max", cfg.cascade_max, "cascade depth (0 disables)");
    scan->add_option("--element-cap", cfg.element_cap, "max distinct elements per cell");
    scan->add_option("--height-cap", cfg.height_cap, "max digits per entry");
    scan->add_option("--jobs", jobs, "worker threads");
    scan->add_option("--mode", mode, "scale | conjugate (default scale)");

    auto* verify = app.add_subcommand("verify", "run a randomized property suite");
    verify->add_option("suite", suite,
                       "contraction | hermite | phi | iwasawa | siegel | adjoint | all")
        ->required();
    bool verify_json = false;
    verify->add_flag("--json", verify_json, "emit the report as JSON");

    auto* orbit = app.add_subcommand("orbit-trace", "systole trace along a one-parameter path");
    orbit->add_option("--input", input, "trace JSON file")->required();
    orbit->add_option("--output", output_dir, "directory for trace.csv (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check_discrete(input, output_dir);
        if (scan->parsed()) {
            if (!eps2_str.empty()) cfg.eps2 = parse_rational(eps2_str);
            return cmd_scan_slice(grid, input, output_dir, cfg, mode, jobs);
        }
        if (verify->parsed()) return cmd_verify(suite, verify_json);
        if (orbit->parsed()) return cmd_orbit_trace(input, output_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
