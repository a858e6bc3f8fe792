#include "gburgers/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <doctest.h>

#include "gburgers/errors.hpp"

using namespace gburgers;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "gburgers_cli_tests";
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const std::string& name, const std::string& body) {
    const fs::path path = scratch_dir() / name;
    std::ofstream out(path);
    out << body;
    return path;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.push_back("");
        rows.push_back(cells);
    }
    return rows;
}

int invoke(std::initializer_list<const char*> args) {
    std::vector<const char*> argv = {"gburgers"};
    argv.insert(argv.end(), args.begin(), args.end());
    return cli::run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("run file parsing") {
    const fs::path ok = write_file("ok.run",
                                   "# layer problem, short horizon\n"
                                   "problem = 2\n"
                                   "nu = 1.0\n"
                                   "sigma = 2.0   # inline comment\n"
                                   "J = 2\n"
                                   "dt = 0.001\n"
                                   "T = 0.01\n"
                                   "snapshots = 0.005, 0.01\n");
    const RunFile rf = parse_runfile(ok.string());
    CHECK(rf.problem == 2);
    CHECK(rf.sigma == 2.0);
    CHECK(rf.snapshots == std::vector<double>{0.005, 0.01});
    CHECK(rf.out.empty());

    CHECK_THROWS_AS(parse_runfile((scratch_dir() / "absent.run").string()), ConfigError);

    const fs::path unknown = write_file("unknown.run", "problem = 2\nwavelets = 4\n");
    CHECK_THROWS_WITH_AS(parse_runfile(unknown.string()),
                         doctest::Contains("unknown key 'wavelets'"), ConfigError);

    const fs::path junk = write_file("junk.run", "nu = fast\n");
    CHECK_THROWS_AS(parse_runfile(junk.string()), ConfigError);

    const fs::path noval = write_file("noval.run", "nu =\n");
    CHECK_THROWS_AS(parse_runfile(noval.string()), ConfigError);
}

TEST_CASE("missing required key is named") {
    const fs::path path = write_file("nodt.run",
                                     "problem = 2\nnu = 1.0\nsigma = 2.0\nJ = 2\nT = 0.01\n");
    const RunFile rf = parse_runfile(path.string());
    CHECK_THROWS_WITH_AS(cli::cmd_solve(rf, (scratch_dir() / "x.csv").string()),
                         doctest::Contains("'dt'"), ConfigError);
}

TEST_CASE("solve CSV layout, accuracy, and determinism") {
    const fs::path rf_path = write_file("tp2.run",
                                        "problem = 2\nnu = 1.0\nsigma = 2.0\n"
                                        "J = 2\ndt = 0.001\nT = 0.01\n");
    const RunFile rf = parse_runfile(rf_path.string());
    const fs::path csv1 = scratch_dir() / "tp2a.csv";
    const fs::path csv2 = scratch_dir() / "tp2b.csv";
    cli::cmd_solve(rf, csv1.string());
    cli::cmd_solve(rf, csv2.string());
    CHECK(slurp(csv1) == slurp(csv2));

    const auto rows = parse_csv(slurp(csv1));
    REQUIRE(rows.size() == 9);  // header + 8 collocation points at one snapshot
    CHECK(rows[0] == std::vector<std::string>{"t", "x_star", "w_numeric", "w_exact", "abs_error"});
    double max_err = 0.0;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        REQUIRE(rows[r].size() == 5);
        for (const std::string& cell : rows[r]) {
            CHECK(cell.find('e') != std::string::npos);  // N.NNNNNNNe+EE throughout
            CHECK(cell.size() == 13 + (cell[0] == '-' ? 1 : 0));
        }
        max_err = std::max(max_err, std::stod(rows[r][4]));
    }
    CHECK(max_err == doctest::Approx(1.1533e-6).epsilon(0.15));
}

TEST_CASE("solve CSV leaves exact columns empty without a closed form") {
    const fs::path rf_path = write_file("tp4.run",
                                        "problem = 4\nnu = 0.1\nJ = 3\ndt = 0.01\nT = 0.1\n");
    const RunFile rf = parse_runfile(rf_path.string());
    const fs::path csv = scratch_dir() / "tp4.csv";
    cli::cmd_solve(rf, csv.string());
    const auto rows = parse_csv(slurp(csv));
    REQUIRE(rows.size() == 17);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        REQUIRE(rows[r].size() == 5);
        CHECK(rows[r][3].empty());
        CHECK(rows[r][4].empty());
    }
}

TEST_CASE("converge CSV with a single level omits the ratio cells") {
    const fs::path rf_path = write_file("single.run",
                                        "problem = 2\nnu = 1.0\nsigma = 2.0\n"
                                        "dt = 0.001\nT = 0.01\nJ_list = 3\n");
    const RunFile rf = parse_runfile(rf_path.string());
    const fs::path csv = scratch_dir() / "single.csv";
    cli::cmd_converge(rf, csv.string());
    const auto rows = parse_csv(slurp(csv));
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][0] == "3");
    CHECK(rows[1][4].empty());
    CHECK(rows[1][5].empty());
}

TEST_CASE("exit codes distinguish config and success paths") {
    const fs::path rf_path = write_file("cli.run",
                                        "problem = 2\nnu = 1.0\nsigma = 2.0\n"
                                        "J = 2\ndt = 0.001\nT = 0.01\n");
    const fs::path out = scratch_dir() / "cli.csv";
    CHECK(invoke({"solve", rf_path.string().c_str(), "--out", out.string().c_str()}) ==
          cli::kExitOk);
    CHECK(fs::exists(out));

    CHECK(invoke({"solve", "/nonexistent.run"}) == cli::kExitConfig);
    CHECK(invoke({"table", "9"}) == cli::kExitConfig);
    CHECK(invoke({"bogus"}) == cli::kExitConfig);

    const fs::path bad_dt = write_file("baddt.run",
                                       "problem = 2\nnu = 1.0\nsigma = 2.0\n"
                                       "J = 2\ndt = 0.003\nT = 0.01\n");
    CHECK(invoke({"solve", bad_dt.string().c_str(), "--out", out.string().c_str()}) ==
          cli::kExitConfig);
}

TEST_CASE("benchmark table output carries reference columns") {
    const fs::path out = scratch_dir() / "table3.csv";
    CHECK(invoke({"table", "3", "--out", out.string().c_str()}) == cli::kExitOk);
    const auto rows = parse_csv(slurp(out));
    REQUIRE(rows.size() == 7);  // header + six cells
    CHECK(rows[0][5] == "l_inf_computed");
    // reference value stored for J = 2, dt = 0.001, T = 0.01
    CHECK(std::stod(rows[1][6]) == doctest::Approx(1.1533e-6));
    // computed deviation within the acceptance band
    CHECK(std::abs(std::stod(rows[1][7])) < 0.10);
}
