#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <commands.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <sstream>

using namespace scwt;
namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "scwt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "scwt_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::vector<std::vector<std::string>> rows_of(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("axis syntax") {
  const auto axis = cli::parse_axis("0.5:3:32");
  CHECK(axis.min == 0.5);
  CHECK(axis.max == 3.0);
  CHECK(axis.count == 32);
  CHECK_THROWS_AS(cli::parse_axis("1:1:5"), Error);
  CHECK_THROWS_AS(cli::parse_axis("0:1:1"), Error);
  CHECK_THROWS_AS(cli::parse_axis("0:1"), Error);
  CHECK_THROWS_AS(cli::parse_axis("0:1:2.5"), Error);
  CHECK(cli::parse_signal_spec("harmonic:-6.2832").omega.value() == -6.2832);
  CHECK_THROWS_AS(cli::parse_signal_spec("chirp:1"), Error);
}

TEST_CASE("transform writes a grid CSV and heatmap") {
  const auto dir = scratch();
  const auto csv = dir / "t.csv";
  const auto ppm = dir / "t.ppm";
  const auto r = run_cli({"transform", "--signal", "harmonic:-6.283185307179586", "--method", "pv-split", "--a",
                          "0.6:1.4:3", "--b", "-1:1:4", "--out", csv.string(), "--heatmap", ppm.string(),
                          "--halfwidth", "100"});
  REQUIRE(r.code == 0);
  const auto rows = rows_of(slurp(csv));
  REQUIRE(rows.size() == 13);
  CHECK(rows[0].size() == 8);
  // a = 1 sits inside the band: |w| = 1/pi.
  const auto& mid = rows[5];
  CHECK(mid[0] == "1");
  CHECK(std::hypot(std::stod(mid[2]), std::stod(mid[3])) == doctest::Approx(1 / pi).epsilon(1e-3));
  CHECK(!mid[4].empty());
  CHECK(slurp(ppm).rfind("P6\n4 3\n255\n", 0) == 0);

  // Identical runs give identical bytes.
  const auto again = dir / "t2.csv";
  run_cli({"transform", "--signal", "harmonic:-6.283185307179586", "--method", "pv-split", "--a", "0.6:1.4:3", "--b",
           "-1:1:4", "--out", again.string(), "--halfwidth", "100"});
  CHECK(slurp(again) == slurp(csv));

  const auto direct = dir / "d.csv";
  REQUIRE(run_cli({"transform", "--signal", "harmonic:1", "--method", "direct", "--a", "1:2:2", "--b", "0:1:2",
                   "--out", direct.string(), "--halfwidth", "50"})
              .code == 0);
  CHECK(rows_of(slurp(direct))[1][4].empty());
}

TEST_CASE("transform errors") {
  const auto dir = scratch();
  const auto out = dir / "none.csv";
  fs::remove(out);
  auto r = run_cli({"transform", "--signal", "harmonic:1", "--a", "1:2:3", "--b", "0:0:4", "--out", out.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("empty axis") != std::string::npos);
  r = run_cli({"transform", "--input", (dir / "missing.csv").string(), "--a", "1:2:3", "--b", "0:1:4", "--out",
               out.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("missing.csv") != std::string::npos);
  r = run_cli({"transform", "--signal", "harmonic:1", "--method", "fourier", "--a", "1:2:3", "--b", "0:1:4", "--out",
               out.string()});
  CHECK(r.code == 1);
  CHECK_FALSE(fs::exists(out));
  r = run_cli({"transform", "--a", "1:2:3", "--b", "0:1:4"});
  CHECK(r.code == 1);
  r = run_cli({"bogus"});
  CHECK(r.code == 1);
}

TEST_CASE("transform of a sampled file names the failing node and leaves no output") {
  const auto dir = scratch();
  const auto sig = dir / "s.csv";
  std::ofstream(sig) << "t,re,im\n0,1,0\n0.5,0,1\n1,-1,0\n";
  const auto out = dir / "sampled.csv";
  fs::remove(out);
  const auto r = run_cli({"transform", "--input", sig.string(), "--method", "direct", "--a", "0.001:0.002:2", "--b",
                          "0:100:2", "--out", out.string(), "--halfwidth", "10"});
  CHECK(r.code == 1);
  CHECK(r.err.find("node (a=") != std::string::npos);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("simplified propagation recovers the initial value") {
  const auto dir = scratch();
  const auto out = dir / "simple.csv";
  const double omega = 1.0;
  const double c = 4.0;
  const auto r = run_cli({"propagate", "--signal", "harmonic:1", "--k", "2", "--c", "4", "--a-min", "0", "--a-max",
                          "2", "--component", "1", "--simplified", "--na", "5", "--out", out.string()});
  REQUIRE(r.code == 0);
  const auto rows = rows_of(slurp(out));
  REQUIRE(rows.size() == 6);
  CHECK(rows[1].back() == "0");
  for (std::size_t i = 2; i < rows.size(); ++i) {
    CHECK(rows[i].back() == "1");
    const Complex w1(std::stod(rows[i][4]), std::stod(rows[i][5]));
    CHECK(std::abs(w1 - std::polar(1.0, omega * c) / (2 * pi)) < 1e-6);
  }

  const auto bad = run_cli({"propagate", "--signal", "harmonic:1", "--k", "3", "--c", "4", "--a-min", "0",
                            "--a-max", "2", "--simplified", "--out", (dir / "k3.csv").string()});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("simplification-inapplicable") != std::string::npos);
  CHECK_FALSE(fs::exists(dir / "k3.csv"));
}

TEST_CASE("propagation with check, line data round trip") {
  const auto dir = scratch();
  const auto out = dir / "tri.csv";
  const auto check = dir / "check.json";
  const auto l1 = dir / "l1.csv";
  const auto l2 = dir / "l2.csv";
  auto r = run_cli({"propagate", "--signal", "harmonic:1", "--k", "2", "--c", "5", "--a-min", "1", "--a-max", "2",
                    "--na", "8", "--nb", "8", "--check", "--check-out", check.string(), "--out", out.string(),
                    "--line-data-out1", l1.string(), "--line-data-out2", l2.string(), "--halfwidth", "200"});
  REQUIRE(r.code == 0);
  const auto stats = nlohmann::json::parse(slurp(check));
  CHECK(stats["max_abs_diff"].get<double>() < 1e-2);
  CHECK(stats["n_compared"].get<long>() == 36);
  CHECK(rows_of(slurp(out))[0].back() == "inside");

  const auto again = dir / "tri2.csv";
  r = run_cli({"propagate", "--line-data-in1", l1.string(), "--line-data-in2", l2.string(), "--na", "8", "--nb", "8",
               "--out", again.string()});
  REQUIRE(r.code == 0);
  CHECK(slurp(again) == slurp(out));

  r = run_cli({"propagate", "--line-data-in1", l2.string(), "--component", "1", "--out", again.string()});
  CHECK(r.code == 1);
}

TEST_CASE("propagation errors carry coordinates") {
  const auto r = run_cli({"propagate", "--signal", "harmonic:-6.283185307179586", "--k", "2", "--c", "0", "--a-min",
                          "0.4", "--a-max", "0.6", "--out", (scratch() / "x.csv").string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("branch-crossing") != std::string::npos);
  CHECK(r.err.find("0.5") != std::string::npos);
}

TEST_CASE("verify report") {
  const auto dir = scratch();
  const auto report = dir / "verify.json";
  auto r = run_cli({"verify", "--out", report.string(), "--halfwidth", "200"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(slurp(report));
  CHECK(j["pass"].get<bool>());
  CHECK(j.contains("config"));
  CHECK(j["config"]["h"].get<double>() == 1e-3);
  CHECK(j["config"]["quadrature"]["halfwidth_xi"].get<double>() == 200.0);
  CHECK(j["boundary_checks"]["kernel_on_b_eq_b0_component1"]["max_abs"].get<double>() == 0.0);
  CHECK(j["op_counts"]["direct_ops"].get<std::uint64_t>() > j["op_counts"]["propagation_ops"].get<std::uint64_t>());
  CHECK(j["residuals"]["kernel_adjoint_component2"]["order_ratio"].get<double>() == doctest::Approx(4.0).epsilon(0.05));

  r = run_cli({"verify", "--out", report.string(), "--inject-error", "1e-3", "--halfwidth", "200"});
  CHECK(r.code == 2);
  CHECK(r.err.find("check failed: ") != std::string::npos);
  CHECK_FALSE(nlohmann::json::parse(slurp(report))["pass"].get<bool>());

  r = run_cli({"verify", "--out", report.string(), "--probe-a-min", "0.001"});
  CHECK(r.code == 1);
}
