#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "kpzlab/cli.hpp"
#include "kpzlab/errors.hpp"

using namespace kpzlab;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("kpzlab_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path_of(const std::string& name) { return (scratch() / name).string(); }

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream f(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(f, line);) out.push_back(line);
  return out;
}

std::vector<std::string> data_rows(const std::string& path) {
  std::vector<std::string> out;
  for (auto& l : read_lines(path))
    if (!l.empty() && l[0] != '#') out.push_back(l);
  return out;
}

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "kpzlab");
  return run_cli(args);
}

int run_binary(const std::string& tail) {
  const std::string cmd = std::string(KPZLAB_CLI_PATH) + " " + tail + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

}  // namespace

TEST_CASE("tw table: 181 rows and provenance") {
  const std::string out = path_of("tw.csv");
  REQUIRE(run({"tw", "--beta", "2", "--smin", "-6", "--smax", "3", "--step", "0.05", "--method", "painleve",
               "--out", out}) == kExitOk);
  const auto lines = read_lines(out);
  REQUIRE(lines.size() > 2);
  CHECK(lines[0].rfind("# kpzlab 0.1.0 argv=", 0) == 0);
  CHECK(lines[0].find("seed=1") != std::string::npos);
  CHECK(lines[0].find("--smin -6") != std::string::npos);
  const auto rows = data_rows(out);
  REQUIRE(rows.size() == 182);
  CHECK(rows[0] == "s,F");

  const std::string fr = path_of("tw_fredholm.csv");
  REQUIRE(run({"tw", "--beta", "2", "--smin", "-6", "--smax", "3", "--step", "0.05", "--method", "fredholm",
               "--out", fr}) == kExitOk);
  const auto rows2 = data_rows(fr);
  REQUIRE(rows2.size() == rows.size());
  double worst = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double a = std::stod(rows[i].substr(rows[i].find(',') + 1));
    const double b = std::stod(rows2[i].substr(rows2[i].find(',') + 1));
    worst = std::max(worst, std::abs(a - b));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("exit codes") {
  CHECK(run({"tw", "--beta", "3", "--out", path_of("x.csv")}) == kExitUsage);
  CHECK(run({"tw", "--beta", "2", "--smin", "2", "--smax", "1", "--out", path_of("x.csv")}) == kExitUsage);
  CHECK(run({"nonsense"}) == kExitUsage);
  CHECK(run({"png", "--T", "-1", "--out", path_of("x.csv")}) == kExitUsage);
  CHECK(run({"rmt", "--ensemble", "gse", "--out", path_of("x.csv")}) == kExitUsage);

  write_file(path_of("empty.csv"), "");
  write_file(path_of("header_only.csv"), "# nothing\nseed,s\n");
  write_file(path_of("wrong.csv"), "tau,value\n1,2\n");
  const std::string ref = path_of("ref.csv");
  REQUIRE(run({"tw", "--beta", "2", "--out", ref}) == kExitOk);
  CHECK(run({"compare", "--empirical", path_of("empty.csv"), "--reference", ref}) == kExitUsage);
  CHECK(run({"compare", "--empirical", path_of("header_only.csv"), "--reference", ref}) == kExitUsage);
  CHECK(run({"compare", "--empirical", path_of("wrong.csv"), "--reference", ref}) == kExitUsage);
  CHECK(run({"compare", "--empirical", path_of("missing.csv"), "--reference", ref}) == kExitUsage);

  CHECK(run_binary("tw --beta 3") == 1);
  CHECK(run_binary("tw --beta 1 --smin -4 --smax -3 --step 0.5 --out " + path_of("b.csv")) == 0);
  CHECK(run_binary("") == 1);
}

TEST_CASE("mismatched header message names the expected header") {
  write_file(path_of("wrong2.csv"), "x,y\n1,2\n");
  const std::string ref = path_of("ref2.csv");
  REQUIRE(run({"tw", "--beta", "1", "--out", ref}) == kExitOk);
  const std::string cmd = std::string(KPZLAB_CLI_PATH) + " compare --empirical " + path_of("wrong2.csv") +
                          " --reference " + ref + " 2>" + path_of("err.txt") + " >/dev/null";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 1);
  std::ifstream f(path_of("err.txt"));
  const std::string err((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(err.find("seed,s") != std::string::npos);
}

TEST_CASE("reproducible across thread counts") {
  const std::vector<std::vector<std::string>> cmds = {
      {"png", "--geometry", "droplet", "--T", "20", "--samples", "12", "--seed", "5"},
      {"png", "--geometry", "flat", "--T", "15", "--samples", "9", "--seed", "5"},
      {"rmt", "--ensemble", "goe", "--N", "20", "--samples", "10", "--seed", "3"},
      {"dyson", "--ensemble", "gue", "--N", "12", "--taus", "0,0.5,1", "--paths", "7", "--seed", "8"},
  };
  int k = 0;
  for (const auto& base : cmds) {
    std::vector<std::vector<std::string>> rows;
    for (const char* t : {"1", "3", "8"}) {
      auto args = base;
      const std::string out = path_of("rep" + std::to_string(k++) + ".csv");
      args.insert(args.end(), {"--threads", t, "--out", out});
      REQUIRE(run(args) == kExitOk);
      rows.push_back(data_rows(out));
    }
    CHECK(rows[0].size() > 1);
    CHECK(rows[0] == rows[1]);
    CHECK(rows[0] == rows[2]);
  }
}

TEST_CASE("png and rmt output layout") {
  const std::string one = path_of("png1.csv");
  REQUIRE(run({"png", "--T", "10", "--samples", "1", "--seed", "42", "--out", one}) == kExitOk);
  const auto rows = data_rows(one);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "seed,s");
  CHECK(rows[1].rfind("42,", 0) == 0);
  const std::string again = path_of("png1b.csv");
  REQUIRE(run({"png", "--T", "10", "--samples", "1", "--seed", "42", "--out", again}) == kExitOk);
  CHECK(data_rows(again) == rows);

  const std::string rmt = path_of("rmt.csv");
  REQUIRE(run({"rmt", "--ensemble", "gue", "--N", "10", "--samples", "4", "--seed", "100", "--out", rmt}) == kExitOk);
  const auto r = data_rows(rmt);
  REQUIRE(r.size() == 5);
  CHECK(r[0] == "seed,edge_value");

  // a single-time path reduces to the static samples
  const std::string dy = path_of("dyson0.csv");
  REQUIRE(run({"dyson", "--ensemble", "gue", "--N", "10", "--taus", "0", "--paths", "4", "--seed", "100", "--out",
               dy}) == kExitOk);
  const auto d = data_rows(dy);
  REQUIRE(d.size() == 5);
  CHECK(d[0] == "path_id,tau,edge_value");
  for (std::size_t i = 1; i < 5; ++i) {
    const auto rv = r[i].substr(r[i].find(',') + 1);
    const auto dv = d[i].substr(d[i].rfind(',') + 1);
    CHECK(rv == dv);
  }
}

TEST_CASE("config files") {
  const std::string cfg = path_of("run.cfg");
  write_file(cfg, "# sweep\nbeta = 1\nsmin=-2\nsmax=2\nstep=0.5\n");
  const std::string out = path_of("cfg.csv");
  REQUIRE(run({"tw", "--config", cfg, "--out", out}) == kExitOk);
  auto rows = data_rows(out);
  CHECK(rows.size() == 10);
  CHECK(read_lines(out)[0].find("beta=1") == std::string::npos);  // argv is recorded verbatim

  // command-line flags override the file
  REQUIRE(run({"tw", "--config", cfg, "--smax", "0", "--out", out}) == kExitOk);
  rows = data_rows(out);
  CHECK(rows.size() == 6);
  CHECK(rows.back().rfind("0,", 0) == 0);

  write_file(path_of("bad.cfg"), "beta=1\ncolour=blue\n");
  CHECK(run({"tw", "--config", path_of("bad.cfg"), "--out", out}) == kExitUsage);
  write_file(path_of("malformed.cfg"), "beta\n");
  CHECK(run({"tw", "--config", path_of("malformed.cfg"), "--out", out}) == kExitUsage);
  CHECK_THROWS_AS(read_config(path_of("malformed.cfg")), InvalidInput);
  const auto kv = read_config(cfg);
  REQUIRE(kv.size() == 4);
  CHECK(kv[0].first == "beta");
  CHECK(kv[0].second == "1");
}

TEST_CASE("compare against inverse-CDF resampled reference") {
  const std::string ref = path_of("ref_cmp.csv");
  REQUIRE(run({"tw", "--beta", "2", "--smin", "-8", "--smax", "6", "--out", ref}) == kExitOk);
  // resample the reference table through its own quantiles on a fine grid
  std::vector<std::pair<double, double>> table;
  for (const auto& l : data_rows(ref))
    if (l != "s,F") table.push_back({std::stod(l), std::stod(l.substr(l.find(',') + 1))});
  std::ostringstream emp;
  emp << "seed,s\n";
  const int n = 4000;
  for (int i = 0; i < n; ++i) {
    const double u = (i + 0.5) / n;
    std::size_t j = 1;
    while (j + 1 < table.size() && table[j].second < u) ++j;
    const double w = (u - table[j - 1].second) / (table[j].second - table[j - 1].second);
    emp << i << ',' << table[j - 1].first + w * (table[j].first - table[j - 1].first) << '\n';
  }
  write_file(path_of("emp.csv"), emp.str());
  const std::string rep = path_of("report.json");
  REQUIRE(run({"compare", "--empirical", path_of("emp.csv"), "--reference", ref, "--out", rep}) == kExitOk);
  std::string body;
  for (const auto& l : data_rows(rep)) body += l;
  const auto pos = body.find("\"ks\":");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(body.substr(pos + 5)) < 1.0 / n + 1e-6);
  CHECK(body.find("\"n\": 4000") != std::string::npos);
}

TEST_CASE("kernel subcommand") {
  const std::string out = path_of("k.csv");
  CHECK(run({"kernel", "--kind", "airy", "--s1", "0", "--s2", "1", "--out", out}) == kExitOk);
  CHECK(data_rows(out).size() == 2);
  CHECK(run({"kernel", "--kind", "goe", "--s1", "-30", "--s2", "1", "--out", out}) == kExitUsage);
}
