#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(RBFCUB_CLI_PATH) + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  REQUIRE(is.good());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("rbfcub_cli_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
  static int counter;
};
int TempDir::counter = 0;

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("weights subcommand end to end") {
  TempDir dir;
  const std::string out = dir.file("w.json");
  CHECK(run_cli("weights --kernel phs:1 --degree -1 --points equidistant --n 11 "
                "--domain 0,1 --out " + out) == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  CHECK(std::abs(j["sum_abs_weights"].get<double>() - 1.0) <= 1e-10);
  CHECK(fs::exists(out + ".config.json"));
}

TEST_CASE("validation failures exit with code 2") {
  TempDir dir;
  CHECK(run_cli("weights --kernel nosuch --out " + dir.file("x.json")) == 2);
  CHECK(run_cli("weights --kernel gauss --degree 0 --out " + dir.file("y.json")) ==
        2);  // missing --eps
  CHECK(run_cli("nonsense-subcommand") == 2);

  // A user-supplied CSV with duplicate points is rejected.
  const std::string pts = dir.file("dup.csv");
  {
    std::ofstream os(pts);
    os << "x\n0.25\n0.25\n0.75\n";
  }
  CHECK(run_cli("weights --kernel phs:1 --degree -1 --points-file " + pts +
                " --domain 0,1 --out " + dir.file("z.json")) == 2);
}

TEST_CASE("numerical failures exit with code 3") {
  TempDir dir;
  // An absurd quadrature tolerance exhausts the subdivision budget.
  CHECK(run_cli("weights --kernel wendland:1:1 --degree 0 --eps 3 --n 8 --domain 0,1 "
                "--quad-tol 1e-30 --out " + dir.file("q.json")) == 3);
}

TEST_CASE("config file with flag overrides") {
  TempDir dir;
  const std::string cfg = dir.file("config.json");
  {
    std::ofstream os(cfg);
    os << R"({"kernel": "phs:1", "degree": -1, "points": "equidistant", "n": 11,)"
       << R"( "domain": "0,1"})";
  }
  const std::string out = dir.file("from_config.json");
  CHECK(run_cli("weights --config " + cfg + " --out " + out) == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["weights"].size() == 11);

  const std::string out2 = dir.file("override.json");
  CHECK(run_cli("weights --config " + cfg + " --n 21 --out " + out2) == 0);
  j = nlohmann::json::parse(slurp(out2));
  CHECK(j["weights"].size() == 21);
}

TEST_CASE("stability sweep reruns are byte-identical through the cli") {
  TempDir dir;
  const std::string out = dir.file("s.csv");
  const std::string args = "stability-sweep --kernel wendland:1:0 --degree 0 --n 20 "
                           "--domain 0,1 --eps-min 5 --eps-max 100 --eps-num 5 --out " + out;
  CHECK(run_cli(args) == 0);
  const std::string first = slurp(out);
  CHECK(run_cli(args) == 0);
  CHECK(slurp(out) == first);
}

TEST_CASE("points subcommand exports csv") {
  TempDir dir;
  const std::string out = dir.file("pts.csv");
  CHECK(run_cli("points --points halton --n 5 --domain 0,2,0,1 --out " + out) == 0);
  std::istringstream is(slurp(out));
  std::string header;
  std::getline(is, header);
  CHECK(header == "x,y");
}

TEST_SUITE_END();
