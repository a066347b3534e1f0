#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "josephson/cli/app.hpp"

using namespace josephson;
using namespace josephson::cli;

namespace {

const std::vector<std::string> kReference{"--beta", "1", "--mass", "1", "--gamma", "0.25",
                                          "--lambda", "1", "--rho", "0.5"};

std::vector<std::string> with_reference(std::vector<std::string> args) {
  args.insert(args.end(), kReference.begin(), kReference.end());
  return args;
}

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = main_entry(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "josephson_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("parse reference configuration", "[cli]") {
  const auto cfg = parse_config(with_reference({"fluctuations"}));
  CHECK(cfg.command == Command::fluctuations);
  CHECK(cfg.gamma == 0.25);
  CHECK(cfg.rho == 0.5);
  CHECK(cfg.beta == 1.0);
  CHECK(cfg.workers == 1);
  CHECK(cfg.format == Format::csv);
}

TEST_CASE("usage errors", "[cli]") {
  auto r = invoke({"fluctuations", "--beta", "1", "--gamma", "0", "--rho", "0.5"});
  CHECK(r.status == 1);
  CHECK(r.err.find("gap") != std::string::npos);
  CHECK(invoke({"fluctuations", "--beta", "1", "--rho", "0.5"}).status == 1);
  CHECK(invoke({"fluctuations", "--gamma", "0.25", "--rho", "0.5"}).status == 1);
  CHECK(invoke(with_reference({"fluctuations", "--temp", "1"})).status == 1);
  CHECK(invoke(with_reference({"teleport"})).status == 1);
  CHECK(invoke(with_reference({})).status == 1);
  CHECK(invoke(with_reference({"fluctuations", "--bogus", "1"})).status == 1);
  CHECK(invoke(with_reference({"fluctuations", "--format", "xml"})).status == 1);
  CHECK(invoke(with_reference({"fluctuations", "--workers", "0"})).status == 1);
  CHECK(invoke(with_reference({"fluctuations", "--phi", "7"})).status == 1);
  CHECK(invoke(with_reference({"phase-diagram"})).status == 1);
}

TEST_CASE("temperature and ground state inputs", "[cli]") {
  auto cfg = parse_config({"dynamics", "--gamma", "0.25", "--rho", "0.5", "--temp", "2"});
  CHECK(cfg.beta == 0.5);
  cfg = parse_config({"dynamics", "--gamma", "0.25", "--rho", "0.5", "--temp", "0"});
  CHECK(std::isinf(cfg.beta));
  cfg = parse_config({"dynamics", "--gamma", "0.25", "--rho", "0.5", "--beta", "inf"});
  CHECK(cfg.params().ground_state());
}

TEST_CASE("config file intake", "[cli]") {
  const auto dir = scratch_dir();
  const auto path = (dir / "cfg.json").string();
  {
    std::ofstream f(path);
    f << R"({"command": "dynamics", "gamma": 0.25, "rho": 0.5, "beta": 1, "t-steps": 16})";
  }
  auto cfg = parse_config({"--config", path});
  CHECK(cfg.command == Command::dynamics);
  CHECK(cfg.t_steps == 16);
  cfg = parse_config({"--config", path, "--t-steps", "32", "--temp", "4"});
  CHECK(cfg.t_steps == 32);
  CHECK(cfg.beta == 0.25);
  {
    std::ofstream f(path);
    f << R"({"command": "dynamics", "gamma": 0.25, "rho": 0.5, "beta": 1, "colour": "red"})";
  }
  CHECK_THROWS_AS(parse_config({"--config", path}), UsageError);
  {
    std::ofstream f(path);
    f << "[1, 2]";
  }
  CHECK_THROWS_AS(parse_config({"--config", path}), UsageError);
}

TEST_CASE("phase-diagram schema", "[cli]") {
  auto r = invoke({"phase-diagram", "--gamma", "0.25", "--beta", "1", "--rho-grid", "0.05:0.6:12"});
  REQUIRE(r.status == 0);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 13);
  CHECK(lines[0] == "rho,beta,mu,delta,rho0,rho_c,condensed");
  CHECK(lines[1].rfind("0.05,1,", 0) == 0);
}

TEST_CASE("occupations schema", "[cli]") {
  auto r = invoke(with_reference({"occupations", "--points", "8"}));
  REQUIRE(r.status == 0);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 9);
  CHECK(lines[0] == "k,f_k,E_minus,E_plus,n_minus,n_plus");
}

TEST_CASE("dynamics schema", "[cli]") {
  auto r = invoke(with_reference({"dynamics"}));
  REQUIRE(r.status == 0);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 513);
  CHECK(lines[0] == "t,corr_nn,corr_jj_phi");
  CHECK(lines[1].rfind("0,", 0) == 0);
}

TEST_CASE("fluctuations output and degenerate regime", "[cli]") {
  auto r = invoke(with_reference({"fluctuations"}));
  REQUIRE(r.status == 0);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].rfind("k,var_n_tot,var_phi_tot", 0) == 0);
  auto n = invoke({"fluctuations", "--gamma", "0.25", "--beta", "1", "--rho", "0.1"});
  CHECK(n.status == 2);
  CHECK_FALSE(n.err.empty());
  CHECK(invoke({"dynamics", "--gamma", "0.25", "--beta", "1", "--rho", "0.1"}).status == 2);
}

TEST_CASE("converge schema", "[cli]") {
  auto r = invoke(with_reference({"converge", "--quantity", "density", "--L-seq", "10,14,20"}));
  REQUIRE(r.status == 0);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "L,oracle,closed_form,abs_err");
  CHECK((r.out.find("# verdict=pass\n") != std::string::npos ||
         r.out.find("# verdict=fail\n") != std::string::npos));
}

TEST_CASE("number formatting round-trips", "[cli]") {
  for (double x : {0.1, 1.0 / 3.0, 6.02214076e23, 5e-324, 0.28266980497876609}) {
    const auto s = format_number(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(kInfinity) == "inf");
}

TEST_CASE("JSON output re-ingested as config reproduces the run", "[cli]") {
  const auto dir = scratch_dir();
  auto first = invoke(with_reference({"dynamics", "--format", "json", "--t-steps", "20", "--phi", "1"}));
  REQUIRE(first.status == 0);
  const auto doc = nlohmann::json::parse(first.out);
  const auto path = (dir / "fragment.json").string();
  {
    std::ofstream f(path);
    f << doc.at("config").dump();
  }
  auto second = invoke({"--config", path});
  REQUIRE(second.status == 0);
  CHECK(second.out == first.out);
}

TEST_CASE("atomic output file", "[cli]") {
  const auto dir = scratch_dir();
  const auto target = dir / "dyn.csv";
  std::filesystem::remove(target);
  auto r = invoke(with_reference({"dynamics", "--out", target.string()}));
  REQUIRE(r.status == 0);
  CHECK(r.out.empty());
  CHECK(std::filesystem::exists(target));
  CHECK_FALSE(std::filesystem::exists(dir / "dyn.csv.tmp"));
  CHECK(data_lines(read_file(target)).size() == 513);
  // A failing run leaves the previous file untouched.
  const auto before = read_file(target);
  auto bad = invoke({"dynamics", "--gamma", "0.25", "--beta", "1", "--rho", "0.1", "--out", target.string()});
  CHECK(bad.status == 2);
  CHECK(read_file(target) == before);
}

TEST_CASE("output independent of worker count", "[cli]") {
  auto a = invoke({"phase-diagram", "--gamma", "0.25", "--beta", "1", "--rho-grid", "0.05:0.6:20", "--workers", "1"});
  auto b = invoke({"phase-diagram", "--gamma", "0.25", "--beta", "1", "--rho-grid", "0.05:0.6:20", "--workers", "4"});
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("installed binary runs", "[cli]") {
  const auto dir = scratch_dir();
  const auto target = (dir / "bin.csv").string();
  const std::string cmd = std::string(JOSEPHSON_CLI_PATH) +
                          " dynamics --gamma 0.25 --beta 1 --rho 0.5 --t-steps 8 --out " + target;
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(data_lines(read_file(target)).size() == 9);
  const std::string bad = std::string(JOSEPHSON_CLI_PATH) + " dynamics --gamma 0 --beta 1 --rho 0.5 2>/dev/null";
  const int status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == 1);
}
