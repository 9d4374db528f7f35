#include <Eigen/Dense>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "hyperbits/cli.hpp"
#include "hyperbits/constants.hpp"
#include "hyperbits/protocols.hpp"
#include "hyperbits/qsim.hpp"
#include "hyperbits/random_instances.hpp"
#include "hyperbits/rng.hpp"
#include "hyperbits/serialization.hpp"

using namespace hyperbits;
using nlohmann::json;

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int rc;
  std::string out;
  std::string err;
};

CliResult run_cli(const cli::RunConfig& cfg) {
  std::ostringstream out, err;
  const int rc = cli::run(cfg, out, err);
  return {rc, out.str(), err.str()};
}

fs::path tmp_dir() {
  const fs::path dir("cli_tmp");
  fs::create_directories(dir);
  return dir;
}

std::string write_json(const std::string& name, const json& j) {
  const std::string path = (tmp_dir() / name).string();
  serialization::write_text_file(path, j.dump());
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string valid_encoding_file(const std::string& name, std::size_t inputs, bool uniform) {
  Rng rng(404);
  return write_json(
      name, serialization::encoding_to_json(
                random_instances::random_encoding(inputs, 3, false, uniform, rng)));
}

}  // namespace

TEST_CASE("identity sweep reports residuals at machine precision") {
  cli::RunConfig cfg;
  cfg.command = "identity";
  cfg.trials = 20;
  cfg.seed = 7;
  cfg.n = 2;
  cfg.dim = 3;
  const CliResult res = run_cli(cfg);
  CHECK(res.rc == 0);
  CHECK(res.err.empty());
  const json report = json::parse(res.out);
  CHECK(report.at("command") == "identity");
  CHECK(report.at("version") == cli::kVersion);
  CHECK(report.at("seed") == 7);
  CHECK(report.at("mode") == "sweep");
  CHECK(report.at("results").size() == 20);
  CHECK(report.at("max_residual").get<double>() <= kTightTol);
}

TEST_CASE("identity file mode analyzes stored instances") {
  const std::string f_path =
      write_json("identity_f.json", serialization::query_matrix_to_json(
                                        queries::QueryMatrix::hadamard(2)));
  const std::string enc_path = valid_encoding_file("identity_enc.json", 4, false);

  cli::RunConfig cfg;
  cfg.command = "identity";
  cfg.inputs = {f_path, enc_path};
  const CliResult res = run_cli(cfg);
  CHECK(res.rc == 0);
  const json report = json::parse(res.out);
  CHECK(report.at("mode") == "file");
  CHECK(report.at("queries").size() == 4);
  CHECK(report.at("residual").get<double>() <= kCrossTol);
}

TEST_CASE("invalid inputs exit with status 2 and write nothing") {
  json dup = serialization::query_matrix_to_json(queries::QueryMatrix::hadamard(1));
  dup["rows"][1] = dup["rows"][0];
  const std::string f_path = write_json("identity_dup.json", dup);
  const std::string enc_path = valid_encoding_file("identity_enc2.json", 2, false);
  const std::string out_path = (tmp_dir() / "identity_report_dup.json").string();
  fs::remove(out_path);

  cli::RunConfig cfg;
  cfg.command = "identity";
  cfg.inputs = {f_path, enc_path};
  cfg.out = out_path;
  const CliResult res = run_cli(cfg);
  CHECK(res.rc == 2);
  CHECK(res.err.find("error:") == 0);
  CHECK(!fs::exists(out_path));
}

TEST_CASE("malformed json and bad arity exit with status 2") {
  const std::string broken = (tmp_dir() / "broken.json").string();
  serialization::write_text_file(broken, "{ this is not json");

  cli::RunConfig cfg;
  cfg.command = "koenig";
  cfg.inputs = {broken};
  CHECK(run_cli(cfg).rc == 2);

  cfg.inputs = {valid_encoding_file("koenig_small.json", 2, true)};
  CHECK(run_cli(cfg).rc == 2);

  cfg.inputs = {(tmp_dir() / "absent.json").string()};
  CHECK(run_cli(cfg).rc == 2);
}

TEST_CASE("ic sweep and file mode agree on clean instances") {
  cli::RunConfig cfg;
  cfg.command = "ic";
  cfg.trials = 10;
  cfg.seed = 3;
  cfg.n = 2;
  cfg.dim = 3;
  const CliResult sweep = run_cli(cfg);
  CHECK(sweep.rc == 0);
  CHECK(json::parse(sweep.out).at("violations") == 0);

  cli::RunConfig file_cfg;
  file_cfg.command = "ic";
  file_cfg.inputs = {
      write_json("ic_f.json",
                 serialization::query_matrix_to_json(queries::QueryMatrix::hadamard(2))),
      valid_encoding_file("ic_enc.json", 4, true)};
  file_cfg.rows = {1, 2};
  const CliResult file = run_cli(file_cfg);
  CHECK(file.rc == 0);
  const json report = json::parse(file.out);
  CHECK(report.at("bits").size() == 2);
  CHECK(report.at("ic_ok") == true);
  CHECK(report.at("dominance_ok") == true);

  // an absurd threshold turns the same clean run into a finding
  file_cfg.tol = -1.0;
  CHECK(run_cli(file_cfg).rc == 1);
}

TEST_CASE("koenig csv reports carry the provenance comment") {
  cli::RunConfig cfg;
  cfg.command = "koenig";
  cfg.trials = 5;
  cfg.seed = 9;
  cfg.dim = 3;
  cfg.format = "csv";
  const CliResult res = run_cli(cfg);
  CHECK(res.rc == 0);
  CHECK(res.out.rfind("# seed=9 tol=", 0) == 0);
  CHECK(res.out.find("version=0.1.0") != std::string::npos);
  CHECK(res.out.find("classical_bound=2.3660254037844384") != std::string::npos);
  CHECK(res.out.find("violations=0") != std::string::npos);
}

TEST_CASE("convert verifies the answer table and stores the result") {
  Rng rng(505);
  const auto p = random_instances::random_ebit_protocol(
      random_instances::StateKind::MaxEntangled, 2, 2, 2, rng);
  const std::string in_path = write_json("convert_in.json", serialization::protocol_to_json(p));
  const std::string out_path = (tmp_dir() / "convert_report.json").string();

  cli::RunConfig cfg;
  cfg.command = "convert";
  cfg.inputs = {in_path};
  cfg.out = out_path;
  const CliResult res = run_cli(cfg);
  CHECK(res.rc == 0);
  const json report = serialization::read_json_file(out_path);
  CHECK(report.at("source_kind") == "ebit");
  CHECK(report.at("target_kind") == "hyperbit");
  CHECK(report.at("table").size() == 4);
  CHECK(report.at("max_residual").get<double>() <= kRoundTripTol);

  const json stored = serialization::read_json_file(out_path + ".protocol.json");
  CHECK(stored.at("kind") == "hyperbit");
  CHECK_NOTHROW(serialization::protocol_from_json(stored));
}

TEST_CASE("convert reverses direct-measurement protocols too") {
  Rng rng(507);
  const auto h = random_instances::random_direct_hyperbit_protocol(2, 2, 3, rng);
  const std::string in_path = write_json("convert_hin.json", serialization::protocol_to_json(h));
  const std::string out_path = (tmp_dir() / "convert_hreport.json").string();

  cli::RunConfig cfg;
  cfg.command = "convert";
  cfg.inputs = {in_path};
  cfg.out = out_path;
  CHECK(run_cli(cfg).rc == 0);
  const json report = serialization::read_json_file(out_path);
  CHECK(report.at("source_kind") == "hyperbit");
  CHECK(serialization::read_json_file(out_path + ".protocol.json").at("kind") == "ebit");
}

TEST_CASE("an infeasible conversion exits with status 3 and no files") {
  qsim::CMatrix rho = qsim::CMatrix::Zero(4, 4);
  rho(0, 0) = qsim::Complex(0.8, 0);
  rho(1, 1) = qsim::Complex(0.2, 0);
  qsim::CMatrix sz = qsim::CMatrix::Zero(2, 2);
  sz(0, 0) = qsim::Complex(1, 0);
  sz(1, 1) = qsim::Complex(-1, 0);
  const qsim::Observable obs{sz};
  const protocols::EBitProtocol p(qsim::DensityMatrix(std::move(rho)), 2, 2, {obs}, {{obs, obs}});

  const std::string in_path = write_json("convert_bad.json", serialization::protocol_to_json(p));
  const std::string out_path = (tmp_dir() / "convert_bad_report.json").string();
  fs::remove(out_path);
  fs::remove(out_path + ".protocol.json");

  cli::RunConfig cfg;
  cfg.command = "convert";
  cfg.inputs = {in_path};
  cfg.out = out_path;
  const CliResult res = run_cli(cfg);
  CHECK(res.rc == 3);
  CHECK(res.err.find("postprocessing infeasible") != std::string::npos);
  CHECK(!fs::exists(out_path));
  CHECK(!fs::exists(out_path + ".protocol.json"));
}

TEST_CASE("convert demands exactly one input and an output path") {
  cli::RunConfig cfg;
  cfg.command = "convert";
  CHECK(run_cli(cfg).rc == 2);  // no input
  cfg.inputs = {(tmp_dir() / "absent.json").string()};
  CHECK(run_cli(cfg).rc == 2);  // no --out
  cfg.out = (tmp_dir() / "x.json").string();
  cfg.trials = 3;
  CHECK(run_cli(cfg).rc == 2);  // no sweep mode
}

TEST_CASE("unknown formats and commands are rejected before any work") {
  cli::RunConfig cfg;
  cfg.command = "identity";
  cfg.trials = 1;
  cfg.format = "yaml";
  cfg.out = (tmp_dir() / "never.json").string();
  fs::remove(cfg.out);
  CHECK(run_cli(cfg).rc == 2);
  CHECK(!fs::exists(cfg.out));

  cli::RunConfig bogus;
  bogus.command = "frobnicate";
  CHECK(run_cli(bogus).rc == 2);
}

TEST_CASE("equal configurations produce byte-identical reports") {
  cli::RunConfig cfg;
  cfg.command = "identity";
  cfg.trials = 8;
  cfg.seed = 99;
  cfg.n = 2;
  cfg.dim = 4;
  CHECK(run_cli(cfg).out == run_cli(cfg).out);

  cfg.command = "ic";
  cfg.format = "csv";
  CHECK(run_cli(cfg).out == run_cli(cfg).out);

  cli::RunConfig k1;
  k1.command = "koenig";
  k1.trials = 6;
  k1.seed = 31;
  k1.format = "csv";
  k1.out = (tmp_dir() / "det_a.csv").string();
  cli::RunConfig k2 = k1;
  k2.out = (tmp_dir() / "det_b.csv").string();
  CHECK(run_cli(k1).rc == 0);
  CHECK(run_cli(k2).rc == 0);
  CHECK(slurp(k1.out) == slurp(k2.out));
}

TEST_CASE("the argv front end drives the same engine") {
  const std::string out_path = (tmp_dir() / "entry.csv").string();
  const char* argv[] = {"hyperbit-lab", "koenig",   "--trials", "2",      "--seed", "5",
                        "--format",     "csv",      "--out",    out_path.c_str()};
  CHECK(cli::main_entry(10, argv) == 0);
  CHECK(slurp(out_path).rfind("# seed=5", 0) == 0);

  const char* bad[] = {"hyperbit-lab", "frobnicate"};
  CHECK(cli::main_entry(2, bad) == 2);
}
