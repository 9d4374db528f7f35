#include "hyperbits/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperbits/errors.hpp"
#include "hyperbits/infocausality.hpp"
#include "hyperbits/protocols.hpp"
#include "hyperbits/queries.hpp"
#include "hyperbits/random_instances.hpp"
#include "hyperbits/rng.hpp"
#include "hyperbits/serialization.hpp"

namespace hyperbits::cli {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Csv {
  std::string text;

  void comment(const std::string& s) { text += "# " + s + "\n"; }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text += ",";
      text += cells[i];
    }
    text += "\n";
  }
};

Csv make_csv(const RunConfig& cfg) {
  Csv csv;
  csv.comment("seed=" + std::to_string(cfg.seed) + " tol=" + fmt(cfg.tol) +
              " version=" + kVersion);
  return csv;
}

json make_report(const RunConfig& cfg) {
  return json{{"command", cfg.command},
              {"version", kVersion},
              {"seed", cfg.seed},
              {"tol", cfg.tol}};
}

void emit(const RunConfig& cfg, std::ostream& out_stream, const json& report, const Csv& csv) {
  if (cfg.format != "json" && cfg.format != "csv")
    throw std::invalid_argument("unknown format \"" + cfg.format + "\"");
  const std::string text = cfg.format == "csv" ? csv.text : report.dump(2) + "\n";
  if (cfg.out.empty())
    out_stream << text;
  else
    serialization::write_text_file(cfg.out, text);
}

int cmd_identity(const RunConfig& cfg, std::ostream& out_stream) {
  json report = make_report(cfg);
  Csv csv = make_csv(cfg);

  if (cfg.trials > 0) {
    const auto f = queries::QueryMatrix::hadamard(cfg.n);
    Rng rng(cfg.seed);
    json results = json::array();
    csv.row({"trial", "lhs", "rhs", "residual"});
    double max_residual = 0.0;
    for (long t = 0; t < cfg.trials; ++t) {
      const auto enc = random_instances::random_encoding(static_cast<std::size_t>(f.size()),
                                                         cfg.dim, false, false, rng);
      const queries::BiasReport rep = queries::biases(f, enc);
      const double residual = std::abs(rep.lhs - rep.rhs);
      max_residual = std::max(max_residual, residual);
      results.push_back(
          json{{"trial", t}, {"lhs", rep.lhs}, {"rhs", rep.rhs}, {"residual", residual}});
      csv.row({std::to_string(t), fmt(rep.lhs), fmt(rep.rhs), fmt(residual)});
    }
    report["mode"] = "sweep";
    report["trials"] = cfg.trials;
    report["n"] = cfg.n;
    report["dim"] = cfg.dim;
    report["results"] = std::move(results);
    report["max_residual"] = max_residual;
    csv.comment("max_residual=" + fmt(max_residual));
    emit(cfg, out_stream, report, csv);
    return max_residual > cfg.tol ? 1 : 0;
  }

  if (cfg.inputs.size() != 2)
    throw std::invalid_argument("identity: need a query-matrix file and an encoding file");
  const auto f =
      serialization::query_matrix_from_json(serialization::read_json_file(cfg.inputs[0]));
  const auto enc = serialization::encoding_from_json(serialization::read_json_file(cfg.inputs[1]));
  const queries::BiasReport rep = queries::biases(f, enc);
  const double residual = std::abs(rep.lhs - rep.rhs);

  json rows = json::array();
  csv.row({"query", "bias", "bias_sq", "degenerate"});
  for (std::size_t i = 0; i < rep.biases.size(); ++i) {
    const double e = rep.biases[i];
    rows.push_back(json{{"query", i},
                        {"bias", e},
                        {"bias_sq", e * e},
                        {"degenerate", static_cast<bool>(rep.degenerate[i])}});
    csv.row({std::to_string(i), fmt(e), fmt(e * e), rep.degenerate[i] ? "1" : "0"});
  }
  report["mode"] = "file";
  report["n"] = f.n();
  report["queries"] = std::move(rows);
  report["lhs"] = rep.lhs;
  report["rhs"] = rep.rhs;
  report["residual"] = residual;
  csv.comment("lhs=" + fmt(rep.lhs));
  csv.comment("rhs=" + fmt(rep.rhs));
  csv.comment("residual=" + fmt(residual));
  emit(cfg, out_stream, report, csv);
  return residual > cfg.tol ? 1 : 0;
}

int cmd_ic(const RunConfig& cfg, std::ostream& out_stream) {
  json report = make_report(cfg);
  Csv csv = make_csv(cfg);

  if (cfg.trials > 0) {
    auto f = queries::QueryMatrix::hadamard(cfg.n);
    std::vector<std::size_t> rows;
    for (Eigen::Index r = 1; r < f.size(); ++r) rows.push_back(static_cast<std::size_t>(r));
    const infocausality::BitEnsemble ens(std::move(f), std::move(rows));
    Rng rng(cfg.seed);
    json results = json::array();
    csv.row({"trial", "mi_sum", "bound_sum"});
    double max_mi_sum = 0.0;
    double max_bound_sum = 0.0;
    long violations = 0;
    for (long t = 0; t < cfg.trials; ++t) {
      const auto enc = random_instances::random_encoding(
          static_cast<std::size_t>(ens.matrix().size()), cfg.dim, true, true, rng);
      const auto meas = infocausality::optimal_measurements(ens, enc);
      const infocausality::ICReport rep = infocausality::ic_audit(ens, enc, meas);
      max_mi_sum = std::max(max_mi_sum, rep.mi_sum);
      max_bound_sum = std::max(max_bound_sum, rep.bound_sum);
      if (rep.mi_sum > 1.0 + cfg.tol || rep.bound_sum > 1.0 + cfg.tol ||
          rep.mi_sum > rep.bound_sum + cfg.tol)
        ++violations;
      results.push_back(
          json{{"trial", t}, {"mi_sum", rep.mi_sum}, {"bound_sum", rep.bound_sum}});
      csv.row({std::to_string(t), fmt(rep.mi_sum), fmt(rep.bound_sum)});
    }
    report["mode"] = "sweep";
    report["trials"] = cfg.trials;
    report["n"] = cfg.n;
    report["dim"] = cfg.dim;
    report["results"] = std::move(results);
    report["max_mi_sum"] = max_mi_sum;
    report["max_bound_sum"] = max_bound_sum;
    report["violations"] = violations;
    csv.comment("max_mi_sum=" + fmt(max_mi_sum));
    csv.comment("max_bound_sum=" + fmt(max_bound_sum));
    csv.comment("violations=" + std::to_string(violations));
    emit(cfg, out_stream, report, csv);
    return violations > 0 ? 1 : 0;
  }

  if (cfg.inputs.size() != 2)
    throw std::invalid_argument("ic: need a query-matrix file and an encoding file");
  auto f = serialization::query_matrix_from_json(serialization::read_json_file(cfg.inputs[0]));
  const auto enc = serialization::encoding_from_json(serialization::read_json_file(cfg.inputs[1]));
  std::vector<std::size_t> rows = cfg.rows;
  if (rows.empty())
    for (Eigen::Index r = 1; r < f.size(); ++r) rows.push_back(static_cast<std::size_t>(r));
  const infocausality::BitEnsemble ens(std::move(f), std::move(rows));
  const auto meas = infocausality::optimal_measurements(ens, enc);
  const infocausality::ICReport rep = infocausality::ic_audit(ens, enc, meas);

  json bits = json::array();
  csv.row({"row", "mi", "bound"});
  for (std::size_t k = 0; k < rep.mi.size(); ++k) {
    bits.push_back(
        json{{"row", ens.rows()[k]}, {"mi", rep.mi[k]}, {"bound", rep.bound_terms[k]}});
    csv.row({std::to_string(ens.rows()[k]), fmt(rep.mi[k]), fmt(rep.bound_terms[k])});
  }
  report["mode"] = "file";
  report["bits"] = std::move(bits);
  report["mi_sum"] = rep.mi_sum;
  report["bound_sum"] = rep.bound_sum;
  report["ic_ok"] = rep.ic_ok;
  report["dominance_ok"] = rep.dominance_ok;
  report["bound_ok"] = rep.bound_ok;
  csv.comment("mi_sum=" + fmt(rep.mi_sum));
  csv.comment("bound_sum=" + fmt(rep.bound_sum));
  emit(cfg, out_stream, report, csv);
  const bool finding = rep.mi_sum > 1.0 + cfg.tol || rep.bound_sum > 1.0 + cfg.tol ||
                       rep.mi_sum > rep.bound_sum + cfg.tol;
  return finding ? 1 : 0;
}

int cmd_koenig(const RunConfig& cfg, std::ostream& out_stream) {
  json report = make_report(cfg);
  Csv csv = make_csv(cfg);
  static const char* const kBitNames[3] = {"a0", "a1", "a0^a1"};

  if (cfg.trials > 0) {
    Rng rng(cfg.seed);
    json results = json::array();
    csv.row({"trial", "p_sum", "e_sq_sum"});
    double max_p_sum = 0.0;
    double max_e_sq_sum = 0.0;
    long violations = 0;
    for (long t = 0; t < cfg.trials; ++t) {
      const auto enc = random_instances::random_encoding(4, cfg.dim, true, true, rng);
      const queries::KoenigReport rep = queries::koenig_compare(enc);
      max_p_sum = std::max(max_p_sum, rep.p_sum);
      max_e_sq_sum = std::max(max_e_sq_sum, rep.e_sq_sum);
      if (rep.e_sq_sum > 1.0 + cfg.tol) ++violations;
      results.push_back(json{{"trial", t}, {"p_sum", rep.p_sum}, {"e_sq_sum", rep.e_sq_sum}});
      csv.row({std::to_string(t), fmt(rep.p_sum), fmt(rep.e_sq_sum)});
    }
    report["mode"] = "sweep";
    report["trials"] = cfg.trials;
    report["dim"] = cfg.dim;
    report["results"] = std::move(results);
    report["classical_bound"] = 1.5 * (1.0 + 1.0 / std::sqrt(3.0));
    report["max_p_sum"] = max_p_sum;
    report["max_e_sq_sum"] = max_e_sq_sum;
    report["violations"] = violations;
    csv.comment("classical_bound=" + fmt(1.5 * (1.0 + 1.0 / std::sqrt(3.0))));
    csv.comment("max_p_sum=" + fmt(max_p_sum));
    csv.comment("max_e_sq_sum=" + fmt(max_e_sq_sum));
    csv.comment("violations=" + std::to_string(violations));
    emit(cfg, out_stream, report, csv);
    return violations > 0 ? 1 : 0;
  }

  if (cfg.inputs.size() != 1) throw std::invalid_argument("koenig: need an encoding file");
  const auto enc = serialization::encoding_from_json(serialization::read_json_file(cfg.inputs[0]));
  const queries::KoenigReport rep = queries::koenig_compare(enc);

  json bits = json::array();
  csv.row({"bit", "bias", "bias_sq"});
  for (int k = 0; k < 3; ++k) {
    const double e = rep.biases[static_cast<std::size_t>(k)];
    bits.push_back(json{{"bit", kBitNames[k]}, {"bias", e}, {"bias_sq", e * e}});
    csv.row({kBitNames[k], fmt(e), fmt(e * e)});
  }
  report["mode"] = "file";
  report["bits"] = std::move(bits);
  report["p_sum"] = rep.p_sum;
  report["e_sq_sum"] = rep.e_sq_sum;
  report["classical_bound"] = rep.classical_bound;
  report["within_strengthened_bound"] = rep.within_strengthened_bound;
  csv.comment("p_sum=" + fmt(rep.p_sum));
  csv.comment("e_sq_sum=" + fmt(rep.e_sq_sum));
  csv.comment("classical_bound=" + fmt(rep.classical_bound));
  emit(cfg, out_stream, report, csv);
  return rep.e_sq_sum > 1.0 + cfg.tol ? 1 : 0;
}

int cmd_convert(const RunConfig& cfg, std::ostream& out_stream) {
  if (cfg.trials > 0) throw std::invalid_argument("convert: no sweep mode");
  if (cfg.inputs.size() != 1) throw std::invalid_argument("convert: need a protocol file");
  if (cfg.out.empty()) throw std::invalid_argument("convert: --out is required");

  const serialization::Protocol in =
      serialization::protocol_from_json(serialization::read_json_file(cfg.inputs[0]));

  json report = make_report(cfg);
  Csv csv = make_csv(cfg);
  json table = json::array();
  csv.row({"a", "b", "original", "converted", "residual"});
  double max_residual = 0.0;
  json converted_json;

  const auto tabulate = [&](std::size_t inputs_a, std::size_t inputs_b, auto&& original,
                            auto&& converted) {
    for (std::size_t a = 0; a < inputs_a; ++a)
      for (std::size_t b = 0; b < inputs_b; ++b) {
        const double orig = original(a, b);
        const double conv = converted(a, b);
        const double residual = std::abs(orig - conv);
        max_residual = std::max(max_residual, residual);
        table.push_back(json{
            {"a", a}, {"b", b}, {"original", orig}, {"converted", conv}, {"residual", residual}});
        csv.row({std::to_string(a), std::to_string(b), fmt(orig), fmt(conv), fmt(residual)});
      }
  };

  if (std::holds_alternative<protocols::EBitProtocol>(in)) {
    const auto& p = std::get<protocols::EBitProtocol>(in);
    const protocols::HyperbitProtocol h = protocols::ebit_to_hyperbit(p);
    tabulate(
        p.inputs_a(), p.inputs_b(),
        [&](std::size_t a, std::size_t b) { return protocols::eval_ebit(p, a, b); },
        [&](std::size_t a, std::size_t b) { return protocols::eval_hyperbit(h, a, b); });
    report["source_kind"] = "ebit";
    report["target_kind"] = "hyperbit";
    converted_json = serialization::protocol_to_json(h);
  } else {
    const auto& h = std::get<protocols::HyperbitProtocol>(in);
    const protocols::EBitProtocol p = protocols::hyperbit_to_ebit(h);
    tabulate(
        h.inputs_a(), h.inputs_b(),
        [&](std::size_t a, std::size_t b) { return protocols::eval_hyperbit(h, a, b); },
        [&](std::size_t a, std::size_t b) { return protocols::eval_ebit(p, a, b); });
    report["source_kind"] = "hyperbit";
    report["target_kind"] = "ebit";
    converted_json = serialization::protocol_to_json(p);
  }

  const std::string protocol_path = cfg.out + ".protocol.json";
  report["table"] = std::move(table);
  report["max_residual"] = max_residual;
  report["protocol_out"] = protocol_path;
  csv.comment("max_residual=" + fmt(max_residual));
  csv.comment("protocol_out=" + protocol_path);

  serialization::write_text_file(protocol_path, converted_json.dump(2) + "\n");
  emit(cfg, out_stream, report, csv);
  return max_residual > cfg.tol ? 1 : 0;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out_stream, std::ostream& err_stream) {
  try {
    if (cfg.format != "json" && cfg.format != "csv")
      throw std::invalid_argument("unknown format \"" + cfg.format + "\"");
    if (cfg.command == "convert") return cmd_convert(cfg, out_stream);
    if (cfg.command == "identity") return cmd_identity(cfg, out_stream);
    if (cfg.command == "ic") return cmd_ic(cfg, out_stream);
    if (cfg.command == "koenig") return cmd_koenig(cfg, out_stream);
    throw std::invalid_argument("unknown command \"" + cfg.command + "\"");
  } catch (const PostprocessingInfeasibleError& e) {
    err_stream << "error: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    err_stream << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err_stream << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err_stream << "error: " << e.what() << "\n";
    return 2;
  }
}

int main_entry(int argc, const char* const* argv) {
  CLI::App app{"hyperbit laboratory: protocol conversion, bias identities and information audits"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_common = [&cfg](CLI::App* sub, bool sweeps) {
    sub->add_option("inputs", cfg.inputs, "input files");
    sub->add_option("--seed", cfg.seed, "RNG seed recorded in every report");
    sub->add_option("--tol", cfg.tol, "finding threshold for residuals and bounds");
    sub->add_option("--format", cfg.format, "report format: json or csv");
    sub->add_option("--out", cfg.out, "report file (default: stdout)");
    if (sweeps) {
      sub->add_option("--trials", cfg.trials, "run a seeded random sweep of this many instances");
      sub->add_option("--dim", cfg.dim, "sweep hyperbit dimension");
    }
  };

  CLI::App* convert = app.add_subcommand(
      "convert", "convert a protocol to the other model and verify the answer table");
  add_common(convert, false);
  CLI::App* identity =
      app.add_subcommand("identity", "per-query biases and the squared-bias identity");
  add_common(identity, true);
  identity->add_option("--n", cfg.n, "sweep register exponent");
  CLI::App* ic =
      app.add_subcommand("ic", "mutual-information audit for pairwise independent bits");
  add_common(ic, true);
  ic->add_option("--n", cfg.n, "sweep register exponent");
  ic->add_option("--rows", cfg.rows, "audited row indices (file mode)");
  CLI::App* koenig = app.add_subcommand(
      "koenig", "two-bit guessing: success sum against the squared-bias budget");
  add_common(koenig, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return run(cfg, std::cout, std::cerr);
}

}  // namespace hyperbits::cli
