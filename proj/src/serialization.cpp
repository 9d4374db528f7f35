#include "hyperbits/serialization.hpp"

#include <fstream>
#include <stdexcept>
#include <utility>

#include "hyperbits/constants.hpp"
#include "hyperbits/errors.hpp"

namespace hyperbits::serialization {

json matrix_to_json(const qsim::CMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re.push_back(m(i, j).real());
      im.push_back(m(i, j).imag());
    }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

qsim::CMatrix matrix_from_json(const json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  if (rows < 0 || cols < 0 || rows > kMaxTotalDim || cols > kMaxTotalDim)
    throw ResourceLimitError("matrix: dimensions outside [0, " + std::to_string(kMaxTotalDim) +
                             "]");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (re.size() != static_cast<std::size_t>(rows * cols) || im.size() != re.size())
    throw std::invalid_argument("matrix: re/im length must equal rows * cols");
  qsim::CMatrix m(rows, cols);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index c = 0; c < cols; ++c, ++k)
      m(i, c) = qsim::Complex(re.at(k).get<double>(), im.at(k).get<double>());
  return m;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Eigen::VectorXd vector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector: expected an array of numbers");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = j.at(i).get<double>();
  return v;
}

json hyperbit_to_json(const hyperball::HyperbitState& s) {
  return json{{"coords", vector_to_json(s.coords())}};
}

hyperball::HyperbitState hyperbit_from_json(const json& j) {
  return hyperball::HyperbitState(vector_from_json(j.at("coords")));
}

json measurement_to_json(const hyperball::MeasurementVector& m) {
  return json{{"coords", vector_to_json(m.coords())}};
}

hyperball::MeasurementVector measurement_from_json(const json& j) {
  return hyperball::MeasurementVector(vector_from_json(j.at("coords")));
}

json vector_strategy_to_json(const tsirelson::VectorStrategy& vs) {
  json xs = json::array();
  json ys = json::array();
  for (const auto& x : vs.xs) xs.push_back(vector_to_json(x));
  for (const auto& y : vs.ys) ys.push_back(vector_to_json(y));
  return json{{"xs", std::move(xs)}, {"ys", std::move(ys)}};
}

tsirelson::VectorStrategy vector_strategy_from_json(const json& j) {
  std::vector<Eigen::VectorXd> xs;
  std::vector<Eigen::VectorXd> ys;
  for (const auto& x : j.at("xs")) xs.push_back(vector_from_json(x));
  for (const auto& y : j.at("ys")) ys.push_back(vector_from_json(y));
  return tsirelson::VectorStrategy(std::move(xs), std::move(ys));
}

json query_matrix_to_json(const queries::QueryMatrix& f) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < f.size(); ++j) row.push_back(f.entry(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"n", f.n()}, {"rows", std::move(rows)}};
}

queries::QueryMatrix query_matrix_from_json(const json& j) {
  const auto n = j.at("n").get<int>();
  const auto& rows = j.at("rows");
  if (n < 0 || n > kMaxHadamardN)
    throw ResourceLimitError("query matrix: n outside [0, " + std::to_string(kMaxHadamardN) + "]");
  const Eigen::Index s = Eigen::Index(1) << n;
  if (rows.size() != static_cast<std::size_t>(s))
    throw std::invalid_argument("query matrix: row count must be 2^n");
  Eigen::MatrixXi f(s, s);
  for (Eigen::Index i = 0; i < s; ++i) {
    const auto& row = rows.at(static_cast<std::size_t>(i));
    if (row.size() != static_cast<std::size_t>(s))
      throw std::invalid_argument("query matrix: row length must be 2^n");
    for (Eigen::Index c = 0; c < s; ++c) f(i, c) = row.at(static_cast<std::size_t>(c)).get<int>();
  }
  return queries::QueryMatrix(std::move(f));
}

json encoding_to_json(const queries::EncodingScheme& enc) {
  json priors = json::array();
  json hyperbits = json::array();
  for (double p : enc.priors()) priors.push_back(p);
  for (const auto& h : enc.hyperbits()) hyperbits.push_back(vector_to_json(h.coords()));
  return json{{"priors", std::move(priors)}, {"hyperbits", std::move(hyperbits)}};
}

queries::EncodingScheme encoding_from_json(const json& j) {
  std::vector<double> priors;
  for (const auto& p : j.at("priors")) priors.push_back(p.get<double>());
  std::vector<hyperball::HyperbitState> hyperbits;
  for (const auto& h : j.at("hyperbits")) hyperbits.emplace_back(vector_from_json(h));
  return queries::EncodingScheme(std::move(priors), std::move(hyperbits));
}

json protocol_to_json(const protocols::EBitProtocol& p) {
  json alice = json::object();
  json bob = json::object();
  for (std::size_t a = 0; a < p.inputs_a(); ++a)
    alice[std::to_string(a)] = matrix_to_json(p.alice[a].matrix());
  for (std::size_t b = 0; b < p.inputs_b(); ++b)
    bob[std::to_string(b)] = json{{"-1", matrix_to_json(p.bob[b][0].matrix())},
                                  {"+1", matrix_to_json(p.bob[b][1].matrix())}};
  return json{{"kind", "ebit"},      {"dim_a", p.dim_a},
              {"dim_b", p.dim_b},    {"rho", matrix_to_json(p.rho.matrix())},
              {"alice", std::move(alice)}, {"bob", std::move(bob)}};
}

json protocol_to_json(const protocols::HyperbitProtocol& h) {
  json encode = json::object();
  json bob = json::object();
  for (std::size_t a = 0; a < h.inputs_a(); ++a)
    encode[std::to_string(a)] = vector_to_json(h.encode[a].coords());
  for (std::size_t b = 0; b < h.inputs_b(); ++b) {
    auto action = [](const protocols::BobAction& act) {
      return json{{"meas", vector_to_json(act.meas.coords())}, {"c", act.c}, {"q", act.flip_prob}};
    };
    bob[std::to_string(b)] = json{{"-1", action(h.bob[b][0])}, {"+1", action(h.bob[b][1])}};
  }
  return json{{"kind", "hyperbit"}, {"encode", std::move(encode)}, {"bob", std::move(bob)}};
}

Protocol protocol_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "ebit") {
    const auto dim_a = j.at("dim_a").get<Eigen::Index>();
    const auto dim_b = j.at("dim_b").get<Eigen::Index>();
    qsim::DensityMatrix rho(matrix_from_json(j.at("rho")));
    const json& ja = j.at("alice");
    const json& jb = j.at("bob");
    std::vector<qsim::Observable> alice;
    alice.reserve(ja.size());
    for (std::size_t a = 0; a < ja.size(); ++a)
      alice.emplace_back(matrix_from_json(ja.at(std::to_string(a))));
    std::vector<std::array<qsim::Observable, 2>> bob;
    bob.reserve(jb.size());
    for (std::size_t b = 0; b < jb.size(); ++b) {
      const json& pair = jb.at(std::to_string(b));
      bob.push_back({qsim::Observable(matrix_from_json(pair.at("-1"))),
                     qsim::Observable(matrix_from_json(pair.at("+1")))});
    }
    return protocols::EBitProtocol(std::move(rho), dim_a, dim_b, std::move(alice),
                                   std::move(bob));
  }
  if (kind == "hyperbit") {
    const json& je = j.at("encode");
    const json& jb = j.at("bob");
    std::vector<hyperball::HyperbitState> encode;
    encode.reserve(je.size());
    for (std::size_t a = 0; a < je.size(); ++a)
      encode.emplace_back(vector_from_json(je.at(std::to_string(a))));
    std::vector<std::array<protocols::BobAction, 2>> bob;
    bob.reserve(jb.size());
    auto action = [](const json& r) {
      return protocols::BobAction(hyperball::MeasurementVector(vector_from_json(r.at("meas"))),
                                  r.at("c").get<double>(), r.at("q").get<double>());
    };
    for (std::size_t b = 0; b < jb.size(); ++b) {
      const json& pair = jb.at(std::to_string(b));
      bob.push_back({action(pair.at("-1")), action(pair.at("+1"))});
    }
    return protocols::HyperbitProtocol(std::move(encode), std::move(bob));
  }
  throw std::invalid_argument("protocol: unknown kind \"" + kind + "\"");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return json::parse(in);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out.good()) throw std::runtime_error("failed writing " + path);
}

}  // namespace hyperbits::serialization
