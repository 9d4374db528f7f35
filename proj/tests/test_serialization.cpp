#include <Eigen/Dense>
#include <filesystem>
#include <stdexcept>
#include <variant>
#include <vector>

#include "doctest.h"

#include "hyperbits/constants.hpp"
#include "hyperbits/errors.hpp"
#include "hyperbits/protocols.hpp"
#include "hyperbits/random_instances.hpp"
#include "hyperbits/rng.hpp"
#include "hyperbits/serialization.hpp"

using namespace hyperbits;
using nlohmann::json;
using serialization::protocol_from_json;
using serialization::protocol_to_json;

namespace {

double matrix_gap(const qsim::CMatrix& a, const qsim::CMatrix& b) {
  REQUIRE(a.rows() == b.rows());
  REQUIRE(a.cols() == b.cols());
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("matrices survive the byte round trip exactly") {
  Rng rng(211);
  const qsim::CMatrix m = random_instances::random_ginibre(3, rng);
  const json j = serialization::matrix_to_json(m);
  CHECK(matrix_gap(serialization::matrix_from_json(j), m) == 0.0);
  CHECK(matrix_gap(serialization::matrix_from_json(json::parse(j.dump())), m) == 0.0);
}

TEST_CASE("matrix_from_json validates shape and caps") {
  json j = serialization::matrix_to_json(qsim::CMatrix::Identity(2, 2));
  j["re"].erase(3);
  CHECK_THROWS_AS(serialization::matrix_from_json(j), std::invalid_argument);

  json big{{"rows", 5000}, {"cols", 5000}, {"re", json::array()}, {"im", json::array()}};
  CHECK_THROWS_AS(serialization::matrix_from_json(big), ResourceLimitError);

  json missing{{"rows", 2}, {"cols", 2}, {"re", {1.0, 0.0, 0.0, 1.0}}};
  CHECK_THROWS_AS(serialization::matrix_from_json(missing), json::exception);
}

TEST_CASE("states, measurements and strategies round trip") {
  Rng rng(223);
  const hyperball::HyperbitState s(random_instances::random_ball_vector(4, rng));
  const auto s2 = serialization::hyperbit_from_json(serialization::hyperbit_to_json(s));
  CHECK((s2.coords() - s.coords()).cwiseAbs().maxCoeff() == 0.0);

  const hyperball::MeasurementVector m(random_instances::random_unit_vector(4, rng));
  const auto m2 = serialization::measurement_from_json(serialization::measurement_to_json(m));
  CHECK((m2.coords() - m.coords()).cwiseAbs().maxCoeff() == 0.0);

  const auto vs = random_instances::random_vector_strategy(2, 3, 3, rng);
  const auto vs2 =
      serialization::vector_strategy_from_json(serialization::vector_strategy_to_json(vs));
  REQUIRE(vs2.xs.size() == vs.xs.size());
  REQUIRE(vs2.ys.size() == vs.ys.size());
  for (std::size_t k = 0; k < vs.xs.size(); ++k)
    CHECK((vs2.xs[k] - vs.xs[k]).cwiseAbs().maxCoeff() == 0.0);
  for (std::size_t k = 0; k < vs.ys.size(); ++k)
    CHECK((vs2.ys[k] - vs.ys[k]).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("loaded states re-run their invariants") {
  json loud{{"coords", {2.0, 0.0}}};
  CHECK_THROWS_AS(serialization::hyperbit_from_json(loud), std::invalid_argument);
  CHECK_THROWS_AS(serialization::measurement_from_json(loud), std::invalid_argument);
  json nonsense{{"coords", "not numbers"}};
  CHECK_THROWS_AS(serialization::hyperbit_from_json(nonsense), std::invalid_argument);
}

TEST_CASE("query matrices and encodings round trip with validation") {
  const auto f = queries::QueryMatrix::hadamard(2);
  const auto f2 = serialization::query_matrix_from_json(serialization::query_matrix_to_json(f));
  CHECK(f2.entries() == f.entries());

  json bad = serialization::query_matrix_to_json(f);
  bad["rows"][0][1] = -1;  // breaks orthogonality
  CHECK_THROWS_AS(serialization::query_matrix_from_json(bad), std::invalid_argument);
  bad = serialization::query_matrix_to_json(f);
  bad["n"] = 12;
  CHECK_THROWS_AS(serialization::query_matrix_from_json(bad), ResourceLimitError);

  Rng rng(227);
  const auto enc = random_instances::random_encoding(4, 3, false, false, rng);
  const auto enc2 = serialization::encoding_from_json(serialization::encoding_to_json(enc));
  REQUIRE(enc2.size() == enc.size());
  for (std::size_t j = 0; j < enc.size(); ++j) {
    CHECK(enc2.priors()[j] == enc.priors()[j]);
    CHECK((enc2.hyperbits()[j].coords() - enc.hyperbits()[j].coords()).cwiseAbs().maxCoeff() ==
          0.0);
  }

  json skewed = serialization::encoding_to_json(enc);
  skewed["priors"][0] = 0.9;
  CHECK_THROWS_AS(serialization::encoding_from_json(skewed), std::invalid_argument);
}

TEST_CASE("entangled-model protocols round trip") {
  Rng rng(229);
  const auto p = random_instances::random_ebit_protocol(random_instances::StateKind::Ginibre, 2,
                                                        2, 2, rng);
  const json j = protocol_to_json(p);
  const auto back = protocol_from_json(json::parse(j.dump()));
  REQUIRE(std::holds_alternative<protocols::EBitProtocol>(back));
  const auto& p2 = std::get<protocols::EBitProtocol>(back);
  CHECK(p2.dim_a == p.dim_a);
  CHECK(p2.dim_b == p.dim_b);
  CHECK(matrix_gap(p2.rho.matrix(), p.rho.matrix()) == 0.0);
  REQUIRE(p2.inputs_a() == p.inputs_a());
  REQUIRE(p2.inputs_b() == p.inputs_b());
  for (std::size_t a = 0; a < p.inputs_a(); ++a)
    CHECK(matrix_gap(p2.alice[a].matrix(), p.alice[a].matrix()) == 0.0);
  for (std::size_t b = 0; b < p.inputs_b(); ++b)
    for (int ai = 0; ai < 2; ++ai)
      CHECK(matrix_gap(p2.bob[b][static_cast<std::size_t>(ai)].matrix(),
                       p.bob[b][static_cast<std::size_t>(ai)].matrix()) == 0.0);
}

TEST_CASE("direct-measurement protocols round trip") {
  Rng rng(233);
  const auto h = random_instances::random_direct_hyperbit_protocol(3, 2, 3, rng);
  const auto back = protocol_from_json(json::parse(protocol_to_json(h).dump()));
  REQUIRE(std::holds_alternative<protocols::HyperbitProtocol>(back));
  const auto& h2 = std::get<protocols::HyperbitProtocol>(back);
  REQUIRE(h2.inputs_a() == h.inputs_a());
  REQUIRE(h2.inputs_b() == h.inputs_b());
  for (std::size_t a = 0; a < h.inputs_a(); ++a)
    CHECK((h2.encode[a].coords() - h.encode[a].coords()).cwiseAbs().maxCoeff() == 0.0);
  for (std::size_t b = 0; b < h.inputs_b(); ++b)
    for (int ai = 0; ai < 2; ++ai) {
      const auto& x = h.bob[b][static_cast<std::size_t>(ai)];
      const auto& y = h2.bob[b][static_cast<std::size_t>(ai)];
      CHECK((y.meas.coords() - x.meas.coords()).cwiseAbs().maxCoeff() == 0.0);
      CHECK(y.c == x.c);
      CHECK(y.flip_prob == x.flip_prob);
    }
}

TEST_CASE("protocol_from_json rejects unknown kinds and missing pieces") {
  CHECK_THROWS_AS(protocol_from_json(json{{"kind", "telepathy"}}), std::invalid_argument);
  CHECK_THROWS_AS(protocol_from_json(json{{"encode", json::object()}}), json::exception);

  Rng rng(239);
  json j = protocol_to_json(
      random_instances::random_ebit_protocol(random_instances::StateKind::Ginibre, 2, 1, 2, rng));
  json gutted = j;
  gutted["bob"].erase("0");
  gutted["bob"].erase("1");
  CHECK_THROWS_AS(protocol_from_json(gutted), std::invalid_argument);
  j["bob"].erase("0");
  CHECK_THROWS_AS(protocol_from_json(j), json::exception);
}

TEST_CASE("file helpers fail loudly") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::path("serialization_tmp");
  fs::create_directories(dir);

  const std::string path = (dir / "roundtrip.json").string();
  serialization::write_text_file(path, json{{"kind", "hyperbit"}}.dump());
  CHECK(serialization::read_json_file(path).at("kind") == "hyperbit");

  CHECK_THROWS_AS(serialization::read_json_file((dir / "absent.json").string()),
                  std::invalid_argument);
  CHECK_THROWS_AS(serialization::write_text_file((dir / "no" / "such" / "dir.json").string(), "x"),
                  std::runtime_error);

  serialization::write_text_file(path, "{ not json");
  CHECK_THROWS_AS(serialization::read_json_file(path), json::exception);
}
