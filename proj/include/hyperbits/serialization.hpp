#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "hyperbits/hyperball.hpp"
#include "hyperbits/protocols.hpp"
#include "hyperbits/qsim.hpp"
#include "hyperbits/queries.hpp"
#include "hyperbits/tsirelson.hpp"

// JSON exchange formats. Matrices are {"rows", "cols", "re", "im"} with
// row-major flat arrays; hyperbits and measurements are {"coords": [...]};
// protocols carry a "kind" discriminator ("ebit" | "hyperbit") with banks
// keyed by decimal input label and message branches keyed "-1" / "+1".
// Loaders re-run every constructor-level invariant, so a file that parses
// but violates a contract still fails loudly.

namespace hyperbits::serialization {

using nlohmann::json;

using Protocol = std::variant<protocols::EBitProtocol, protocols::HyperbitProtocol>;

json matrix_to_json(const qsim::CMatrix& m);
qsim::CMatrix matrix_from_json(const json& j);

json vector_to_json(const Eigen::VectorXd& v);
Eigen::VectorXd vector_from_json(const json& j);

json hyperbit_to_json(const hyperball::HyperbitState& s);
hyperball::HyperbitState hyperbit_from_json(const json& j);

json measurement_to_json(const hyperball::MeasurementVector& m);
hyperball::MeasurementVector measurement_from_json(const json& j);

json vector_strategy_to_json(const tsirelson::VectorStrategy& vs);
tsirelson::VectorStrategy vector_strategy_from_json(const json& j);

json query_matrix_to_json(const queries::QueryMatrix& f);
queries::QueryMatrix query_matrix_from_json(const json& j);

json encoding_to_json(const queries::EncodingScheme& enc);
queries::EncodingScheme encoding_from_json(const json& j);

json protocol_to_json(const protocols::EBitProtocol& p);
json protocol_to_json(const protocols::HyperbitProtocol& h);
Protocol protocol_from_json(const json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hyperbits::serialization
