#include "hyperbits/protocols.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

#include "hyperbits/constants.hpp"
#include "hyperbits/errors.hpp"
#include "hyperbits/tsirelson.hpp"

namespace hyperbits::protocols {

namespace {

using qsim::CMatrix;
using qsim::Complex;

CMatrix coin_sz() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = Complex(1, 0);
  m(1, 1) = Complex(-1, 0);
  return m;
}

CMatrix coin_proj(int c) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(c, c) = Complex(1, 0);
  return m;
}

// deterministic unit vector orthogonal to the unit vector u (dim >= 2)
Eigen::VectorXd fixed_unit_perp(const Eigen::VectorXd& u) {
  Eigen::Index k = 0;
  u.cwiseAbs().minCoeff(&k);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(u.size());
  e(k) = 1.0;
  Eigen::VectorXd perp = e - e.dot(u) * u;
  return perp / perp.norm();
}

double clamp(double v, double lo, double hi) { return v < lo ? lo : (v > hi ? hi : v); }

}  // namespace

EBitProtocol::EBitProtocol(qsim::DensityMatrix rho_in, Eigen::Index dim_a_in,
                           Eigen::Index dim_b_in, std::vector<qsim::Observable> alice_in,
                           std::vector<std::array<qsim::Observable, 2>> bob_in)
    : rho(std::move(rho_in)),
      dim_a(dim_a_in),
      dim_b(dim_b_in),
      alice(std::move(alice_in)),
      bob(std::move(bob_in)) {
  if (dim_a < 1 || dim_b < 1 || rho.dim() != dim_a * dim_b)
    throw std::invalid_argument("EBitProtocol: rho must live on dim_a * dim_b");
  if (alice.empty() || bob.empty())
    throw std::invalid_argument("EBitProtocol: need at least one input per side");
  const CMatrix id = CMatrix::Identity(dim_a, dim_a);
  for (const auto& a : alice) {
    if (a.dim() != dim_a) throw std::invalid_argument("EBitProtocol: alice dimension mismatch");
    if ((a.matrix() * a.matrix() - id).cwiseAbs().maxCoeff() > kCrossTol)
      throw std::invalid_argument("EBitProtocol: alice observable is not projective (A^2 != 1)");
  }
  for (const auto& pair : bob)
    for (const auto& b : pair)
      if (b.dim() != dim_b) throw std::invalid_argument("EBitProtocol: bob dimension mismatch");
}

BobAction::BobAction(hyperball::MeasurementVector meas_in, double c_in, double flip_prob_in)
    : meas(std::move(meas_in)), c(c_in), flip_prob(flip_prob_in) {
  if (std::abs(c) > 1.0 + kTightTol)
    throw std::invalid_argument("BobAction: |c| must not exceed 1");
  if (flip_prob < -kTightTol || flip_prob > 1.0 + kTightTol)
    throw std::invalid_argument("BobAction: flip probability must lie in [0, 1]");
  c = clamp(c, -1.0, 1.0);
  flip_prob = clamp(flip_prob, 0.0, 1.0);
  discard_prob = std::abs(c);
  discard_output = c < 0.0 ? -1 : +1;
}

double BobAction::slope() const { return (1.0 - std::abs(c)) * (1.0 - 2.0 * flip_prob); }

HyperbitProtocol::HyperbitProtocol(std::vector<hyperball::HyperbitState> encode_in,
                                   std::vector<std::array<BobAction, 2>> bob_in)
    : encode(std::move(encode_in)), bob(std::move(bob_in)) {
  if (encode.empty() || bob.empty())
    throw std::invalid_argument("HyperbitProtocol: need at least one input per side");
}

double postprocess_expectation(const BobAction& action, double raw_expectation) {
  return action.c + action.slope() * raw_expectation;
}

double message_bias(const EBitProtocol& p, std::size_t a) {
  const CMatrix op = qsim::tensor(p.alice.at(a).matrix(), CMatrix::Identity(p.dim_b, p.dim_b));
  return qsim::real_trace_product(op, p.rho.matrix());
}

double eval_ebit(const EBitProtocol& p, std::size_t a, std::size_t b) {
  const CMatrix& alice = p.alice.at(a).matrix();
  const CMatrix id = CMatrix::Identity(p.dim_a, p.dim_a);
  double total = 0.0;
  for (int ai = 0; ai < 2; ++ai) {
    const double message = ai == 0 ? -1.0 : +1.0;
    const CMatrix proj = 0.5 * (id + message * alice);
    total += qsim::real_trace_product(qsim::tensor(proj, p.bob.at(b)[static_cast<std::size_t>(ai)].matrix()),
                                      p.rho.matrix());
  }
  return total;
}

double eval_hyperbit(const HyperbitProtocol& h, std::size_t a, std::size_t b) {
  const hyperball::HyperbitState& state = h.encode.at(a);
  double total = 0.0;
  for (int ai = 0; ai < 2; ++ai) {
    const double message = ai == 0 ? -1.0 : +1.0;
    const BobAction& action = h.bob.at(b)[static_cast<std::size_t>(ai)];
    const double raw = message * hyperball::expect(state, action.meas);
    total += 0.5 * postprocess_expectation(action, raw);
  }
  return total;
}

int sample_ebit(const EBitProtocol& p, std::size_t a, std::size_t b, Rng& rng) {
  const double p_plus = 0.5 * (1.0 + message_bias(p, a));
  const int message = rng.uniform01() < p_plus ? +1 : -1;
  const double p_message = message > 0 ? p_plus : 1.0 - p_plus;

  const CMatrix& alice = p.alice.at(a).matrix();
  const CMatrix id = CMatrix::Identity(p.dim_a, p.dim_a);
  const CMatrix proj = 0.5 * (id + static_cast<double>(message) * alice);
  const qsim::Observable& bob = p.bob.at(b)[static_cast<std::size_t>((message + 1) / 2)];
  const double joint = qsim::real_trace_product(qsim::tensor(proj, bob.matrix()), p.rho.matrix());
  const double answer_mean = p_message < 1e-15 ? 0.0 : joint / p_message;
  return rng.uniform01() < 0.5 * (1.0 + answer_mean) ? +1 : -1;
}

int sample_hyperbit(const HyperbitProtocol& h, std::size_t a, std::size_t b, Rng& rng) {
  const int coin = rng.pm1();
  const BobAction& action = h.bob.at(b)[static_cast<std::size_t>((coin + 1) / 2)];
  const hyperball::HyperbitState sent =
      coin < 0 ? hyperball::negated(h.encode.at(a)) : h.encode.at(a);
  const int raw = hyperball::sample(sent, action.meas, rng);
  if (rng.uniform01() < action.discard_prob) return action.discard_output;
  if (rng.uniform01() < action.flip_prob) return -raw;
  return raw;
}

EBitProtocol symmetrize(const EBitProtocol& p) {
  const Eigen::Index da = p.dim_a, db = p.dim_b;
  const Eigen::Index da2 = 2 * da, db2 = 2 * db;

  // state (x) correlated coin, reordered to (A, coin_A) x (B, coin_B)
  CMatrix rho2 = CMatrix::Zero(da2 * db2, da2 * db2);
  const CMatrix& rho = p.rho.matrix();
  for (int c = 0; c < 2; ++c)
    for (Eigen::Index ia = 0; ia < da; ++ia)
      for (Eigen::Index ib = 0; ib < db; ++ib)
        for (Eigen::Index ja = 0; ja < da; ++ja)
          for (Eigen::Index jb = 0; jb < db; ++jb)
            rho2((ia * 2 + c) * db2 + ib * 2 + c, (ja * 2 + c) * db2 + jb * 2 + c) +=
                0.5 * rho(ia * db + ib, ja * db + jb);

  const CMatrix sz = coin_sz(), p0 = coin_proj(0), p1 = coin_proj(1);
  std::vector<qsim::Observable> alice;
  alice.reserve(p.alice.size());
  for (const auto& a : p.alice) alice.emplace_back(qsim::tensor(a.matrix(), sz));

  std::vector<std::array<qsim::Observable, 2>> bob;
  bob.reserve(p.bob.size());
  for (const auto& pair : p.bob) {
    const CMatrix& bm = pair[0].matrix();  // A = -1
    const CMatrix& bp = pair[1].matrix();  // A = +1
    // coin c = 0 leaves the message alone, c = 1 negates it
    bob.push_back({qsim::Observable(qsim::tensor(bm, p0) + qsim::tensor(bp, p1)),
                   qsim::Observable(qsim::tensor(bp, p0) + qsim::tensor(bm, p1))});
  }
  return EBitProtocol(qsim::DensityMatrix(std::move(rho2)), da2, db2, std::move(alice),
                      std::move(bob));
}

HyperbitProtocol ebit_to_hyperbit(const EBitProtocol& p) {
  std::optional<EBitProtocol> symmetrized;
  const EBitProtocol* active = &p;
  for (std::size_t a = 0; a < p.inputs_a(); ++a)
    if (std::abs(message_bias(p, a)) > kTightTol) {
      symmetrized.emplace(symmetrize(p));
      active = &*symmetrized;
      break;
    }

  std::vector<qsim::Observable> flat_bob;
  flat_bob.reserve(active->inputs_b() * 2);
  for (const auto& pair : active->bob) {
    flat_bob.push_back(pair[0]);
    flat_bob.push_back(pair[1]);
  }
  const tsirelson::VectorStrategy vs = tsirelson::extract(tsirelson::QuantumStrategy(
      active->rho, active->dim_a, active->dim_b, active->alice, std::move(flat_bob)));

  const Eigen::VectorXd& y_id = vs.ys[0];
  std::vector<hyperball::HyperbitState> encode;
  encode.reserve(active->inputs_a());
  for (std::size_t a = 0; a < active->inputs_a(); ++a)
    encode.emplace_back(vs.xs[a + 1]);

  std::vector<std::array<BobAction, 2>> bob;
  bob.reserve(active->inputs_b());
  for (std::size_t b = 0; b < active->inputs_b(); ++b) {
    std::array<std::optional<BobAction>, 2> pair;
    for (int ai = 0; ai < 2; ++ai) {
      const Eigen::VectorXd& y = vs.ys[1 + 2 * b + static_cast<std::size_t>(ai)];
      const double c = clamp(y.dot(y_id), -1.0, 1.0);
      const Eigen::VectorXd y_perp = y - c * y_id;
      const double n = y_perp.norm();
      if (std::abs(c) >= 1.0 - kTightTol || n <= kTightTol) {
        // Bob's answer carries no signal beyond its mean: slope 0
        pair[static_cast<std::size_t>(ai)].emplace(
            hyperball::MeasurementVector(fixed_unit_perp(y_id)), c, 0.5);
        continue;
      }
      if (std::abs(c) + n > 1.0 + kCrossTol)
        throw PostprocessingInfeasibleError(b, ai == 0 ? -1 : +1, c, n);
      const double q = clamp(0.5 * (1.0 - n / (1.0 - std::abs(c))), 0.0, 1.0);
      pair[static_cast<std::size_t>(ai)].emplace(hyperball::MeasurementVector(y_perp / n), c, q);
    }
    bob.push_back({std::move(*pair[0]), std::move(*pair[1])});
  }
  return HyperbitProtocol(std::move(encode), std::move(bob));
}

EBitProtocol hyperbit_to_ebit(const HyperbitProtocol& h) {
  for (const auto& pair : h.bob)
    for (const auto& action : pair)
      if (std::abs(action.c) > kTightTol || action.flip_prob > kTightTol)
        throw std::invalid_argument(
            "hyperbit_to_ebit: only direct-measurement protocols (c = 0, q = 0) are supported");

  Eigen::Index d = 0;
  for (const auto& s : h.encode) d = std::max(d, s.dim());
  for (const auto& pair : h.bob)
    for (const auto& action : pair) d = std::max(d, action.meas.dim());

  bool need_dilation = false;
  for (const auto& s : h.encode)
    if (s.norm() < 1.0 - kTightTol) need_dilation = true;
  const Eigen::Index dx = need_dilation ? d + 1 : d;

  std::vector<Eigen::VectorXd> xs;
  xs.reserve(h.inputs_a());
  for (const auto& s : h.encode) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(dx);
    x.head(s.dim()) = s.coords();
    if (need_dilation) x(dx - 1) = std::sqrt(std::max(0.0, 1.0 - s.coords().squaredNorm()));
    xs.push_back(std::move(x));
  }

  std::vector<Eigen::VectorXd> ys;
  ys.reserve(h.inputs_b());
  for (const auto& pair : h.bob) {
    Eigen::VectorXd m = Eigen::VectorXd::Zero(dx);
    m.head(pair[1].meas.dim()) += 0.5 * pair[1].meas.coords();
    m.head(pair[0].meas.dim()) -= 0.5 * pair[0].meas.coords();
    ys.push_back(std::move(m));
  }

  const tsirelson::QuantumStrategy qs =
      tsirelson::embed(tsirelson::VectorStrategy(std::move(xs), std::move(ys)));

  std::vector<std::array<qsim::Observable, 2>> bob;
  bob.reserve(qs.bob.size());
  // Bob answers A * B, realized as message-dependent observables +-B
  for (const auto& b : qs.bob) bob.push_back({qsim::Observable(-b.matrix()), b});
  return EBitProtocol(qs.rho, qs.dim_a, qs.dim_b, qs.alice, std::move(bob));
}

}  // namespace hyperbits::protocols
