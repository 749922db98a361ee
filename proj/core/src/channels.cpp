#include "decoq/channels.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <utility>

#include "decoq/errors.hpp"

namespace decoq {

std::string to_string(OpTag t) {
  switch (t) {
    case OpTag::I:
      return "0";
    case OpTag::X:
      return "1";
    case OpTag::Y:
      return "2";
    case OpTag::Z:
      return "3";
    case OpTag::Plus:
      return "+";
    case OpTag::Minus:
      return "-";
  }
  throw ArgumentError("to_string: invalid OpTag");
}

OpTag op_tag_from_string(const std::string& s) {
  if (s == "0") return OpTag::I;
  if (s == "1") return OpTag::X;
  if (s == "2") return OpTag::Y;
  if (s == "3") return OpTag::Z;
  if (s == "+") return OpTag::Plus;
  if (s == "-") return OpTag::Minus;
  throw ArgumentError("op tag must be one of 0,1,2,3,+,-; got '" + s + "'");
}

CMat2 op_tag_matrix(OpTag t) {
  switch (t) {
    case OpTag::I:
      return pauli(0);
    case OpTag::X:
      return pauli(1);
    case OpTag::Y:
      return pauli(2);
    case OpTag::Z:
      return pauli(3);
    case OpTag::Plus:
      return sigma_plus();
    case OpTag::Minus:
      return sigma_minus();
  }
  throw ArgumentError("op_tag_matrix: invalid OpTag");
}

std::string to_string(const KrausLabel& l) {
  return to_string(l.first) + to_string(l.second);
}

KrausOperator::KrausOperator(const CMat4& matrix_, KrausLabel label_,
                             double weight_)
    : matrix(matrix_), label(label_), weight(weight_) {
  if (!(weight >= 0.0) || !std::isfinite(weight)) {
    throw ContractViolation("KrausOperator: weight must be finite and >= 0");
  }
  const double tr4 = (matrix.adjoint() * matrix).trace().real() / 4.0;
  if (std::abs(tr4 - weight) > 1e-10 * std::max(1.0, weight)) {
    throw ContractViolation("KrausOperator: weight " + std::to_string(weight) +
                            " does not match tr[K^dag K]/4 = " +
                            std::to_string(tr4));
  }
}

KrausOperator make_kraus(OpTag a, OpTag b, double weight) {
  if (!(weight >= 0.0) || !std::isfinite(weight)) {
    throw ContractViolation("make_kraus: weight must be finite and >= 0");
  }
  const CMat4 s = kron(op_tag_matrix(a), op_tag_matrix(b));
  const double norm4 = (s.adjoint() * s).trace().real() / 4.0;
  const CMat4 k = std::sqrt(weight / norm4) * s;
  return KrausOperator(k, KrausLabel{a, b}, weight);
}

Kraus2::Kraus2(const CMat2& matrix_, OpTag tag_, double weight_)
    : matrix(matrix_), tag(tag_), weight(weight_) {
  if (!(weight >= 0.0) || !std::isfinite(weight)) {
    throw ContractViolation("Kraus2: weight must be finite and >= 0");
  }
  const double tr2 = (matrix.adjoint() * matrix).trace().real() / 2.0;
  if (std::abs(tr2 - weight) > 1e-10 * std::max(1.0, weight)) {
    throw ContractViolation("Kraus2: weight does not match tr[k^dag k]/2");
  }
}

Kraus2 make_kraus2(OpTag t, double weight) {
  const CMat2 s = op_tag_matrix(t);
  const double norm2 = (s.adjoint() * s).trace().real() / 2.0;
  return Kraus2(std::sqrt(weight / norm2) * s, t, weight);
}

std::string to_string(ChannelKind k) {
  return k == ChannelKind::Full ? "full" : "partial";
}

ChannelKind channel_kind_from_string(const std::string& s) {
  if (s == "full") return ChannelKind::Full;
  if (s == "partial") return ChannelKind::Partial;
  throw ArgumentError("channel kind must be 'full' or 'partial'; got '" + s +
                      "'");
}

namespace {

CMat4 kraus_sum(const std::vector<KrausOperator>& ops) {
  CMat4 sum = CMat4::Zero();
  for (const KrausOperator& op : ops) {
    sum += op.matrix.adjoint() * op.matrix;
  }
  return sum;
}

}  // namespace

double completeness_defect(const std::vector<KrausOperator>& ops) {
  return (kraus_sum(ops) - CMat4::Identity()).norm();
}

Channel::Channel(std::vector<KrausOperator> ops, ChannelKind kind)
    : ops_(std::move(ops)), kind_(kind) {
  if (ops_.empty()) {
    throw ContractViolation("Channel: operator list must not be empty");
  }
  if (kind_ == ChannelKind::Full) {
    const double defect = completeness_defect(ops_);
    if (defect > 1e-10) {
      throw ContractViolation(
          "Channel: full channel violates completeness, defect = " +
          std::to_string(defect));
    }
  } else {
    // Partial: 0 <= sum K^dag K <= I.
    const CMat4 sum = kraus_sum(ops_);
    Eigen::SelfAdjointEigenSolver<CMat4> solver((sum + sum.adjoint()) / 2.0);
    if (solver.info() != Eigen::Success) {
      throw ContractViolation("Channel: eigensolver failed on sum K^dag K");
    }
    if (solver.eigenvalues().minCoeff() < -1e-10 ||
        solver.eigenvalues().maxCoeff() > 1.0 + 1e-10) {
      throw ContractViolation(
          "Channel: partial channel needs 0 <= sum K^dag K <= I");
    }
  }
}

CMat4 Channel::apply(const CMat4& rho) const {
  CMat4 out = CMat4::Zero();
  for (const KrausOperator& op : ops_) {
    out += op.matrix * rho * op.matrix.adjoint();
  }
  return out;
}

DensityMatrix Channel::apply(const DensityMatrix& rho) const {
  if (kind_ != ChannelKind::Full) {
    throw ContractViolation(
        "Channel::apply: density-matrix output requires a full channel");
  }
  return DensityMatrix(apply(rho.matrix()));
}

double Channel::total_weight() const {
  double w = 0.0;
  for (const KrausOperator& op : ops_) {
    w += op.weight;
  }
  return w;
}

Channel merge(const Channel& a, const Channel& b, ChannelKind kind) {
  std::vector<KrausOperator> ops = a.ops();
  ops.insert(ops.end(), b.ops().begin(), b.ops().end());
  return Channel(std::move(ops), kind);
}

Channel tensor_independent(const std::vector<Kraus2>& fermion_ops,
                           const std::vector<Kraus2>& antifermion_ops,
                           ChannelKind kind) {
  std::vector<KrausOperator> ops;
  ops.reserve(fermion_ops.size() * antifermion_ops.size());
  for (const Kraus2& a : fermion_ops) {
    for (const Kraus2& b : antifermion_ops) {
      ops.emplace_back(kron(a.matrix, b.matrix), KrausLabel{a.tag, b.tag},
                       a.weight * b.weight);
    }
  }
  return Channel(std::move(ops), kind);
}

Eigen::MatrixXcd choi(const Channel& ch) {
  return choi_of_map([&ch](const CMat4& e) { return ch.apply(e); });
}

std::string channel_to_json(const Channel& ch) {
  nlohmann::json j;
  j["kind"] = to_string(ch.kind());
  j["ops"] = nlohmann::json::array();
  for (const KrausOperator& op : ch.ops()) {
    nlohmann::json entry;
    entry["label"] = to_string(op.label);
    entry["weight"] = op.weight;
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) {
      for (int k = 0; k < 4; ++k) {
        entries.push_back({op.matrix(i, k).real(), op.matrix(i, k).imag()});
      }
    }
    entry["entries"] = std::move(entries);
    j["ops"].push_back(std::move(entry));
  }
  return j.dump(2);
}

Channel channel_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("channel_from_json: bad JSON: ") +
                        e.what());
  }
  try {
    const ChannelKind kind =
        channel_kind_from_string(j.at("kind").get<std::string>());
    std::vector<KrausOperator> ops;
    for (const nlohmann::json& entry : j.at("ops")) {
      const std::string label = entry.at("label").get<std::string>();
      if (label.size() != 2) {
        throw ArgumentError("channel_from_json: label must have two tags");
      }
      const KrausLabel l{op_tag_from_string(label.substr(0, 1)),
                         op_tag_from_string(label.substr(1, 1))};
      const nlohmann::json& entries = entry.at("entries");
      if (entries.size() != 16) {
        throw ArgumentError("channel_from_json: need 16 matrix entries");
      }
      CMat4 m;
      for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
          const nlohmann::json& pair = entries.at(4 * i + k);
          m(i, k) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
        }
      }
      ops.emplace_back(m, l, entry.at("weight").get<double>());
    }
    return Channel(std::move(ops), kind);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("channel_from_json: bad schema: ") +
                        e.what());
  }
}

}  // namespace decoq
