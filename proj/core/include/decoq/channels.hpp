#pragma once

#include <string>
#include <vector>

#include "decoq/states.hpp"
#include "decoq/tensor.hpp"

namespace decoq {

// One slot of a Kraus label: a Pauli index or a ladder sign.
enum class OpTag { I, X, Y, Z, Plus, Minus };

std::string to_string(OpTag t);
OpTag op_tag_from_string(const std::string& s);

// Structure matrix for a tag: pauli(0..3) or sigma_plus / sigma_minus.
CMat2 op_tag_matrix(OpTag t);

// (fermion slot, antifermion slot); e.g. {I, Plus} acts on the antifermion.
struct KrausLabel {
  OpTag first;
  OpTag second;
};
std::string to_string(const KrausLabel& l);

// Weight convention: weight == tr[K^dag K] / 4.  The constructor enforces it,
// so `matrix` is sqrt(weight) times a structure normalized to tr[S^dag S] = 4.
struct KrausOperator {
  CMat4 matrix;
  KrausLabel label;
  double weight;
  KrausOperator(const CMat4& matrix, KrausLabel label, double weight);
};

// Build sqrt(weight) * kron(tag_a, tag_b), normalized per the convention above.
KrausOperator make_kraus(OpTag a, OpTag b, double weight);

// Single-qubit Kraus entry, used to assemble product channels.
struct Kraus2 {
  CMat2 matrix;
  OpTag tag;
  double weight;  // tr[k^dag k] / 2
  Kraus2(const CMat2& matrix, OpTag tag, double weight);
};
Kraus2 make_kraus2(OpTag t, double weight);

enum class ChannelKind { Full, Partial };
std::string to_string(ChannelKind k);
ChannelKind channel_kind_from_string(const std::string& s);

// Operator-sum map.  Full channels are trace preserving:
// ||sum K^dag K - I||_F <= 1e-10.  Partial channels only require
// 0 <= sum K^dag K <= I (eigenvalues within 1e-10 of that interval).
class Channel {
 public:
  Channel(std::vector<KrausOperator> ops, ChannelKind kind);

  const std::vector<KrausOperator>& ops() const { return ops_; }
  ChannelKind kind() const { return kind_; }

  CMat4 apply(const CMat4& rho) const;             // sum K rho K^dag
  DensityMatrix apply(const DensityMatrix& rho) const;  // Full channels only

  double total_weight() const;  // sum of op weights

 private:
  std::vector<KrausOperator> ops_;
  ChannelKind kind_;
};

// ||sum K^dag K - I_4||_F for a raw operator list.
double completeness_defect(const std::vector<KrausOperator>& ops);

// Concatenate the operator lists of two channels (weights add); the combined
// list is validated against `kind`.
Channel merge(const Channel& a, const Channel& b, ChannelKind kind);

// Product channel from independent single-qubit operator lists acting on the
// fermion / antifermion slots; weights multiply and labels pair up.
Channel tensor_independent(const std::vector<Kraus2>& fermion_ops,
                           const std::vector<Kraus2>& antifermion_ops,
                           ChannelKind kind);

// Choi matrix sum_ij E_ij (x) M(E_ij), a 16x16 Hermitian form for CP maps;
// trace preserving => trace 4.
Eigen::MatrixXcd choi(const Channel& ch);

// Same construction for an arbitrary linear map (admits non-CP maps such as
// the transpose, whose Choi form has negative eigenvalues).
template <class Map>
Eigen::MatrixXcd choi_of_map(Map&& map) {
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(16, 16);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CMat4 e = CMat4::Zero();
      e(i, j) = 1.0;
      c.block(4 * i, 4 * j, 4, 4) = map(e);
    }
  }
  return c;
}

// JSON round trip: {"kind": ..., "ops": [{"label", "weight", "entries"}]}
// with entries a row-major list of [re, im] pairs.
std::string channel_to_json(const Channel& ch);
Channel channel_from_json(const std::string& text);

}  // namespace decoq
