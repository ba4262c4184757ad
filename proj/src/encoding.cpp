#include "onepmac/encoding.hpp"

#include <algorithm>
#include <cmath>

#include "onepmac/errors.hpp"

namespace onepmac {

namespace {

CMatrix apply_kraus(const CMatrix& rho, const std::vector<CMatrix>& ops) {
  CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& k : ops) out += k * rho * k.adjoint();
  return out;
}

int full_dim_parties(const CMatrix& rho_full) {
  if (rho_full.rows() < 2 || rho_full.rows() != rho_full.cols())
    throw InvalidDim("encoded space must be (N+1)x(N+1) with N >= 1");
  return static_cast<int>(rho_full.rows()) - 1;
}

}  // namespace

CMatrix apply_product_encoding(const CMatrix& rho_full, std::span<const NpChannel> channels) {
  const int N = full_dim_parties(rho_full);
  if (static_cast<int>(channels.size()) != N)
    throw ChannelCountMismatch("expected " + std::to_string(N) + " channels, got " +
                               std::to_string(channels.size()));
  CMatrix rho = rho_full;
  for (int i = 0; i < N; ++i) {
    std::vector<CMatrix> ops;
    for (const auto& br : channels[i].branches()) {
      const double w = std::sqrt(br.weight);
      CMatrix A = CMatrix::Identity(N + 1, N + 1);
      A(i + 1, i + 1) = br.y;
      ops.push_back(w * A);
      if (br.z != 0.0) {
        CMatrix B = CMatrix::Zero(N + 1, N + 1);
        B(0, i + 1) = br.z;
        ops.push_back(w * B);
      }
    }
    rho = apply_kraus(rho, ops);
  }
  return rho;
}

CMatrix apply_product_encoding(const OneParticleState& state, std::span<const NpChannel> channels) {
  return apply_product_encoding(state.embedded(), channels);
}

CMatrix apply_joint_encoding(const CMatrix& rho_full, std::span<const JointNpChannel> channels,
                             int max_group_size) {
  const int N = full_dim_parties(rho_full);
  std::vector<int> owner(N, -1);
  for (std::size_t g = 0; g < channels.size(); ++g) {
    const auto& parties = channels[g].parties();
    if (max_group_size > 0 && static_cast<int>(parties.size()) > max_group_size)
      throw InvalidPartition("group of size " + std::to_string(parties.size()) +
                             " exceeds K = " + std::to_string(max_group_size));
    for (int p : parties) {
      if (p < 0 || p >= N) throw InvalidPartition("party outside 1..N");
      if (owner[p] >= 0) throw InvalidPartition("party " + std::to_string(p + 1) + " is in two groups");
      owner[p] = static_cast<int>(g);
    }
  }
  for (int p = 0; p < N; ++p)
    if (owner[p] < 0) throw InvalidPartition("party " + std::to_string(p + 1) + " is in no group");
  CMatrix rho = rho_full;
  for (const auto& ch : channels) rho = apply_kraus(rho, ch.global_kraus(N));
  return rho;
}

CMatrix apply_joint_encoding(const OneParticleState& state, std::span<const JointNpChannel> channels,
                             int max_group_size) {
  return apply_joint_encoding(state.embedded(), channels, max_group_size);
}

ProductEncoder phase_encoder(const std::vector<std::vector<double>>& phases) {
  ProductEncoder enc;
  for (const auto& party : phases) {
    std::vector<NpChannel> row;
    for (double th : party) row.push_back(NpChannel::phase(th));
    enc.table.push_back(std::move(row));
  }
  return enc;
}

std::vector<int> encoder_input_sizes(const Encoder& enc) {
  if (const auto* p = std::get_if<ProductEncoder>(&enc)) {
    std::vector<int> sizes;
    for (const auto& row : p->table) sizes.push_back(static_cast<int>(row.size()));
    return sizes;
  }
  return std::get<JointEncoder>(enc).input_sizes;
}

CMatrix encode(const OneParticleState& state, const Encoder& enc, std::span<const int> inputs) {
  if (const auto* p = std::get_if<ProductEncoder>(&enc)) {
    if (inputs.size() != p->table.size()) throw ShapeMismatch("input tuple has wrong length");
    std::vector<NpChannel> chans;
    for (std::size_t i = 0; i < inputs.size(); ++i) chans.push_back(p->table[i].at(inputs[i]));
    return apply_product_encoding(state, chans);
  }
  const auto& j = std::get<JointEncoder>(enc);
  std::vector<JointNpChannel> chans;
  for (const auto& g : j.groups) {
    std::size_t local = 0;
    for (int p : g.parties) local = local * j.input_sizes.at(p) + inputs[p];
    chans.push_back(g.per_input.at(local));
  }
  return apply_joint_encoding(state, chans);
}

Mac generate_mac(const OneParticleState& state, const Encoder& enc, const Povm& povm) {
  const AlphabetSpec alph(encoder_input_sizes(enc), povm.outcomes());
  if (alph.parties() != state.dim()) throw ChannelCountMismatch("encoder must cover every path");
  if (povm.dim() != state.dim() + 1) throw InvalidPovm("POVM must act on vacuum + one-particle space");
  const std::size_t n_in = alph.num_inputs();
  std::vector<double> probs(alph.num_transitions());
  for (std::size_t flat = 0; flat < n_in; ++flat) {
    const auto a = alph.unflatten(flat);
    const CMatrix sigma = encode(state, enc, a);
    for (int b = 0; b < alph.output_size; ++b) {
      const double p = (povm.effects()[b] * sigma).trace().real();
      probs[alph.transition_index(b, flat)] = std::clamp(p, 0.0, 1.0);
    }
  }
  return Mac(alph, std::move(probs));
}

CMatrix phase_encoded(const CMatrix& rho, std::span<const double> path_phases) {
  const Eigen::Index n = rho.rows();
  if (static_cast<Eigen::Index>(path_phases.size()) != n)
    throw ShapeMismatch("one phase per path");
  CVector d(n);
  for (Eigen::Index k = 0; k < n; ++k) d(k) = std::polar(1.0, path_phases[k]);
  return d.asDiagonal() * rho * d.conjugate().asDiagonal();
}

}  // namespace onepmac
