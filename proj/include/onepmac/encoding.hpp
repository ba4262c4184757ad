#pragma once

#include <span>
#include <variant>
#include <vector>

#include "onepmac/channel.hpp"
#include "onepmac/mac.hpp"
#include "onepmac/state.hpp"

namespace onepmac {

// All encodings act on the (N+1)-dimensional vacuum + one-particle space
// with the vacuum at index 0 and path e_i at index i.
CMatrix apply_product_encoding(const CMatrix& rho_full, std::span<const NpChannel> channels);
CMatrix apply_product_encoding(const OneParticleState& state, std::span<const NpChannel> channels);

// `channels` must partition the parties; max_group_size = 0 disables the
// group-size check.
CMatrix apply_joint_encoding(const CMatrix& rho_full, std::span<const JointNpChannel> channels,
                             int max_group_size = 0);
CMatrix apply_joint_encoding(const OneParticleState& state, std::span<const JointNpChannel> channels,
                             int max_group_size = 0);

// table[party][input] is the channel party `party` applies on that input.
struct ProductEncoder {
  std::vector<std::vector<NpChannel>> table;
};

// Each group applies a channel chosen by the group's joint input, indexed by
// the flattened local input tuple (first group member most significant).
struct GroupEncoder {
  std::vector<int> parties;
  std::vector<JointNpChannel> per_input;
};

struct JointEncoder {
  std::vector<int> input_sizes;
  std::vector<GroupEncoder> groups;
};

using Encoder = std::variant<ProductEncoder, JointEncoder>;

// phases[party][input] gives a phase encoding.
ProductEncoder phase_encoder(const std::vector<std::vector<double>>& phases);

std::vector<int> encoder_input_sizes(const Encoder& enc);
CMatrix encode(const OneParticleState& state, const Encoder& enc, std::span<const int> inputs);

Mac generate_mac(const OneParticleState& state, const Encoder& enc, const Povm& povm);

// The phase-encoded one-particle block D_a rho D_a^dagger.
CMatrix phase_encoded(const CMatrix& rho, std::span<const double> path_phases);

}  // namespace onepmac
