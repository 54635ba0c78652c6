#pragma once

// Dimension groups of one-sided subshifts of finite type.

#include <string>
#include <string_view>
#include <vector>

#include "solk/intlin.hpp"
#include "solk/limits.hpp"
#include "solk/model.hpp"

namespace solk {

struct SftPresentation {
  std::vector<std::string> states;
  IntMatrix adjacency;  // A(i, j) = number of transitions i -> j
};

// "r11,r12;r21,r22". Throws ParseError (line 0) on malformed text.
IntMatrix parse_matrix(std::string_view text);

// States named s0, s1, ...
SftPresentation make_sft(IntMatrix adjacency);

ValidationReport validate_sft(const SftPresentation& s);

namespace finding {
inline constexpr std::string_view kNegativeEntry = "negative-entry";
inline constexpr std::string_view kDeadState = "dead-state";
inline constexpr std::string_view kReducible = "reducible";
}  // namespace finding

struct SftKTheory {
  LimitGroupPtr k0;
  LimitDescriptor k0_class;
  std::string k1 = "trivial";
};

// K0 = lim(Z^states, A^T): the preimage-summing transfer map on indicator
// functions of length-1 cylinders. K1 = 0.
SftKTheory sft_dimension_group(const SftPresentation& s);

// Edge-shift (higher block) recoding: one state per transition of A, with
// e -> f allowed when e ends where f starts.
SftPresentation edge_shift_recoding(const SftPresentation& s);

}  // namespace solk
