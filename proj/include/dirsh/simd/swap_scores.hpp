#pragma once

// Batched evaluation of the swap heuristics.
//
// For every candidate swap k acting on physical qubits (swap_a[k], swap_b[k])
// and every front pair i sitting on (front_a[i], front_b[i]), the swap moves
// an endpoint sitting on swap_a[k] to swap_b[k] and vice versa. The kernels
// produce
//
//   out_sum[k] = sum_i dist(front_a'[i], front_b'[i])
//   out_min[k] = min_i dist(front_a'[i], front_b'[i])   (kNoDistance if no pairs)
//
// i.e. D_sum and D_min under the swapped assignment, for all swaps at once.
// The scalar kernel is the reference; vector kernels must agree exactly.

#include <optional>
#include <span>
#include <string_view>

namespace dirsh::simd {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

struct SwapScoreArgs {
  std::span<const int> front_a;
  std::span<const int> front_b;
  std::span<const int> swap_a;
  std::span<const int> swap_b;
  std::span<const int> dist;  // row-major num_nodes x num_nodes
  int num_nodes = 0;
  std::span<int> out_sum;
  std::span<int> out_min;
};

void score_swaps_scalar(const SwapScoreArgs& args);

/// Only callable when isa_available(Isa::kAvx2).
void score_swaps_avx2(const SwapScoreArgs& args);

bool isa_available(Isa isa);

/// Best available ISA, unless overridden with force_isa.
Isa active_isa();

/// Pins dispatch to `isa` (must be available), or restores auto-detection.
void force_isa(std::optional<Isa> isa);

/// Dispatches to the active kernel.
void score_swaps(const SwapScoreArgs& args);

}  // namespace dirsh::simd
