#include "dirsh/simd/swap_scores.hpp"

#include <algorithm>
#include <atomic>

#include "dirsh/errors.hpp"
#include "dirsh/placement.hpp"

namespace dirsh::simd {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

void score_swaps_scalar(const SwapScoreArgs& args) {
  const std::size_t num_swaps = args.swap_a.size();
  const std::size_t num_pairs = args.front_a.size();
  const int n = args.num_nodes;
  for (std::size_t k = 0; k < num_swaps; ++k) {
    const int sa = args.swap_a[k];
    const int sb = args.swap_b[k];
    int sum = 0;
    int best = kNoDistance;
    for (std::size_t i = 0; i < num_pairs; ++i) {
      int pa = args.front_a[i];
      int pb = args.front_b[i];
      pa = pa == sa ? sb : (pa == sb ? sa : pa);
      pb = pb == sa ? sb : (pb == sb ? sa : pb);
      const int d = args.dist[static_cast<std::size_t>(pa * n + pb)];
      sum += d;
      best = std::min(best, d);
    }
    args.out_sum[k] = sum;
    args.out_min[k] = best;
  }
}

namespace {

// -1 = auto-detect.
std::atomic<int> forced{-1};

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  const int f = forced.load(std::memory_order_relaxed);
  if (f >= 0) return static_cast<Isa>(f);
  static const Isa detected = isa_available(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
  return detected;
}

void force_isa(std::optional<Isa> isa) {
  if (isa && !isa_available(*isa)) {
    throw ParameterError("instruction set " + std::string(isa_name(*isa)) +
                         " is not available on this machine");
  }
  forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void score_swaps(const SwapScoreArgs& args) {
  if (active_isa() == Isa::kAvx2) {
    score_swaps_avx2(args);
  } else {
    score_swaps_scalar(args);
  }
}

}  // namespace dirsh::simd
