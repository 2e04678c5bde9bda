#include "dirsh/placement.hpp"
#include "dirsh/simd/swap_scores.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define DIRSH_HAVE_X86 1
#else
#define DIRSH_HAVE_X86 0
#include "dirsh/errors.hpp"
#endif

namespace dirsh::simd {

#if DIRSH_HAVE_X86

// Eight swaps per vector. Padding lanes hold swap endpoints of -1, which never
// match a physical position, and are masked out on store.
__attribute__((target("avx2"))) void score_swaps_avx2(const SwapScoreArgs& args) {
  const int num_swaps = static_cast<int>(args.swap_a.size());
  const std::size_t num_pairs = args.front_a.size();
  const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i none = _mm256_set1_epi32(-1);
  const __m256i row = _mm256_set1_epi32(args.num_nodes);
  const int* dist = args.dist.data();

  for (int k = 0; k < num_swaps; k += 8) {
    const __m256i mask = _mm256_cmpgt_epi32(_mm256_set1_epi32(num_swaps - k), lane);
    __m256i sa = _mm256_maskload_epi32(args.swap_a.data() + k, mask);
    __m256i sb = _mm256_maskload_epi32(args.swap_b.data() + k, mask);
    sa = _mm256_blendv_epi8(none, sa, mask);
    sb = _mm256_blendv_epi8(none, sb, mask);

    __m256i sum = _mm256_setzero_si256();
    __m256i best = _mm256_set1_epi32(kNoDistance);
    for (std::size_t i = 0; i < num_pairs; ++i) {
      const __m256i pa = _mm256_set1_epi32(args.front_a[i]);
      const __m256i pb = _mm256_set1_epi32(args.front_b[i]);
      __m256i ma = _mm256_blendv_epi8(pa, sb, _mm256_cmpeq_epi32(pa, sa));
      ma = _mm256_blendv_epi8(ma, sa, _mm256_cmpeq_epi32(pa, sb));
      __m256i mb = _mm256_blendv_epi8(pb, sb, _mm256_cmpeq_epi32(pb, sa));
      mb = _mm256_blendv_epi8(mb, sa, _mm256_cmpeq_epi32(pb, sb));
      const __m256i idx = _mm256_add_epi32(_mm256_mullo_epi32(ma, row), mb);
      const __m256i d = _mm256_i32gather_epi32(dist, idx, 4);
      sum = _mm256_add_epi32(sum, d);
      best = _mm256_min_epi32(best, d);
    }
    _mm256_maskstore_epi32(args.out_sum.data() + k, mask, sum);
    _mm256_maskstore_epi32(args.out_min.data() + k, mask, best);
  }
}

#else

void score_swaps_avx2(const SwapScoreArgs&) {
  throw ParameterError("avx2 kernel is not built for this architecture");
}

#endif

}  // namespace dirsh::simd
