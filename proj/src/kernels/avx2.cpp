// Compiled with -mavx2; reached only through the runtime dispatcher.

#include <immintrin.h>

#include <algorithm>
#include <cstddef>

#include "nearprim/kernels.hpp"

namespace nearprim::kernels::avx2 {

namespace {

// x * y mod m for doubles holding integers below 2^26. The product is exact,
// the floor quotient is off by at most one, and the fix-ups correct that.
inline __m256d mulmod_pd(__m256d x, __m256d y, __m256d m, __m256d inv) {
  const __m256d prod = _mm256_mul_pd(x, y);
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(prod, inv));
  __m256d r = _mm256_sub_pd(prod, _mm256_mul_pd(q, m));
  const __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), m));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, m, _CMP_GE_OQ), m));
  return r;
}

inline __m256d u64_to_pd(const std::uint64_t* v) {
  return _mm256_set_pd(static_cast<double>(v[3]), static_cast<double>(v[2]),
                       static_cast<double>(v[1]), static_cast<double>(v[0]));
}

void powmod4(const std::uint64_t* base, const std::uint64_t* exp, const std::uint64_t* mod,
             std::uint64_t* out) {
  const __m256d m = u64_to_pd(mod);
  const __m256d inv = _mm256_div_pd(_mm256_set1_pd(1.0), m);
  __m256d b = u64_to_pd(base);
  __m256d r = _mm256_set1_pd(1.0);
  __m256i e = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(exp));
  const __m256i one = _mm256_set1_epi64x(1);
  while (!_mm256_testz_si256(e, e)) {
    const __m256i bit = _mm256_cmpeq_epi64(_mm256_and_si256(e, one), one);
    r = _mm256_blendv_pd(r, mulmod_pd(r, b, m, inv), _mm256_castsi256_pd(bit));
    b = mulmod_pd(b, b, m, inv);
    e = _mm256_srli_epi64(e, 1);
  }
  // r == 1 with m == 1 (zero exponent) must still reduce to 0.
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, m, _CMP_GE_OQ), m));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, r);
  for (int i = 0; i < 4; ++i) out[i] = static_cast<std::uint64_t>(lanes[i]);
}

}  // namespace

void powmod_batch(std::span<const std::uint64_t> base, std::span<const std::uint64_t> exp,
                  std::span<const std::uint64_t> mod, std::span<std::uint64_t> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const bool vector_ok = mod[i] < kVectorModulusLimit && mod[i + 1] < kVectorModulusLimit &&
                           mod[i + 2] < kVectorModulusLimit &&
                           mod[i + 3] < kVectorModulusLimit;
    if (vector_ok) {
      powmod4(&base[i], &exp[i], &mod[i], &out[i]);
    } else {
      scalar::powmod_batch(base.subspan(i, 4), exp.subspan(i, 4), mod.subspan(i, 4),
                           out.subspan(i, 4));
    }
  }
  if (i < n) {
    scalar::powmod_batch(base.subspan(i), exp.subspan(i), mod.subspan(i), out.subspan(i));
  }
}

std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t p) {
  // Each 64-bit lane absorbs one product below 2^40 per step.
  constexpr std::size_t kBlock = std::size_t{1} << 22;
  const std::size_t n = a.size();
  std::uint64_t total = 0;
  std::size_t i = 0;
  while (i + 8 <= n) {
    const std::size_t stop = std::min(n - (n - i) % 8, i + kBlock);
    __m256i acc_lo = _mm256_setzero_si256();
    __m256i acc_hi = _mm256_setzero_si256();
    for (; i < stop; i += 8) {
      const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&a[i]));
      const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&b[i]));
      const __m256i a_lo = _mm256_cvtepu32_epi64(_mm256_castsi256_si128(va));
      const __m256i a_hi = _mm256_cvtepu32_epi64(_mm256_extracti128_si256(va, 1));
      const __m256i b_lo = _mm256_cvtepu32_epi64(_mm256_castsi256_si128(vb));
      const __m256i b_hi = _mm256_cvtepu32_epi64(_mm256_extracti128_si256(vb, 1));
      acc_lo = _mm256_add_epi64(acc_lo, _mm256_mul_epu32(a_lo, b_lo));
      acc_hi = _mm256_add_epi64(acc_hi, _mm256_mul_epu32(a_hi, b_hi));
    }
    alignas(32) std::uint64_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc_lo);
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes + 4), acc_hi);
    for (std::uint64_t v : lanes) total = (total + v % p) % p;
  }
  for (; i < n; ++i) total = (total + std::uint64_t{a[i]} * b[i] % p) % p;
  return static_cast<std::uint32_t>(total);
}

}  // namespace nearprim::kernels::avx2
