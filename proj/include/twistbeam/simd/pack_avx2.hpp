#pragma once

// 4-wide double pack on AVX2. Only IEEE-exact instructions are used (no FMA),
// so each lane reproduces the scalar reference bit-for-bit. This header may
// only be included from translation units compiled with -mavx2.

#include <immintrin.h>

#include "twistbeam/simd/pack.hpp"

namespace twistbeam::simd {

struct MaskAvx2 {
  __m256d raw;
  friend MaskAvx2 operator&(const MaskAvx2& a, const MaskAvx2& b) {
    return {_mm256_and_pd(a.raw, b.raw)};
  }
  friend MaskAvx2 operator|(const MaskAvx2& a, const MaskAvx2& b) {
    return {_mm256_or_pd(a.raw, b.raw)};
  }
  friend MaskAvx2 operator!(const MaskAvx2& a) {
    return {_mm256_xor_pd(a.raw, _mm256_castsi256_pd(_mm256_set1_epi64x(-1)))};
  }
};

struct PackAvx2 {
  __m256d v;

  PackAvx2() = default;
  PackAvx2(double s) : v(_mm256_set1_pd(s)) {}
  explicit PackAvx2(__m256d raw) : v(raw) {}

  using Mask = MaskAvx2;

  friend PackAvx2 operator+(const PackAvx2& a, const PackAvx2& b) {
    return PackAvx2{_mm256_add_pd(a.v, b.v)};
  }
  friend PackAvx2 operator-(const PackAvx2& a, const PackAvx2& b) {
    return PackAvx2{_mm256_sub_pd(a.v, b.v)};
  }
  friend PackAvx2 operator*(const PackAvx2& a, const PackAvx2& b) {
    return PackAvx2{_mm256_mul_pd(a.v, b.v)};
  }
  friend PackAvx2 operator/(const PackAvx2& a, const PackAvx2& b) {
    return PackAvx2{_mm256_div_pd(a.v, b.v)};
  }
  friend PackAvx2 operator-(const PackAvx2& a) {
    return PackAvx2{_mm256_xor_pd(a.v, _mm256_set1_pd(-0.0))};
  }
  friend MaskAvx2 operator<(const PackAvx2& a, const PackAvx2& b) {
    return {_mm256_cmp_pd(a.v, b.v, _CMP_LT_OQ)};
  }
  friend MaskAvx2 operator<=(const PackAvx2& a, const PackAvx2& b) {
    return {_mm256_cmp_pd(a.v, b.v, _CMP_LE_OQ)};
  }
  friend MaskAvx2 operator>(const PackAvx2& a, const PackAvx2& b) {
    return {_mm256_cmp_pd(a.v, b.v, _CMP_GT_OQ)};
  }
  friend MaskAvx2 operator>=(const PackAvx2& a, const PackAvx2& b) {
    return {_mm256_cmp_pd(a.v, b.v, _CMP_GE_OQ)};
  }
  friend MaskAvx2 operator==(const PackAvx2& a, const PackAvx2& b) {
    return {_mm256_cmp_pd(a.v, b.v, _CMP_EQ_OQ)};
  }
};

template <>
struct PackTraits<PackAvx2> {
  static constexpr int width = 4;
  using Mask = MaskAvx2;
};

inline PackAvx2 sqrt(const PackAvx2& a) { return PackAvx2{_mm256_sqrt_pd(a.v)}; }
inline PackAvx2 abs(const PackAvx2& a) {
  return PackAvx2{_mm256_andnot_pd(_mm256_set1_pd(-0.0), a.v)};
}
inline PackAvx2 vmin(const PackAvx2& a, const PackAvx2& b) {
  return PackAvx2{_mm256_min_pd(a.v, b.v)};
}
inline PackAvx2 vmax(const PackAvx2& a, const PackAvx2& b) {
  return PackAvx2{_mm256_max_pd(a.v, b.v)};
}
inline PackAvx2 floor(const PackAvx2& a) {
  return PackAvx2{_mm256_floor_pd(a.v)};
}
inline PackAvx2 round_nearest(const PackAvx2& a) {
  return PackAvx2{
      _mm256_round_pd(a.v, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC)};
}
inline PackAvx2 select(const MaskAvx2& m, const PackAvx2& a,
                       const PackAvx2& b) {
  return PackAvx2{_mm256_blendv_pd(b.v, a.v, m.raw)};
}
inline bool any(const MaskAvx2& m) { return _mm256_movemask_pd(m.raw) != 0; }
inline bool all(const MaskAvx2& m) { return _mm256_movemask_pd(m.raw) == 0xf; }
inline MaskAvx2 is_finite(const PackAvx2& a) {
  // finite iff |x| < inf
  const __m256d absx = _mm256_andnot_pd(_mm256_set1_pd(-0.0), a.v);
  return {_mm256_cmp_pd(absx, _mm256_set1_pd(__builtin_inf()), _CMP_LT_OQ)};
}
inline double lane(const PackAvx2& p, int i) {
  alignas(32) double tmp[4];
  _mm256_store_pd(tmp, p.v);
  return tmp[i];
}
inline void set_lane(PackAvx2& p, int i, double s) {
  alignas(32) double tmp[4];
  _mm256_store_pd(tmp, p.v);
  tmp[i] = s;
  p.v = _mm256_load_pd(tmp);
}

}  // namespace twistbeam::simd
