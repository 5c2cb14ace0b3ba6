#pragma once

// 2-wide double pack on AArch64 NEON. Mirrors pack_avx2.hpp: exact IEEE ops
// only, no fused multiply-add.

#include <arm_neon.h>

#include "twistbeam/simd/pack.hpp"

namespace twistbeam::simd {

struct MaskNeon {
  uint64x2_t raw;
  friend MaskNeon operator&(const MaskNeon& a, const MaskNeon& b) {
    return {vandq_u64(a.raw, b.raw)};
  }
  friend MaskNeon operator|(const MaskNeon& a, const MaskNeon& b) {
    return {vorrq_u64(a.raw, b.raw)};
  }
  friend MaskNeon operator!(const MaskNeon& a) {
    return {veorq_u64(a.raw, vdupq_n_u64(~0ull))};
  }
};

struct PackNeon {
  float64x2_t v;

  PackNeon() = default;
  PackNeon(double s) : v(vdupq_n_f64(s)) {}
  explicit PackNeon(float64x2_t raw) : v(raw) {}

  using Mask = MaskNeon;

  friend PackNeon operator+(const PackNeon& a, const PackNeon& b) {
    return PackNeon{vaddq_f64(a.v, b.v)};
  }
  friend PackNeon operator-(const PackNeon& a, const PackNeon& b) {
    return PackNeon{vsubq_f64(a.v, b.v)};
  }
  friend PackNeon operator*(const PackNeon& a, const PackNeon& b) {
    return PackNeon{vmulq_f64(a.v, b.v)};
  }
  friend PackNeon operator/(const PackNeon& a, const PackNeon& b) {
    return PackNeon{vdivq_f64(a.v, b.v)};
  }
  friend PackNeon operator-(const PackNeon& a) {
    return PackNeon{vnegq_f64(a.v)};
  }
  friend MaskNeon operator<(const PackNeon& a, const PackNeon& b) {
    return {vcltq_f64(a.v, b.v)};
  }
  friend MaskNeon operator<=(const PackNeon& a, const PackNeon& b) {
    return {vcleq_f64(a.v, b.v)};
  }
  friend MaskNeon operator>(const PackNeon& a, const PackNeon& b) {
    return {vcgtq_f64(a.v, b.v)};
  }
  friend MaskNeon operator>=(const PackNeon& a, const PackNeon& b) {
    return {vcgeq_f64(a.v, b.v)};
  }
  friend MaskNeon operator==(const PackNeon& a, const PackNeon& b) {
    return {vceqq_f64(a.v, b.v)};
  }
};

template <>
struct PackTraits<PackNeon> {
  static constexpr int width = 2;
  using Mask = MaskNeon;
};

inline PackNeon sqrt(const PackNeon& a) { return PackNeon{vsqrtq_f64(a.v)}; }
inline PackNeon abs(const PackNeon& a) { return PackNeon{vabsq_f64(a.v)}; }
inline PackNeon vmin(const PackNeon& a, const PackNeon& b) {
  return PackNeon{vminq_f64(a.v, b.v)};
}
inline PackNeon vmax(const PackNeon& a, const PackNeon& b) {
  return PackNeon{vmaxq_f64(a.v, b.v)};
}
inline PackNeon floor(const PackNeon& a) { return PackNeon{vrndmq_f64(a.v)}; }
inline PackNeon round_nearest(const PackNeon& a) {
  return PackNeon{vrndnq_f64(a.v)};
}
inline PackNeon select(const MaskNeon& m, const PackNeon& a,
                       const PackNeon& b) {
  return PackNeon{vbslq_f64(m.raw, a.v, b.v)};
}
inline bool any(const MaskNeon& m) {
  return (vgetq_lane_u64(m.raw, 0) | vgetq_lane_u64(m.raw, 1)) != 0;
}
inline bool all(const MaskNeon& m) {
  return (vgetq_lane_u64(m.raw, 0) & vgetq_lane_u64(m.raw, 1)) != 0;
}
inline MaskNeon is_finite(const PackNeon& a) {
  const float64x2_t absx = vabsq_f64(a.v);
  return {vcltq_f64(absx, vdupq_n_f64(__builtin_inf()))};
}
inline double lane(const PackNeon& p, int i) {
  return i == 0 ? vgetq_lane_f64(p.v, 0) : vgetq_lane_f64(p.v, 1);
}
inline void set_lane(PackNeon& p, int i, double s) {
  if (i == 0)
    p.v = vsetq_lane_f64(s, p.v, 0);
  else
    p.v = vsetq_lane_f64(s, p.v, 1);
}

}  // namespace twistbeam::simd
