#pragma once

// Lane-parallel "pack" scalars. The dynamics kernel is written once against
// this interface and instantiated with plain double (the scalar reference),
// PackGeneric<4> (portable), and the AVX2/NEON packs. Every operation maps to
// a single IEEE-754 double op per lane, so lane k of a packed run is
// bit-identical to the corresponding scalar run.

#include <array>
#include <cmath>
#include <cstddef>

namespace twistbeam::simd {

template <class P>
struct PackTraits;

template <>
struct PackTraits<double> {
  static constexpr int width = 1;
  using Mask = bool;
};

template <int W>
struct MaskGeneric {
  bool b[W];
  friend MaskGeneric operator&(const MaskGeneric& x, const MaskGeneric& y) {
    MaskGeneric r;
    for (int i = 0; i < W; ++i) r.b[i] = x.b[i] && y.b[i];
    return r;
  }
  friend MaskGeneric operator|(const MaskGeneric& x, const MaskGeneric& y) {
    MaskGeneric r;
    for (int i = 0; i < W; ++i) r.b[i] = x.b[i] || y.b[i];
    return r;
  }
  friend MaskGeneric operator!(const MaskGeneric& x) {
    MaskGeneric r;
    for (int i = 0; i < W; ++i) r.b[i] = !x.b[i];
    return r;
  }
};

template <int W>
struct PackGeneric {
  double v[W];

  PackGeneric() = default;
  PackGeneric(double s) {
    for (int i = 0; i < W; ++i) v[i] = s;
  }

  using Mask = MaskGeneric<W>;

#define TWISTBEAM_GEN_OP(op)                                               \
  friend PackGeneric operator op(const PackGeneric& a,                    \
                                 const PackGeneric& b) {                  \
    PackGeneric r;                                                        \
    for (int i = 0; i < W; ++i) r.v[i] = a.v[i] op b.v[i];                \
    return r;                                                             \
  }
  TWISTBEAM_GEN_OP(+)
  TWISTBEAM_GEN_OP(-)
  TWISTBEAM_GEN_OP(*)
  TWISTBEAM_GEN_OP(/)
#undef TWISTBEAM_GEN_OP

  friend PackGeneric operator-(const PackGeneric& a) {
    PackGeneric r;
    for (int i = 0; i < W; ++i) r.v[i] = -a.v[i];
    return r;
  }

#define TWISTBEAM_GEN_CMP(op)                                              \
  friend Mask operator op(const PackGeneric& a, const PackGeneric& b) {   \
    Mask r;                                                               \
    for (int i = 0; i < W; ++i) r.b[i] = a.v[i] op b.v[i];                \
    return r;                                                             \
  }
  TWISTBEAM_GEN_CMP(<)
  TWISTBEAM_GEN_CMP(<=)
  TWISTBEAM_GEN_CMP(>)
  TWISTBEAM_GEN_CMP(>=)
  TWISTBEAM_GEN_CMP(==)
#undef TWISTBEAM_GEN_CMP
};

template <int W>
struct PackTraits<PackGeneric<W>> {
  static constexpr int width = W;
  using Mask = MaskGeneric<W>;
};

template <class P>
inline constexpr int lane_count = PackTraits<P>::width;

// ---- scalar (double) adapters -------------------------------------------

inline double sqrt(double x) { return std::sqrt(x); }
inline double abs(double x) { return std::fabs(x); }
inline double vmin(double a, double b) { return std::fmin(a, b); }
inline double vmax(double a, double b) { return std::fmax(a, b); }
inline double floor(double x) { return std::floor(x); }
// Round to nearest, ties to even; matches the vector rounding instructions.
inline double round_nearest(double x) { return std::nearbyint(x); }
inline double select(bool m, double a, double b) { return m ? a : b; }
inline bool any(bool m) { return m; }
inline bool all(bool m) { return m; }
inline bool is_finite(double x) { return std::isfinite(x); }
inline double lane(double p, int) { return p; }
inline void set_lane(double& p, int, double s) { p = s; }

// ---- generic pack adapters ------------------------------------------------

template <int W>
inline PackGeneric<W> sqrt(const PackGeneric<W>& a) {
  PackGeneric<W> r;
  for (int i = 0; i < W; ++i) r.v[i] = std::sqrt(a.v[i]);
  return r;
}
template <int W>
inline PackGeneric<W> abs(const PackGeneric<W>& a) {
  PackGeneric<W> r;
  for (int i = 0; i < W; ++i) r.v[i] = std::fabs(a.v[i]);
  return r;
}
template <int W>
inline PackGeneric<W> vmin(const PackGeneric<W>& a, const PackGeneric<W>& b) {
  PackGeneric<W> r;
  for (int i = 0; i < W; ++i) r.v[i] = std::fmin(a.v[i], b.v[i]);
  return r;
}
template <int W>
inline PackGeneric<W> vmax(const PackGeneric<W>& a, const PackGeneric<W>& b) {
  PackGeneric<W> r;
  for (int i = 0; i < W; ++i) r.v[i] = std::fmax(a.v[i], b.v[i]);
  return r;
}
template <int W>
inline PackGeneric<W> floor(const PackGeneric<W>& a) {
  PackGeneric<W> r;
  for (int i = 0; i < W; ++i) r.v[i] = std::floor(a.v[i]);
  return r;
}
template <int W>
inline PackGeneric<W> round_nearest(const PackGeneric<W>& a) {
  PackGeneric<W> r;
  for (int i = 0; i < W; ++i) r.v[i] = std::nearbyint(a.v[i]);
  return r;
}
template <int W>
inline PackGeneric<W> select(const MaskGeneric<W>& m, const PackGeneric<W>& a,
                             const PackGeneric<W>& b) {
  PackGeneric<W> r;
  for (int i = 0; i < W; ++i) r.v[i] = m.b[i] ? a.v[i] : b.v[i];
  return r;
}
template <int W>
inline bool any(const MaskGeneric<W>& m) {
  for (int i = 0; i < W; ++i)
    if (m.b[i]) return true;
  return false;
}
template <int W>
inline bool all(const MaskGeneric<W>& m) {
  for (int i = 0; i < W; ++i)
    if (!m.b[i]) return false;
  return true;
}
template <int W>
inline MaskGeneric<W> is_finite(const PackGeneric<W>& a) {
  MaskGeneric<W> r;
  for (int i = 0; i < W; ++i) r.b[i] = std::isfinite(a.v[i]);
  return r;
}
template <int W>
inline double lane(const PackGeneric<W>& p, int i) {
  return p.v[i];
}
template <int W>
inline void set_lane(PackGeneric<W>& p, int i, double s) {
  p.v[i] = s;
}

}  // namespace twistbeam::simd
