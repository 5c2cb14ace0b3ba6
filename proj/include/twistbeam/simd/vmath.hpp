#pragma once

// Branch-free lane-parallel sin/cos. The simulation paths use these instead
// of libm so that scalar and SIMD runs of the same model agree bit-for-bit.
//
// Payne-Hanek style argument reduction is not needed here: reduction is
// Cody-Waite with a 3-way split of pi/2 (33 significant bits per limb), exact
// for |x| up to ~1e6, far beyond any drive phase or joint angle this code
// sees. Polynomials are the classic Cephes minimax fits on [-pi/4, pi/4].

#include "twistbeam/simd/pack.hpp"

namespace twistbeam::simd {

template <class P>
inline void sincos(const P& x, P& s_out, P& c_out) {
  const P two_over_pi(0.63661977236758134308);
  // pi/2 = c1 + c2 + c3, each limb exactly representable in 33 bits.
  const P c1(1.57079632673412561417e+00);
  const P c2(6.07710050630396597660e-11);
  const P c3(2.02226624871116645580e-21);

  const P n = round_nearest(x * two_over_pi);
  P r = x - n * c1;
  r = r - n * c2;
  r = r - n * c3;

  const P z = r * r;

  // sin(r) = r + r*z*S(z)
  P sp = P(1.58962301576546568060e-10);
  sp = sp * z + P(-2.50507477628578072866e-8);
  sp = sp * z + P(2.75573136213857245213e-6);
  sp = sp * z + P(-1.98412698295895385996e-4);
  sp = sp * z + P(8.33333333332211858878e-3);
  sp = sp * z + P(-1.66666666666666307295e-1);
  const P sin_r = r + r * z * sp;

  // cos(r) = 1 - z/2 + z^2*C(z)
  P cp = P(-1.13585365213876817300e-11);
  cp = cp * z + P(2.08757008419747316778e-9);
  cp = cp * z + P(-2.75573141792967388112e-7);
  cp = cp * z + P(2.48015872888517179954e-5);
  cp = cp * z + P(-1.38888888888730564116e-3);
  cp = cp * z + P(4.16666666666665929218e-2);
  const P cos_r = P(1.0) - z * P(0.5) + z * z * cp;

  // Quadrant j = n mod 4 selects the (sin, cos) pair and signs.
  const P j = n - P(4.0) * floor(n * P(0.25));
  const auto swap = (j == P(1.0)) | (j == P(3.0));
  const auto sin_neg = (j == P(2.0)) | (j == P(3.0));
  const auto cos_neg = (j == P(1.0)) | (j == P(2.0));

  P s = select(swap, cos_r, sin_r);
  P c = select(swap, sin_r, cos_r);
  s_out = select(sin_neg, -s, s);
  c_out = select(cos_neg, -c, c);
}

template <class P>
inline P sin(const P& x) {
  P s, c;
  sincos(x, s, c);
  return s;
}

template <class P>
inline P cos(const P& x) {
  P s, c;
  sincos(x, s, c);
  return c;
}

}  // namespace twistbeam::simd
