#pragma once

// Unit conventions: every config-facing quantity is carried in the units the
// hardware is specified in (mm, g, deg, Hz) and converted to SI exactly once,
// when a spec is compiled into a simulation model. Everything downstream of
// that boundary is SI (m, kg, s, N, rad).

#include <numbers>

namespace twistbeam {

inline constexpr double kMmToM = 1e-3;
inline constexpr double kMToMm = 1e3;
inline constexpr double kGToKg = 1e-3;
inline constexpr double kKgToG = 1e3;

inline constexpr double deg_to_rad(double deg) {
  return deg * (std::numbers::pi / 180.0);
}
inline constexpr double rad_to_deg(double rad) {
  return rad * (180.0 / std::numbers::pi);
}
inline constexpr double mm_to_m(double mm) { return mm * kMmToM; }
inline constexpr double m_to_mm(double m) { return m * kMToMm; }
inline constexpr double g_to_kg(double g) { return g * kGToKg; }
inline constexpr double kg_to_g(double kg) { return kg * kKgToG; }

inline constexpr double kStandardGravity = 9.81;  // m/s^2

}  // namespace twistbeam
