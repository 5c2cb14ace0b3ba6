#include "twistbeam/simd/dispatch.hpp"

#include <cstdlib>
#include <cstring>

namespace twistbeam::simd {

int isa_width(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return 1;
    case Isa::neon:
      return 2;
    case Isa::generic:
    case Isa::avx2:
      return 4;
  }
  return 1;
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::generic:
      return "generic";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "?";
}

bool cpu_has_avx2() {
#if defined(__x86_64__) && defined(TWISTBEAM_HAVE_AVX2_TU)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

static Isa detect() {
  if (cpu_has_avx2()) return Isa::avx2;
#if defined(TWISTBEAM_HAVE_NEON_TU)
  return Isa::neon;
#else
  return Isa::generic;
#endif
}

Isa active_isa() {
  static const Isa isa = [] {
    const char* env = std::getenv("TWISTBEAM_SIMD");
    if (env != nullptr) {
      if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
      if (std::strcmp(env, "generic") == 0) return Isa::generic;
      if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Isa::avx2;
#if defined(TWISTBEAM_HAVE_NEON_TU)
      if (std::strcmp(env, "neon") == 0) return Isa::neon;
#endif
      return Isa::generic;
    }
    return detect();
  }();
  return isa;
}

}  // namespace twistbeam::simd
