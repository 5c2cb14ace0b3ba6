#pragma once

#include <string>

namespace twistbeam::simd {

enum class Isa { scalar, generic, avx2, neon };

// Widest lane width the selected ISA provides.
int isa_width(Isa isa);

const char* isa_name(Isa isa);

// Best ISA the running CPU supports among the ones compiled in. The
// TWISTBEAM_SIMD environment variable (scalar|generic|avx2|neon) overrides
// the choice; an unsupported request falls back to the generic pack.
Isa active_isa();

bool cpu_has_avx2();

}  // namespace twistbeam::simd
