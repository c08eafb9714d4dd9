#pragma once

#include <cstddef>
#include <string_view>

namespace sphandle::kernels {

// Batch arithmetic over structure-of-arrays buffers.  These are the inner
// loops of the sampled verification paths (axiom residuals over 10^4 random
// triples, isomorphism checks), where the per-element formulas are pure
// mul/add chains with all transcendentals hoisted to constants.
//
// Every entry point has a scalar reference implementation and an AVX2+FMA
// variant; the active table is picked once at runtime from CPU support and
// can be forced with SPHANDLE_KERNEL=scalar|avx2.
struct Api {
  const char* name;

  // o = 2 <a,b> b - a, elementwise over 3-vectors.
  void (*azcan_fenn)(std::size_t n, const double* ax, const double* ay,
                     const double* az, const double* bx, const double* by,
                     const double* bz, double* ox, double* oy, double* oz);

  // Rodrigues rotation of u about the unit axis k by the fixed angle with
  // cosine c and sine s: o = u c + (k x u) s + k <k,u> (1 - c).
  void (*rotate_axis_angle)(std::size_t n, const double* ux, const double* uy,
                            const double* uz, const double* kx, const double* ky,
                            const double* kz, double c, double s, double* ox,
                            double* oy, double* oz);

  // Hamilton product, no renormalization.
  void (*qmul)(std::size_t n, const double* aw, const double* ax,
               const double* ay, const double* az, const double* bw,
               const double* bx, const double* by, const double* bz, double* ow,
               double* ox, double* oy, double* oz);

  void (*dot3)(std::size_t n, const double* ax, const double* ay,
               const double* az, const double* bx, const double* by,
               const double* bz, double* out);
};

const Api& scalar();

// avx2() is non-null only when the build has the AVX2 translation unit and the
// CPU reports AVX2+FMA.
const Api* avx2();

// Table selected at first use: SPHANDLE_KERNEL env override, else AVX2 when
// available, else scalar.
const Api& active();

// Lookup by name for tests; nullptr when the variant is unavailable.
const Api* by_name(std::string_view name);

}  // namespace sphandle::kernels
