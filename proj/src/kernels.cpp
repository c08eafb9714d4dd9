#include "sphandle/kernels.hpp"

#include <cstdlib>

namespace sphandle::kernels {

namespace {

void azcan_fenn_scalar(std::size_t n, const double* ax, const double* ay,
                       const double* az, const double* bx, const double* by,
                       const double* bz, double* ox, double* oy, double* oz) {
  for (std::size_t i = 0; i < n; ++i) {
    const double d = ax[i] * bx[i] + ay[i] * by[i] + az[i] * bz[i];
    const double t = 2.0 * d;
    ox[i] = t * bx[i] - ax[i];
    oy[i] = t * by[i] - ay[i];
    oz[i] = t * bz[i] - az[i];
  }
}

void rotate_axis_angle_scalar(std::size_t n, const double* ux, const double* uy,
                              const double* uz, const double* kx,
                              const double* ky, const double* kz, double c,
                              double s, double* ox, double* oy, double* oz) {
  const double one_minus_c = 1.0 - c;
  for (std::size_t i = 0; i < n; ++i) {
    const double cx = ky[i] * uz[i] - kz[i] * uy[i];
    const double cy = kz[i] * ux[i] - kx[i] * uz[i];
    const double cz = kx[i] * uy[i] - ky[i] * ux[i];
    const double d = kx[i] * ux[i] + ky[i] * uy[i] + kz[i] * uz[i];
    const double m = d * one_minus_c;
    ox[i] = ux[i] * c + cx * s + kx[i] * m;
    oy[i] = uy[i] * c + cy * s + ky[i] * m;
    oz[i] = uz[i] * c + cz * s + kz[i] * m;
  }
}

void qmul_scalar(std::size_t n, const double* aw, const double* ax,
                 const double* ay, const double* az, const double* bw,
                 const double* bx, const double* by, const double* bz,
                 double* ow, double* ox, double* oy, double* oz) {
  for (std::size_t i = 0; i < n; ++i) {
    ow[i] = aw[i] * bw[i] - ax[i] * bx[i] - ay[i] * by[i] - az[i] * bz[i];
    ox[i] = aw[i] * bx[i] + ax[i] * bw[i] + ay[i] * bz[i] - az[i] * by[i];
    oy[i] = aw[i] * by[i] - ax[i] * bz[i] + ay[i] * bw[i] + az[i] * bx[i];
    oz[i] = aw[i] * bz[i] + ax[i] * by[i] - ay[i] * bx[i] + az[i] * bw[i];
  }
}

void dot3_scalar(std::size_t n, const double* ax, const double* ay,
                 const double* az, const double* bx, const double* by,
                 const double* bz, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = ax[i] * bx[i] + ay[i] * by[i] + az[i] * bz[i];
  }
}

const Api kScalar{
    "scalar", azcan_fenn_scalar, rotate_axis_angle_scalar, qmul_scalar,
    dot3_scalar,
};

}  // namespace

const Api& scalar() { return kScalar; }

#if defined(SPHANDLE_HAVE_AVX2)
namespace detail {
const Api& avx2_table();
}

const Api* avx2() {
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &detail::avx2_table() : nullptr;
}
#else
const Api* avx2() { return nullptr; }
#endif

const Api* by_name(std::string_view name) {
  if (name == "scalar") return &kScalar;
  if (name == "avx2") return avx2();
  return nullptr;
}

const Api& active() {
  static const Api* chosen = [] {
    if (const char* env = std::getenv("SPHANDLE_KERNEL")) {
      if (const Api* api = by_name(env)) return api;
    }
    if (const Api* api = avx2()) return api;
    return &kScalar;
  }();
  return *chosen;
}

}  // namespace sphandle::kernels
