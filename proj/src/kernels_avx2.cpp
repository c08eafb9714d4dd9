// AVX2+FMA variants of the batch kernels.  This translation unit is the only
// one compiled with -mavx2 -mfma; it is reached solely through the dispatch
// table after a runtime CPU check.

#include "sphandle/kernels.hpp"

#if defined(SPHANDLE_HAVE_AVX2)

#include <immintrin.h>

namespace sphandle::kernels::detail {

namespace {

void azcan_fenn_avx2(std::size_t n, const double* ax, const double* ay,
                     const double* az, const double* bx, const double* by,
                     const double* bz, double* ox, double* oy, double* oz) {
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vax = _mm256_loadu_pd(ax + i);
    const __m256d vay = _mm256_loadu_pd(ay + i);
    const __m256d vaz = _mm256_loadu_pd(az + i);
    const __m256d vbx = _mm256_loadu_pd(bx + i);
    const __m256d vby = _mm256_loadu_pd(by + i);
    const __m256d vbz = _mm256_loadu_pd(bz + i);
    __m256d d = _mm256_mul_pd(vax, vbx);
    d = _mm256_fmadd_pd(vay, vby, d);
    d = _mm256_fmadd_pd(vaz, vbz, d);
    const __m256d t = _mm256_mul_pd(two, d);
    _mm256_storeu_pd(ox + i, _mm256_fmsub_pd(t, vbx, vax));
    _mm256_storeu_pd(oy + i, _mm256_fmsub_pd(t, vby, vay));
    _mm256_storeu_pd(oz + i, _mm256_fmsub_pd(t, vbz, vaz));
  }
  for (; i < n; ++i) {
    const double d = ax[i] * bx[i] + ay[i] * by[i] + az[i] * bz[i];
    const double t = 2.0 * d;
    ox[i] = t * bx[i] - ax[i];
    oy[i] = t * by[i] - ay[i];
    oz[i] = t * bz[i] - az[i];
  }
}

void rotate_axis_angle_avx2(std::size_t n, const double* ux, const double* uy,
                            const double* uz, const double* kx,
                            const double* ky, const double* kz, double c,
                            double s, double* ox, double* oy, double* oz) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  const __m256d vomc = _mm256_set1_pd(1.0 - c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vux = _mm256_loadu_pd(ux + i);
    const __m256d vuy = _mm256_loadu_pd(uy + i);
    const __m256d vuz = _mm256_loadu_pd(uz + i);
    const __m256d vkx = _mm256_loadu_pd(kx + i);
    const __m256d vky = _mm256_loadu_pd(ky + i);
    const __m256d vkz = _mm256_loadu_pd(kz + i);

    const __m256d cx = _mm256_fmsub_pd(vky, vuz, _mm256_mul_pd(vkz, vuy));
    const __m256d cy = _mm256_fmsub_pd(vkz, vux, _mm256_mul_pd(vkx, vuz));
    const __m256d cz = _mm256_fmsub_pd(vkx, vuy, _mm256_mul_pd(vky, vux));

    __m256d d = _mm256_mul_pd(vkx, vux);
    d = _mm256_fmadd_pd(vky, vuy, d);
    d = _mm256_fmadd_pd(vkz, vuz, d);
    const __m256d m = _mm256_mul_pd(d, vomc);

    __m256d rx = _mm256_mul_pd(vux, vc);
    rx = _mm256_fmadd_pd(cx, vs, rx);
    rx = _mm256_fmadd_pd(vkx, m, rx);
    __m256d ry = _mm256_mul_pd(vuy, vc);
    ry = _mm256_fmadd_pd(cy, vs, ry);
    ry = _mm256_fmadd_pd(vky, m, ry);
    __m256d rz = _mm256_mul_pd(vuz, vc);
    rz = _mm256_fmadd_pd(cz, vs, rz);
    rz = _mm256_fmadd_pd(vkz, m, rz);

    _mm256_storeu_pd(ox + i, rx);
    _mm256_storeu_pd(oy + i, ry);
    _mm256_storeu_pd(oz + i, rz);
  }
  const double omc = 1.0 - c;
  for (; i < n; ++i) {
    const double cx = ky[i] * uz[i] - kz[i] * uy[i];
    const double cy = kz[i] * ux[i] - kx[i] * uz[i];
    const double cz = kx[i] * uy[i] - ky[i] * ux[i];
    const double d = kx[i] * ux[i] + ky[i] * uy[i] + kz[i] * uz[i];
    const double m = d * omc;
    ox[i] = ux[i] * c + cx * s + kx[i] * m;
    oy[i] = uy[i] * c + cy * s + ky[i] * m;
    oz[i] = uz[i] * c + cz * s + kz[i] * m;
  }
}

void qmul_avx2(std::size_t n, const double* aw, const double* ax,
               const double* ay, const double* az, const double* bw,
               const double* bx, const double* by, const double* bz, double* ow,
               double* ox, double* oy, double* oz) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vaw = _mm256_loadu_pd(aw + i);
    const __m256d vax = _mm256_loadu_pd(ax + i);
    const __m256d vay = _mm256_loadu_pd(ay + i);
    const __m256d vaz = _mm256_loadu_pd(az + i);
    const __m256d vbw = _mm256_loadu_pd(bw + i);
    const __m256d vbx = _mm256_loadu_pd(bx + i);
    const __m256d vby = _mm256_loadu_pd(by + i);
    const __m256d vbz = _mm256_loadu_pd(bz + i);

    __m256d w = _mm256_mul_pd(vaw, vbw);
    w = _mm256_fnmadd_pd(vax, vbx, w);
    w = _mm256_fnmadd_pd(vay, vby, w);
    w = _mm256_fnmadd_pd(vaz, vbz, w);

    __m256d x = _mm256_mul_pd(vaw, vbx);
    x = _mm256_fmadd_pd(vax, vbw, x);
    x = _mm256_fmadd_pd(vay, vbz, x);
    x = _mm256_fnmadd_pd(vaz, vby, x);

    __m256d y = _mm256_mul_pd(vaw, vby);
    y = _mm256_fnmadd_pd(vax, vbz, y);
    y = _mm256_fmadd_pd(vay, vbw, y);
    y = _mm256_fmadd_pd(vaz, vbx, y);

    __m256d z = _mm256_mul_pd(vaw, vbz);
    z = _mm256_fmadd_pd(vax, vby, z);
    z = _mm256_fnmadd_pd(vay, vbx, z);
    z = _mm256_fmadd_pd(vaz, vbw, z);

    _mm256_storeu_pd(ow + i, w);
    _mm256_storeu_pd(ox + i, x);
    _mm256_storeu_pd(oy + i, y);
    _mm256_storeu_pd(oz + i, z);
  }
  for (; i < n; ++i) {
    ow[i] = aw[i] * bw[i] - ax[i] * bx[i] - ay[i] * by[i] - az[i] * bz[i];
    ox[i] = aw[i] * bx[i] + ax[i] * bw[i] + ay[i] * bz[i] - az[i] * by[i];
    oy[i] = aw[i] * by[i] - ax[i] * bz[i] + ay[i] * bw[i] + az[i] * bx[i];
    oz[i] = aw[i] * bz[i] + ax[i] * by[i] - ay[i] * bx[i] + az[i] * bw[i];
  }
}

void dot3_avx2(std::size_t n, const double* ax, const double* ay,
               const double* az, const double* bx, const double* by,
               const double* bz, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_mul_pd(_mm256_loadu_pd(ax + i), _mm256_loadu_pd(bx + i));
    d = _mm256_fmadd_pd(_mm256_loadu_pd(ay + i), _mm256_loadu_pd(by + i), d);
    d = _mm256_fmadd_pd(_mm256_loadu_pd(az + i), _mm256_loadu_pd(bz + i), d);
    _mm256_storeu_pd(out + i, d);
  }
  for (; i < n; ++i) {
    out[i] = ax[i] * bx[i] + ay[i] * by[i] + az[i] * bz[i];
  }
}

const Api kAvx2{
    "avx2", azcan_fenn_avx2, rotate_axis_angle_avx2, qmul_avx2, dot3_avx2,
};

}  // namespace

const Api& avx2_table() { return kAvx2; }

}  // namespace sphandle::kernels::detail

#endif  // SPHANDLE_HAVE_AVX2
