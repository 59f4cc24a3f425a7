#include "qnf/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define QNF_HAVE_AVX2_TU 1
#include <immintrin.h>
#else
#define QNF_HAVE_AVX2_TU 0
#endif

namespace qnf::kernels {

#if QNF_HAVE_AVX2_TU

namespace avx2 {

// Each __m256d holds two interleaved complex values (re0, im0, re1, im1).
// The functions carry a target attribute instead of the TU being compiled with
// -mavx2, so no AVX2 code can leak into inline functions shared with other TUs.

#define QNF_AVX2 __attribute__((target("avx2,fma")))

QNF_AVX2 static inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

// Sum of the even lanes minus the odd lanes.
QNF_AVX2 static inline double hdiff(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(lo) - _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

QNF_AVX2 static cplx dotu(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d same0 = _mm256_setzero_pd(), same1 = _mm256_setzero_pd();
  __m256d cross0 = _mm256_setzero_pd(), cross1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * k), a1 = _mm256_loadu_pd(pa + 2 * k + 4);
    const __m256d b0 = _mm256_loadu_pd(pb + 2 * k), b1 = _mm256_loadu_pd(pb + 2 * k + 4);
    same0 = _mm256_fmadd_pd(a0, b0, same0);
    same1 = _mm256_fmadd_pd(a1, b1, same1);
    cross0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0x5), cross0);
    cross1 = _mm256_fmadd_pd(a1, _mm256_permute_pd(b1, 0x5), cross1);
  }
  for (; k + 2 <= n; k += 2) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * k), b0 = _mm256_loadu_pd(pb + 2 * k);
    same0 = _mm256_fmadd_pd(a0, b0, same0);
    cross0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0x5), cross0);
  }
  // same = (ar*br, ai*bi), cross = (ar*bi, ai*br)
  double re = hdiff(_mm256_add_pd(same0, same1));
  double im = hsum(_mm256_add_pd(cross0, cross1));
  const cplx tail = scalar::dotu(a + k, b + k, n - k);
  return {re + tail.real(), im + tail.imag()};
}

QNF_AVX2 static cplx dotc(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d same0 = _mm256_setzero_pd(), same1 = _mm256_setzero_pd();
  __m256d cross0 = _mm256_setzero_pd(), cross1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * k), a1 = _mm256_loadu_pd(pa + 2 * k + 4);
    const __m256d b0 = _mm256_loadu_pd(pb + 2 * k), b1 = _mm256_loadu_pd(pb + 2 * k + 4);
    same0 = _mm256_fmadd_pd(a0, b0, same0);
    same1 = _mm256_fmadd_pd(a1, b1, same1);
    cross0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0x5), cross0);
    cross1 = _mm256_fmadd_pd(a1, _mm256_permute_pd(b1, 0x5), cross1);
  }
  for (; k + 2 <= n; k += 2) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * k), b0 = _mm256_loadu_pd(pb + 2 * k);
    same0 = _mm256_fmadd_pd(a0, b0, same0);
    cross0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0x5), cross0);
  }
  double re = hsum(_mm256_add_pd(same0, same1));
  double im = hdiff(_mm256_add_pd(cross0, cross1));
  const cplx tail = scalar::dotc(a + k, b + k, n - k);
  return {re + tail.real(), im + tail.imag()};
}

QNF_AVX2 static void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* py = reinterpret_cast<double*>(y);
  const __m256d p = _mm256_set1_pd(alpha.real());
  const __m256d q = _mm256_set1_pd(alpha.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = _mm256_loadu_pd(px + 2 * k);
    const __m256d qx = _mm256_mul_pd(_mm256_permute_pd(xv, 0x5), q);  // (q*xi, q*xr)
    const __m256d prod = _mm256_fmaddsub_pd(xv, p, qx);                // (p*xr - q*xi, p*xi + q*xr)
    _mm256_storeu_pd(py + 2 * k, _mm256_add_pd(_mm256_loadu_pd(py + 2 * k), prod));
  }
  scalar::axpy(alpha, x + k, y + k, n - k);
}

#undef QNF_AVX2

}  // namespace avx2

const KernelTable* avx2_table() noexcept {
  static const KernelTable table{Isa::Avx2, &avx2::dotu, &avx2::dotc, &avx2::axpy};
  return &table;
}

#else

const KernelTable* avx2_table() noexcept { return nullptr; }

#endif

}  // namespace qnf::kernels
