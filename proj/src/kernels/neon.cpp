#include "qnf/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace qnf::kernels {

#if defined(__aarch64__)

namespace neon {

// One complex value per float64x2_t.

static cplx dotu(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  float64x2_t same = vdupq_n_f64(0.0), cross = vdupq_n_f64(0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const float64x2_t av = vld1q_f64(pa + 2 * k);
    const float64x2_t bv = vld1q_f64(pb + 2 * k);
    same = vfmaq_f64(same, av, bv);                    // (ar*br, ai*bi)
    cross = vfmaq_f64(cross, av, vextq_f64(bv, bv, 1));  // (ar*bi, ai*br)
  }
  return {vgetq_lane_f64(same, 0) - vgetq_lane_f64(same, 1), vaddvq_f64(cross)};
}

static cplx dotc(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  float64x2_t same = vdupq_n_f64(0.0), cross = vdupq_n_f64(0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const float64x2_t av = vld1q_f64(pa + 2 * k);
    const float64x2_t bv = vld1q_f64(pb + 2 * k);
    same = vfmaq_f64(same, av, bv);
    cross = vfmaq_f64(cross, av, vextq_f64(bv, bv, 1));
  }
  return {vaddvq_f64(same), vgetq_lane_f64(cross, 0) - vgetq_lane_f64(cross, 1)};
}

static void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* py = reinterpret_cast<double*>(y);
  const float64x2_t p = vdupq_n_f64(alpha.real());
  const double qv[2] = {-alpha.imag(), alpha.imag()};
  const float64x2_t q = vld1q_f64(qv);
  for (std::size_t k = 0; k < n; ++k) {
    const float64x2_t xv = vld1q_f64(px + 2 * k);
    float64x2_t yv = vld1q_f64(py + 2 * k);
    yv = vfmaq_f64(yv, xv, p);
    yv = vfmaq_f64(yv, vextq_f64(xv, xv, 1), q);  // (-q*xi, q*xr)
    vst1q_f64(py + 2 * k, yv);
  }
}

}  // namespace neon

const KernelTable* neon_table() noexcept {
  static const KernelTable table{Isa::Neon, &neon::dotu, &neon::dotc, &neon::axpy};
  return &table;
}

#else

const KernelTable* neon_table() noexcept { return nullptr; }

#endif

}  // namespace qnf::kernels
