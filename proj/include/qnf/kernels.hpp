#pragma once
// Complex vector kernels behind flattening Gram products and mode products.
//
// Every kernel has a scalar reference implementation. SIMD variants (AVX2+FMA
// on x86-64, NEON on AArch64) are selected once at first use from what the CPU
// reports; setting QNF_SIMD=scalar in the environment forces the reference
// path. Variants agree with the reference up to floating-point reassociation.

#include <complex>
#include <cstddef>
#include <string_view>

namespace qnf::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;

// sum_k a[k] * b[k]
using DotFn = cplx (*)(const cplx* a, const cplx* b, std::size_t n);
// y[k] += alpha * x[k]
using AxpyFn = void (*)(cplx alpha, const cplx* x, cplx* y, std::size_t n);

struct KernelTable {
  Isa isa;
  DotFn dotu;  // bilinear: sum a*b
  DotFn dotc;  // sesquilinear: sum conj(a)*b
  AxpyFn axpy;
};

namespace scalar {
cplx dotu(const cplx* a, const cplx* b, std::size_t n);
cplx dotc(const cplx* a, const cplx* b, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
}  // namespace scalar

// Null when the variant is not compiled in for this target.
const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;
const KernelTable& scalar_table() noexcept;

// True when the variant is both compiled in and supported by the running CPU.
bool isa_available(Isa isa) noexcept;

// Table chosen at first call; immutable afterwards.
const KernelTable& active() noexcept;

inline cplx dotu(const cplx* a, const cplx* b, std::size_t n) { return active().dotu(a, b, n); }
inline cplx dotc(const cplx* a, const cplx* b, std::size_t n) { return active().dotc(a, b, n); }
inline void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) { active().axpy(alpha, x, y, n); }

}  // namespace qnf::kernels
