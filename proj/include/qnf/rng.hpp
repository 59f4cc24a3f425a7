#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qnf/linalg.hpp"
#include "qnf/tensor.hpp"

namespace qnf {

// Seeded generator: std::mt19937_64 with Box-Muller normals, so a given seed
// produces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  double normal();
  // Real and imaginary parts independent standard normals.
  cplx complex_normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

CTensor random_tensor(std::vector<std::size_t> dims, Rng& rng);
CMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);
// Haar-like unitary from Gram-Schmidt on a Gaussian matrix.
CMatrix random_unitary(std::size_t d, Rng& rng);
// Gaussian 2x2 over a principal square root of its determinant; resampled
// while |det| < 1e-6.
CMatrix random_sl2(Rng& rng);
// Product of complex plane rotations with standard normal angles.
CMatrix random_special_orthogonal(std::size_t d, Rng& rng);
// G + G^T for Gaussian G.
CMatrix random_complex_symmetric(std::size_t d, Rng& rng);

}  // namespace qnf
