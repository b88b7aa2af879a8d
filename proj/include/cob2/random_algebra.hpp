#pragma once

#include <cstdint>
#include <vector>

#include "cob2/frobenius.hpp"
#include "cob2/rational.hpp"

namespace cob2 {

/// Deterministic test-oracle algebra: a product of rational lines with
/// nonzero counit weights and an involution permuting equal-weight factors.
/// Fixed factors draw square-reciprocal weights so a Moebius element always
/// exists; permuted factors carry theta coordinate zero.
struct SeededAlgebra {
  FrobeniusAlgebra<Rational> algebra;
  DenseMatrix<Rational> involution;
  DenseVector<Rational> theta;
  std::vector<int> permutation;
  std::vector<Rational> weights;
};

SeededAlgebra random_involutive_algebra(std::uint64_t seed, int dim);

}  // namespace cob2
