#include "cob2/random_algebra.hpp"

#include <random>
#include <stdexcept>

namespace cob2 {

SeededAlgebra random_involutive_algebra(std::uint64_t seed, int dim) {
  if (dim < 1 || dim > 4) throw std::invalid_argument("seeded family covers dims 1..4");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);

  // Involutive permutation: pair each unmatched slot with the next one
  // on a coin flip.
  std::vector<int> sigma(dim);
  for (int i = 0; i < dim; ++i) sigma[i] = i;
  for (int i = 0; i + 1 < dim; ++i) {
    if (sigma[i] != i) continue;
    if (rng() % 2 == 1) {
      sigma[i] = i + 1;
      sigma[i + 1] = i;
    }
  }

  // Weights per orbit: fixed factors take square reciprocals (so the theta
  // coordinate 1/sqrt(w) is rational), paired factors share any weight.
  const Rational square_pool[] = {Rational(1), Rational(4), Rational(9), Rational(1, 4)};
  const Rational square_roots[] = {Rational(1), Rational(2), Rational(3), Rational(1, 2)};
  const Rational pair_pool[] = {Rational(2), Rational(3), Rational(5), Rational(1, 2),
                                Rational(3, 2)};
  std::vector<Rational> weights(dim);
  std::vector<Rational> theta_coord(dim, Rational(0));
  std::vector<bool> used_square(4, false);
  for (int i = 0; i < dim; ++i) {
    if (sigma[i] == i) {
      // draw without replacement so identity-involution algebras have
      // pairwise distinct weights
      int pick;
      do {
        pick = static_cast<int>(rng() % 4);
      } while (used_square[pick]);
      used_square[pick] = true;
      weights[i] = square_pool[pick];
      theta_coord[i] = Rational(1) / square_roots[pick];
    } else if (sigma[i] > i) {
      Rational w = pair_pool[rng() % 5];
      weights[i] = w;
      weights[sigma[i]] = w;
    }
  }

  SeededAlgebra out;
  FrobeniusAlgebra<Rational>& a = out.algebra;
  a.dim = dim;
  a.basis.resize(dim);
  for (int i = 0; i < dim; ++i) a.basis[i] = "e" + std::to_string(i);
  a.product = DenseMatrix<Rational>::Zero(dim, dim * dim);
  for (int i = 0; i < dim; ++i) a.product(i, i * dim + i) = Rational(1);
  a.unit = DenseVector<Rational>::Constant(dim, Rational(1));
  a.counit = DenseMatrix<Rational>::Zero(1, dim);
  for (int i = 0; i < dim; ++i) a.counit(0, i) = weights[i];

  out.involution = DenseMatrix<Rational>::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) out.involution(sigma[j], j) = Rational(1);
  out.theta = DenseVector<Rational>::Zero(dim);
  for (int i = 0; i < dim; ++i) out.theta(i) = theta_coord[i];
  out.permutation = std::move(sigma);
  out.weights = std::move(weights);
  return out;
}

}  // namespace cob2
