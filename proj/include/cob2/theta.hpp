#pragma once

#include <optional>
#include <string>

#include "cob2/frobenius.hpp"
#include "cob2/rational.hpp"

namespace cob2 {

struct ThetaResult {
  enum class Status { Found, NoneOverQ, Undetermined };
  Status status = Status::Undetermined;
  std::optional<DenseVector<Rational>> theta;
  std::string detail;
};

/// Searches for a Moebius element: the fixedness relation is linear in
/// theta and cuts out a subspace V; the square relation is a quadratic
/// system on V, solved exactly by eliminating linear and perfect-square
/// equations (branching on square roots). When the reduction stalls, a
/// small candidate probe runs, then an exhaustive search over F_p for
/// p in {3, 5, 7, 11}: a prime with neither a solution nor a nonzero
/// isotropic vector rules out rational solutions outright; anything less
/// conclusive reports "undetermined".
ThetaResult find_theta(const FrobeniusAlgebra<Rational>& algebra,
                       const DenseMatrix<Rational>& phi);

/// Entrywise order used to pick the reported solution: smaller absolute
/// value first, positive before negative on ties, lexicographically.
bool canonical_vector_less(const DenseVector<Rational>& a, const DenseVector<Rational>& b);

}  // namespace cob2
