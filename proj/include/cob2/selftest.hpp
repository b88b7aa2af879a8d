#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cob2/frobenius.hpp"
#include "cob2/random_algebra.hpp"
#include "cob2/rational.hpp"

namespace cob2 {

/// The cohomology-of-the-projective-line style algebra Q[x]/(x^2) with
/// counit (0, 1); ships as cp1.json.
FrobeniusAlgebra<Rational> dual_numbers_algebra();

/// Q x Q with the sum counit; the coordinate swap is an involution on it.
FrobeniusAlgebra<Rational> pair_algebra();
DenseMatrix<Rational> pair_swap_involution();

struct SuiteResult {
  std::string name;
  bool pass = true;
  long checked = 0;
  std::string detail;  // first failing witness, or informational notes
};

struct SelftestOptions {
  std::uint64_t seed = 0;
  long cases = 200;
};

/// Runs every verification suite: the defining relations topologically (in
/// random contexts too) and as exact matrix identities, the two rewriting
/// chains for the twice-punctured Klein bottle, the parity characterization
/// with its constructive crosscap-free synthesis, composition closure, the
/// randomized evaluation oracle, the identity-involution section property,
/// and a logged distinguishing-power probe. Deterministic for a fixed seed.
std::vector<SuiteResult> run_selftest(const SelftestOptions& opts);

bool all_pass(const std::vector<SuiteResult>& results);

}  // namespace cob2
