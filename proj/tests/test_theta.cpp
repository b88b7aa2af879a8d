#include <doctest.h>

#include "cob2/selftest.hpp"
#include "cob2/theta.hpp"

using namespace cob2;

namespace {

FrobeniusAlgebra<Rational> line(Rational weight) {
  FrobeniusAlgebra<Rational> a;
  a.dim = 1;
  a.basis = {"1"};
  a.product = DenseMatrix<Rational>::Constant(1, 1, Rational(1));
  a.unit = DenseVector<Rational>::Constant(1, Rational(1));
  a.counit = DenseMatrix<Rational>::Constant(1, 1, weight);
  return a;
}

// Q[x]/(x^2 - square) with the trace-like counit (c0, c1).
FrobeniusAlgebra<Rational> quadratic_extension(Rational x_square, Rational c0, Rational c1) {
  FrobeniusAlgebra<Rational> a;
  a.dim = 2;
  a.basis = {"1", "x"};
  a.product = DenseMatrix<Rational>::Zero(2, 4);
  a.product(0, 0) = Rational(1);         // 1*1
  a.product(1, 1) = Rational(1);         // 1*x
  a.product(1, 2) = Rational(1);         // x*1
  a.product(0, 3) = x_square;            // x*x
  a.unit = DenseVector<Rational>::Zero(2);
  a.unit(0) = Rational(1);
  a.counit = DenseMatrix<Rational>::Zero(1, 2);
  a.counit(0, 0) = c0;
  a.counit(0, 1) = c1;
  return a;
}

}  // namespace

TEST_CASE("dual numbers admit no moebius element over the rationals") {
  ThetaResult res = find_theta(dual_numbers_algebra(), identity_matrix<Rational>(2));
  CHECK(res.status == ThetaResult::Status::NoneOverQ);
}

TEST_CASE("the rational line has theta = 1, the positive root is canonical") {
  ThetaResult res = find_theta(line(Rational(1)), identity_matrix<Rational>(1));
  REQUIRE(res.status == ThetaResult::Status::Found);
  CHECK((*res.theta)(0) == Rational(1));
}

TEST_CASE("non-square counit weight rules theta out") {
  ThetaResult res = find_theta(line(Rational(2)), identity_matrix<Rational>(1));
  CHECK(res.status == ThetaResult::Status::NoneOverQ);
}

TEST_CASE("square reciprocal weights give the expected root") {
  ThetaResult res = find_theta(line(Rational(4)), identity_matrix<Rational>(1));
  REQUIRE(res.status == ThetaResult::Status::Found);
  CHECK((*res.theta)(0) == Rational(1, 2));
}

TEST_CASE("the swap involution forces theta = 0 on the pair algebra") {
  ThetaResult res = find_theta(pair_algebra(), pair_swap_involution());
  REQUIRE(res.status == ThetaResult::Status::Found);
  CHECK((*res.theta)(0) == Rational(0));
  CHECK((*res.theta)(1) == Rational(0));
  CHECK(check_extended(pair_algebra(), pair_swap_involution(), *res.theta).ok());
}

TEST_CASE("identity involution on the pair algebra: canonical positive root") {
  ThetaResult res = find_theta(pair_algebra(), identity_matrix<Rational>(2));
  REQUIRE(res.status == ThetaResult::Status::Found);
  CHECK((*res.theta)(0) == Rational(1));
  CHECK((*res.theta)(1) == Rational(1));
}

TEST_CASE("split quadratic extension is solved by the candidate probe") {
  // theta^2 = 1 stalls the rank-one reduction (a^2 + b^2 = 1 is indefinite)
  // but theta = 1 is found by the probe.
  auto a = quadratic_extension(Rational(1), Rational(2), Rational(0));
  REQUIRE(validate_algebra(a).ok());
  ThetaResult res = find_theta(a, identity_matrix<Rational>(2));
  REQUIRE(res.status == ThetaResult::Status::Found);
  CHECK(check_extended(a, identity_matrix<Rational>(2), *res.theta).ok());
}

TEST_CASE("imaginary quadratic extension is refuted modulo a prime") {
  // Here theta = a + bx must satisfy a^2 - b^2 = 0 and 2ab = 1, which has
  // no rational solution; modulo 5 there is neither a solution nor a
  // nonzero isotropic vector, which settles it exactly.
  auto a = quadratic_extension(Rational(-1), Rational(0), Rational(2));
  REQUIRE(validate_algebra(a).ok());
  ThetaResult res = find_theta(a, identity_matrix<Rational>(2));
  CHECK(res.status == ThetaResult::Status::NoneOverQ);
  CHECK(res.detail.find("modulo") != std::string::npos);
}

TEST_CASE("large-height roots stay out of reach and report undetermined") {
  // Here theta = 5/7 exists (theta^2 = 25/49 on the split factor basis) but
  // the indefinite reduction stalls, the probe grid misses it, and every
  // prime admits solutions, so the solver honestly gives up.
  auto a = quadratic_extension(Rational(1), Rational(98, 25), Rational(0));
  REQUIRE(validate_algebra(a).ok());
  ThetaResult res = find_theta(a, identity_matrix<Rational>(2));
  CHECK(res.status == ThetaResult::Status::Undetermined);
}

TEST_CASE("seeded algebras rediscover their construction theta") {
  for (int seed = 0; seed < 12; ++seed) {
    SeededAlgebra sa = random_involutive_algebra(seed, seed % 4 + 1);
    ThetaResult res = find_theta(sa.algebra, sa.involution);
    REQUIRE(res.status == ThetaResult::Status::Found);
    CHECK(check_extended(sa.algebra, sa.involution, *res.theta).ok());
  }
}

TEST_CASE("canonical vector order prefers small magnitude then positive sign") {
  DenseVector<Rational> a = DenseVector<Rational>::Zero(2);
  DenseVector<Rational> b = DenseVector<Rational>::Zero(2);
  a(0) = Rational(1);
  b(0) = Rational(-1);
  CHECK(canonical_vector_less(a, b));
  b(0) = Rational(1, 2);
  CHECK(canonical_vector_less(b, a));
}
