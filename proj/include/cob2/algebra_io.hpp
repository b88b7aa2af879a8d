#pragma once

#include <optional>
#include <string>

#include "cob2/frobenius.hpp"
#include "cob2/rational.hpp"

namespace cob2 {

struct AlgebraIoError : std::runtime_error {
  explicit AlgebraIoError(const std::string& what) : std::runtime_error(what) {}
};

/// Contents of an algebra spec file: the algebra, an involution matrix
/// (identity when omitted) and an optional Moebius element.
struct AlgebraSpec {
  FrobeniusAlgebra<Rational> algebra;
  DenseMatrix<Rational> involution;
  std::optional<DenseVector<Rational>> theta;
};

AlgebraSpec load_algebra_file(const std::string& path);
AlgebraSpec parse_algebra_json(const std::string& text);

}  // namespace cob2
