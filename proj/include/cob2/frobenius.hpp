#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cob2/exact_linalg.hpp"
#include "cob2/term.hpp"

namespace cob2 {

/// Finite-dimensional commutative algebra with counit, by structure
/// constants: product is dim x dim^2 with column i*dim+j holding the
/// coefficients of e_i * e_j.
template <class Scalar>
struct FrobeniusAlgebra {
  Eigen::Index dim = 0;
  std::vector<std::string> basis;
  DenseMatrix<Scalar> product;
  DenseVector<Scalar> unit;
  DenseMatrix<Scalar> counit;  // 1 x dim

  Scalar structure_constant(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    return product(k, i * dim + j);
  }
};

/// Comultiplication and pairing reconstructed from a nondegenerate counit.
template <class Scalar>
struct DerivedCoalgebra {
  DenseMatrix<Scalar> comul;  // dim^2 x dim
  DenseMatrix<Scalar> pairing;
  DenseMatrix<Scalar> pairing_inverse;
};

struct ValidationReport {
  struct Entry {
    std::string axiom;
    bool pass = true;
    std::string witness;  // offending basis indices when pass is false
  };
  std::vector<Entry> entries;

  bool ok() const {
    for (const Entry& e : entries)
      if (!e.pass) return false;
    return true;
  }
  void add(const std::string& axiom, bool pass, const std::string& witness = "") {
    entries.push_back({axiom, pass, witness});
  }
  std::string summary() const {
    std::ostringstream os;
    for (const Entry& e : entries) {
      os << e.axiom << ": " << (e.pass ? "pass" : "FAIL");
      if (!e.pass && !e.witness.empty()) os << " (" << e.witness << ")";
      os << "\n";
    }
    return os.str();
  }
};

struct ValidationFailure : std::runtime_error {
  ValidationFailure(const std::string& what, ValidationReport rep)
      : std::runtime_error(what + "\n" + rep.summary()), report(std::move(rep)) {}
  ValidationReport report;
};

struct MissingThetaError : std::runtime_error {
  MissingThetaError()
      : std::runtime_error("term uses theta but no Moebius element is available") {}
};

template <class Scalar>
DenseVector<Scalar> algebra_mul(const FrobeniusAlgebra<Scalar>& a,
                                const DenseVector<Scalar>& x,
                                const DenseVector<Scalar>& y) {
  DenseVector<Scalar> r = DenseVector<Scalar>::Zero(a.dim);
  for (Eigen::Index i = 0; i < a.dim; ++i) {
    if (x(i) == Scalar(0)) continue;
    for (Eigen::Index j = 0; j < a.dim; ++j) {
      if (y(j) == Scalar(0)) continue;
      Scalar f = x(i) * y(j);
      for (Eigen::Index k = 0; k < a.dim; ++k) {
        Scalar c = a.structure_constant(i, j, k);
        if (!(c == Scalar(0))) r(k) += f * c;
      }
    }
  }
  return r;
}

/// Matrix of right multiplication by e_i acting on coefficient vectors.
template <class Scalar>
DenseMatrix<Scalar> right_multiplication(const FrobeniusAlgebra<Scalar>& a, Eigen::Index i) {
  DenseMatrix<Scalar> m(a.dim, a.dim);
  for (Eigen::Index b = 0; b < a.dim; ++b)
    for (Eigen::Index r = 0; r < a.dim; ++r) m(r, b) = a.structure_constant(b, i, r);
  return m;
}

template <class Scalar>
DenseMatrix<Scalar> pairing_matrix(const FrobeniusAlgebra<Scalar>& a) {
  DenseMatrix<Scalar> g(a.dim, a.dim);
  for (Eigen::Index i = 0; i < a.dim; ++i)
    for (Eigen::Index j = 0; j < a.dim; ++j) {
      Scalar v = Scalar(0);
      for (Eigen::Index k = 0; k < a.dim; ++k)
        v += a.counit(0, k) * a.structure_constant(i, j, k);
      g(i, j) = v;
    }
  return g;
}

template <class Scalar>
ValidationReport validate_algebra(const FrobeniusAlgebra<Scalar>& a) {
  ValidationReport rep;
  const Eigen::Index n = a.dim;

  bool comm = true;
  std::string comm_witness;
  for (Eigen::Index i = 0; i < n && comm; ++i)
    for (Eigen::Index j = i + 1; j < n && comm; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        if (!(a.structure_constant(i, j, k) == a.structure_constant(j, i, k))) {
          comm = false;
          comm_witness = "e" + std::to_string(i) + ", e" + std::to_string(j);
          break;
        }
  rep.add("commutative", comm, comm_witness);

  bool assoc = true;
  std::string assoc_witness;
  for (Eigen::Index i = 0; i < n && assoc; ++i)
    for (Eigen::Index j = 0; j < n && assoc; ++j)
      for (Eigen::Index k = 0; k < n; ++k) {
        DenseVector<Scalar> ei = DenseVector<Scalar>::Zero(n);
        DenseVector<Scalar> ej = DenseVector<Scalar>::Zero(n);
        DenseVector<Scalar> ek = DenseVector<Scalar>::Zero(n);
        ei(i) = Scalar(1);
        ej(j) = Scalar(1);
        ek(k) = Scalar(1);
        DenseVector<Scalar> lhs = algebra_mul(a, algebra_mul(a, ei, ej), ek);
        DenseVector<Scalar> rhs = algebra_mul(a, ei, algebra_mul(a, ej, ek));
        if (!exact_equal(DenseMatrix<Scalar>(lhs), DenseMatrix<Scalar>(rhs))) {
          assoc = false;
          assoc_witness = "e" + std::to_string(i) + ", e" + std::to_string(j) + ", e" +
                          std::to_string(k);
          break;
        }
      }
  rep.add("associative", assoc, assoc_witness);

  bool unital = true;
  std::string unit_witness;
  for (Eigen::Index i = 0; i < n; ++i) {
    DenseVector<Scalar> ei = DenseVector<Scalar>::Zero(n);
    ei(i) = Scalar(1);
    DenseVector<Scalar> left = algebra_mul(a, a.unit, ei);
    DenseVector<Scalar> right = algebra_mul(a, ei, a.unit);
    if (!exact_equal(DenseMatrix<Scalar>(left), DenseMatrix<Scalar>(ei)) ||
        !exact_equal(DenseMatrix<Scalar>(right), DenseMatrix<Scalar>(ei))) {
      unital = false;
      unit_witness = "e" + std::to_string(i);
      break;
    }
  }
  rep.add("unital", unital, unit_witness);

  bool nondegenerate = exact_inverse(pairing_matrix(a)).has_value();
  rep.add("nondegenerate-pairing", nondegenerate,
          nondegenerate ? "" : "counit pairing is singular");
  return rep;
}

struct SingularPairingError : std::runtime_error {
  SingularPairingError() : std::runtime_error("counit pairing is singular") {}
};

/// Delta(a) = sum_{i,j} (g^-1)_{ij} (a e_i) (x) e_j, the coalgebra induced
/// by a nondegenerate pairing.
template <class Scalar>
DerivedCoalgebra<Scalar> derive_comultiplication(const FrobeniusAlgebra<Scalar>& a) {
  const Eigen::Index n = a.dim;
  DerivedCoalgebra<Scalar> co;
  co.pairing = pairing_matrix(a);
  auto inv = exact_inverse(co.pairing);
  if (!inv) throw SingularPairingError();
  co.pairing_inverse = *inv;
  co.comul = DenseMatrix<Scalar>::Zero(n * n, n);
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q) {
        Scalar v = Scalar(0);
        for (Eigen::Index i = 0; i < n; ++i)
          v += co.pairing_inverse(i, q) * a.structure_constant(k, i, p);
        co.comul(p * n + q, k) = v;
      }
  return co;
}

/// The five involution identities: phi^2 = id, phi a map of algebras
/// (multiplication read as m(phi (x) phi) = phi m), unit and counit
/// preservation, and compatibility with the derived comultiplication.
template <class Scalar>
ValidationReport validate_involution(const FrobeniusAlgebra<Scalar>& a,
                                     const DenseMatrix<Scalar>& phi) {
  const Eigen::Index n = a.dim;
  ValidationReport rep;
  DenseMatrix<Scalar> id = DenseMatrix<Scalar>::Identity(n, n);
  rep.add("phi-squared", exact_equal(matmul(phi, phi), id));
  rep.add("phi-multiplicative",
          exact_equal(matmul(a.product, kron(phi, phi)), matmul(phi, a.product)));
  rep.add("phi-unital",
          exact_equal(DenseMatrix<Scalar>(matmul(phi, DenseMatrix<Scalar>(a.unit))),
                      DenseMatrix<Scalar>(a.unit)));
  DerivedCoalgebra<Scalar> co = derive_comultiplication(a);
  rep.add("phi-comultiplicative",
          exact_equal(matmul(co.comul, phi), matmul(kron(phi, phi), co.comul)));
  rep.add("phi-counital", exact_equal(matmul(a.counit, phi), a.counit));
  return rep;
}

/// Image of the once-punctured Klein bottle: m (phi (x) id) Delta u.
template <class Scalar>
DenseVector<Scalar> klein_element(const FrobeniusAlgebra<Scalar>& a,
                                  const DerivedCoalgebra<Scalar>& co,
                                  const DenseMatrix<Scalar>& phi) {
  const Eigen::Index n = a.dim;
  DenseMatrix<Scalar> m = matmul(a.product, kron(phi, identity_matrix<Scalar>(n)));
  m = matmul(m, co.comul);
  return matmul(m, DenseMatrix<Scalar>(a.unit));
}

/// The two Moebius relations: theta * a is phi-fixed for every basis a, and
/// theta^2 equals the punctured Klein bottle element.
template <class Scalar>
ValidationReport check_extended(const FrobeniusAlgebra<Scalar>& a,
                                const DenseMatrix<Scalar>& phi,
                                const DenseVector<Scalar>& theta) {
  const Eigen::Index n = a.dim;
  ValidationReport rep;
  DerivedCoalgebra<Scalar> co = derive_comultiplication(a);
  bool fixed = true;
  std::string witness;
  for (Eigen::Index i = 0; i < n; ++i) {
    DenseVector<Scalar> ei = DenseVector<Scalar>::Zero(n);
    ei(i) = Scalar(1);
    DenseVector<Scalar> prod = algebra_mul(a, theta, ei);
    DenseVector<Scalar> mapped = matmul(phi, DenseMatrix<Scalar>(prod));
    if (!exact_equal(DenseMatrix<Scalar>(mapped), DenseMatrix<Scalar>(prod))) {
      fixed = false;
      witness = "e" + std::to_string(i);
      break;
    }
  }
  rep.add("theta-product-fixed", fixed, witness);
  DenseVector<Scalar> sq = algebra_mul(a, theta, theta);
  DenseVector<Scalar> kb = klein_element(a, co, phi);
  rep.add("theta-squared", exact_equal(DenseMatrix<Scalar>(sq), DenseMatrix<Scalar>(kb)));
  return rep;
}

/// Validated evaluation bundle; construct with make_extended.
template <class Scalar>
struct ExtendedAlgebra {
  FrobeniusAlgebra<Scalar> algebra;
  DerivedCoalgebra<Scalar> coalgebra;
  DenseMatrix<Scalar> involution;
  std::optional<DenseVector<Scalar>> theta;
};

template <class Scalar>
ExtendedAlgebra<Scalar> make_extended(FrobeniusAlgebra<Scalar> a, DenseMatrix<Scalar> phi,
                                      std::optional<DenseVector<Scalar>> theta = std::nullopt) {
  ValidationReport rep = validate_algebra(a);
  if (!rep.ok()) throw ValidationFailure("not a commutative Frobenius algebra", rep);
  ValidationReport irep = validate_involution(a, phi);
  if (!irep.ok()) throw ValidationFailure("not a Frobenius algebra involution", irep);
  if (theta) {
    ValidationReport xrep = check_extended(a, phi, *theta);
    if (!xrep.ok()) throw ValidationFailure("theta fails the extended relations", xrep);
  }
  ExtendedAlgebra<Scalar> e;
  e.coalgebra = derive_comultiplication(a);
  e.algebra = std::move(a);
  e.involution = std::move(phi);
  e.theta = std::move(theta);
  return e;
}

template <class Scalar>
DenseMatrix<Scalar> generator_matrix(Generator g, const ExtendedAlgebra<Scalar>& e) {
  const Eigen::Index n = e.algebra.dim;
  switch (g) {
    case Generator::Mul: return e.algebra.product;
    case Generator::Unit: return DenseMatrix<Scalar>(e.algebra.unit);
    case Generator::Comul: return e.coalgebra.comul;
    case Generator::Counit: return e.algebra.counit;
    case Generator::Swap: return transposition_matrix<Scalar>(n);
    case Generator::Phi: return e.involution;
    case Generator::Theta:
      if (!e.theta) throw MissingThetaError();
      return DenseMatrix<Scalar>(*e.theta);
    case Generator::Id: return DenseMatrix<Scalar>::Identity(n, n);
    case Generator::Empty: return DenseMatrix<Scalar>::Identity(1, 1);
  }
  throw std::logic_error("unknown generator");
}

/// Structural TQFT evaluation: composition is matrix product, tensor is the
/// Kronecker product with the first factor most significant.
template <class Scalar>
DenseMatrix<Scalar> evaluate(const TermPtr& t, const ExtendedAlgebra<Scalar>& e) {
  switch (t->kind()) {
    case Term::Kind::Generator:
      return generator_matrix(t->generator(), e);
    case Term::Kind::Compose:
      return matmul(evaluate(t->left(), e), evaluate(t->right(), e));
    case Term::Kind::Tensor:
      return kron(evaluate(t->left(), e), evaluate(t->right(), e));
  }
  throw std::logic_error("unknown term kind");
}

}  // namespace cob2
