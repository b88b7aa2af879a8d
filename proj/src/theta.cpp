#include "cob2/theta.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "cob2/modular.hpp"

namespace cob2 {

bool canonical_vector_less(const DenseVector<Rational>& a, const DenseVector<Rational>& b) {
  auto key_less = [](const Rational& x, const Rational& y) {
    Rational ax = abs(x), ay = abs(y);
    if (ax != ay) return ax < ay;
    return !x.is_negative() && y.is_negative();
  };
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return key_less(a(i), b(i));
  }
  return false;
}

namespace {

// One equation t^T Q t + l . t + c0 = 0 over the current variables.
struct QuadEq {
  DenseMatrix<Rational> q;
  DenseVector<Rational> l;
  Rational c0;

  bool q_zero() const {
    for (Eigen::Index j = 0; j < q.cols(); ++j)
      for (Eigen::Index i = 0; i < q.rows(); ++i)
        if (!(q(i, j) == Rational(0))) return false;
    return true;
  }
  bool l_zero() const {
    for (Eigen::Index i = 0; i < l.size(); ++i)
      if (!(l(i) == Rational(0))) return false;
    return true;
  }
};

struct SolveState {
  std::vector<QuadEq> eqs;
  DenseMatrix<Rational> map;    // original vars = map * current + shift
  DenseVector<Rational> shift;
};

// Applies t = s_mat * t' + s_vec to every equation.
SolveState substituted(const SolveState& st, const DenseMatrix<Rational>& s_mat,
                       const DenseVector<Rational>& s_vec) {
  SolveState out;
  out.map = matmul(st.map, s_mat);
  out.shift = st.shift + DenseVector<Rational>(matmul(st.map, DenseMatrix<Rational>(s_vec)));
  out.eqs.reserve(st.eqs.size());
  for (const QuadEq& e : st.eqs) {
    QuadEq ne;
    DenseMatrix<Rational> qs = matmul(e.q, s_mat);
    ne.q = matmul(DenseMatrix<Rational>(s_mat.transpose()), qs);
    DenseVector<Rational> inner = Rational(2) * matmul(e.q, DenseMatrix<Rational>(s_vec));
    inner += e.l;
    ne.l = matmul(DenseMatrix<Rational>(s_mat.transpose()), DenseMatrix<Rational>(inner));
    Rational c0 = e.c0;
    DenseVector<Rational> qv = matmul(e.q, DenseMatrix<Rational>(s_vec));
    for (Eigen::Index i = 0; i < s_vec.size(); ++i)
      c0 += s_vec(i) * qv(i) + e.l(i) * s_vec(i);
    ne.c0 = c0;
    out.eqs.push_back(std::move(ne));
  }
  return out;
}

// Eliminates variable j by the affine relation t_j = coeffs . t' + offset.
SolveState eliminated(const SolveState& st, Eigen::Index j,
                      const DenseVector<Rational>& coeffs, const Rational& offset) {
  Eigen::Index d = st.map.cols();
  DenseMatrix<Rational> s_mat = DenseMatrix<Rational>::Zero(d, d - 1);
  DenseVector<Rational> s_vec = DenseVector<Rational>::Zero(d);
  Eigen::Index col = 0;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (i == j) continue;
    s_mat(i, col) = Rational(1);
    s_mat(j, col) = coeffs(col);
    ++col;
  }
  s_vec(j) = offset;
  return substituted(st, s_mat, s_vec);
}

// Rank-one detection: q == lambda * w w^T with w's first nonzero entry 1.
bool rank_one_form(const DenseMatrix<Rational>& q, DenseVector<Rational>* w, Rational* lambda) {
  Eigen::Index d = q.rows();
  Eigen::Index pivot = -1;
  for (Eigen::Index i = 0; i < d && pivot < 0; ++i)
    if (!(q(i, i) == Rational(0))) pivot = i;
  if (pivot < 0) return false;  // zero diagonal but q nonzero: not a square
  Rational lam = q(pivot, pivot);
  DenseVector<Rational> vec = DenseVector<Rational>::Zero(d);
  for (Eigen::Index i = 0; i < d; ++i) vec(i) = q(pivot, i) / lam;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      if (!(q(i, j) == lam * vec(i) * vec(j))) return false;
  *w = vec;
  *lambda = lam;
  return true;
}

// All rational roots of a s^2 + b s + c = 0 (a may be zero).
bool rational_roots(const Rational& a, const Rational& b, const Rational& c,
                    std::vector<Rational>* roots) {
  roots->clear();
  if (a == Rational(0)) {
    if (b == Rational(0)) return c == Rational(0);  // true: identically zero
    roots->push_back(-c / b);
    return true;
  }
  Rational disc = b * b - Rational(4) * a * c;
  Rational sq;
  if (!rational_sqrt(disc, &sq)) return true;  // no rational root, not an identity
  roots->push_back((-b + sq) / (Rational(2) * a));
  if (!(sq == Rational(0))) roots->push_back((-b - sq) / (Rational(2) * a));
  return true;
}

struct SearchOutcome {
  std::vector<DenseVector<Rational>> solutions;  // in original t coordinates
  bool stuck = false;
};

void solve_system(SolveState st, SearchOutcome* out, int depth = 0) {
  if (depth > 64) {  // unreachable for the dimensions at hand
    out->stuck = true;
    return;
  }
  Eigen::Index d = st.map.cols();

  // Constant and trivially-true equations first.
  std::vector<QuadEq> live;
  for (QuadEq& e : st.eqs) {
    if (e.q_zero() && e.l_zero()) {
      if (!(e.c0 == Rational(0))) return;  // contradiction: dead branch
      continue;
    }
    live.push_back(std::move(e));
  }
  st.eqs = std::move(live);

  if (st.eqs.empty()) {
    out->solutions.push_back(st.shift);  // free variables pinned to zero
    return;
  }
  if (d == 0) return;  // handled above: remaining equations are contradictions

  // Prefer a linear equation: eliminate one variable.
  for (std::size_t idx = 0; idx < st.eqs.size(); ++idx) {
    const QuadEq& e = st.eqs[idx];
    if (!e.q_zero()) continue;
    Eigen::Index j = -1;
    for (Eigen::Index i = 0; i < d; ++i)
      if (!(e.l(i) == Rational(0))) {
        j = i;
        break;
      }
    DenseVector<Rational> coeffs = DenseVector<Rational>::Zero(d - 1);
    Eigen::Index col = 0;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (i == j) continue;
      coeffs(col++) = -e.l(i) / e.l(j);
    }
    Rational offset = -e.c0 / e.l(j);
    solve_system(eliminated(st, j, coeffs, offset), out, depth + 1);
    return;
  }

  // Then a perfect-square equation: branch on the two roots.
  for (std::size_t idx = 0; idx < st.eqs.size(); ++idx) {
    const QuadEq& e = st.eqs[idx];
    DenseVector<Rational> w;
    Rational lambda;
    if (!rank_one_form(e.q, &w, &lambda)) continue;
    // Linear part must be a multiple of w for the square to complete.
    Eigen::Index wnz = -1;
    for (Eigen::Index i = 0; i < d; ++i)
      if (!(w(i) == Rational(0))) {
        wnz = i;
        break;
      }
    Rational mu = e.l(wnz) / w(wnz);
    bool parallel = true;
    for (Eigen::Index i = 0; i < d; ++i)
      if (!(e.l(i) == mu * w(i))) {
        parallel = false;
        break;
      }
    if (!parallel) continue;
    std::vector<Rational> roots;
    rational_roots(lambda, mu, e.c0, &roots);
    for (const Rational& root : roots) {
      // w . t = root becomes a linear constraint; reuse the linear path.
      SolveState branch = st;
      QuadEq lin;
      lin.q = DenseMatrix<Rational>::Zero(d, d);
      lin.l = w;
      lin.c0 = -root;
      branch.eqs.erase(branch.eqs.begin() + static_cast<long>(idx));
      branch.eqs.push_back(std::move(lin));
      solve_system(std::move(branch), out, depth + 1);
    }
    return;  // roots empty: the branch is dead
  }

  out->stuck = true;
}

DenseMatrix<Rational> moebius_constraints(const FrobeniusAlgebra<Rational>& a,
                                          const DenseMatrix<Rational>& phi) {
  const Eigen::Index n = a.dim;
  DenseMatrix<Rational> delta = phi - DenseMatrix<Rational>::Identity(n, n);
  DenseMatrix<Rational> rows = DenseMatrix<Rational>::Zero(n * n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    rows.block(i * n, 0, n, n) = matmul(delta, right_multiplication(a, i));
  return rows;
}

// Integral primitive rescaling of each column (clears denominators, divides
// by the content); needed for the mod-p reasoning.
DenseMatrix<Rational> primitive_columns(DenseMatrix<Rational> v) {
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    long long den_lcm = 1;
    for (Eigen::Index r = 0; r < v.rows(); ++r)
      den_lcm = std::lcm(den_lcm, v(r, c).den());
    long long num_gcd = 0;
    for (Eigen::Index r = 0; r < v.rows(); ++r) {
      v(r, c) *= Rational(den_lcm);
      num_gcd = std::gcd(num_gcd, v(r, c).num());
    }
    if (num_gcd > 1)
      for (Eigen::Index r = 0; r < v.rows(); ++r) v(r, c) /= Rational(num_gcd);
  }
  return v;
}

enum class ModOutcome { Skip, RefutesRational, Inconclusive };

template <int P>
ModOutcome mod_p_search(const FrobeniusAlgebra<Rational>& a, const DenseMatrix<Rational>& phi,
                        const DenseMatrix<Rational>& vbasis, const DenseVector<Rational>& c) {
  const Eigen::Index n = a.dim;
  const Eigen::Index d = vbasis.cols();

  auto reduce_matrix = [](const DenseMatrix<Rational>& m,
                          DenseMatrix<Fp<P>>* out) -> bool {
    out->resize(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        auto r = reduce_mod<P>(m(i, j));
        if (!r) return false;
        (*out)(i, j) = *r;
      }
    return true;
  };

  DenseMatrix<Fp<P>> product_p, phi_p, v_p, c_p;
  if (!reduce_matrix(a.product, &product_p)) return ModOutcome::Skip;
  if (!reduce_matrix(phi, &phi_p)) return ModOutcome::Skip;
  if (!reduce_matrix(vbasis, &v_p)) return ModOutcome::Skip;
  if (!reduce_matrix(DenseMatrix<Rational>(c), &c_p)) return ModOutcome::Skip;

  // The reduced basis must stay independent and still span the full mod-p
  // solution space of the linear relation, otherwise the lattice argument
  // does not apply.
  DenseMatrix<Rational> constraints = moebius_constraints(a, phi);
  DenseMatrix<Fp<P>> constraints_p;
  if (!reduce_matrix(constraints, &constraints_p)) return ModOutcome::Skip;
  DenseMatrix<Fp<P>> vp_copy = v_p;
  if (static_cast<Eigen::Index>(rref_in_place(vp_copy).size()) != d) return ModOutcome::Skip;
  DenseMatrix<Fp<P>> ker_p = kernel_basis(constraints_p);
  if (ker_p.cols() != d) return ModOutcome::Skip;

  FrobeniusAlgebra<Fp<P>> ap;
  ap.dim = n;
  ap.product = product_p;

  bool any_solution = false;
  bool any_isotropic = false;
  long total = 1;
  for (Eigen::Index j = 0; j < d; ++j) total *= P;
  for (long it = 0; it < total; ++it) {
    DenseVector<Fp<P>> t(d);
    long v = it;
    bool zero = true;
    for (Eigen::Index j = 0; j < d; ++j) {
      t(j) = Fp<P>(v % P);
      if (!t(j).is_zero()) zero = false;
      v /= P;
    }
    DenseVector<Fp<P>> theta = DenseVector<Fp<P>>::Zero(n);
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index r = 0; r < n; ++r) theta(r) += v_p(r, j) * t(j);
    DenseVector<Fp<P>> sq = algebra_mul(ap, theta, theta);
    bool eq_c = true, eq_0 = true;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (!(sq(r) == c_p(r, 0))) eq_c = false;
      if (!sq(r).is_zero()) eq_0 = false;
    }
    if (eq_c) any_solution = true;
    if (eq_0 && !zero) any_isotropic = true;
    if (any_solution && any_isotropic) break;
  }
  if (!any_solution && !any_isotropic) return ModOutcome::RefutesRational;
  return ModOutcome::Inconclusive;
}

}  // namespace

ThetaResult find_theta(const FrobeniusAlgebra<Rational>& algebra,
                       const DenseMatrix<Rational>& phi) {
  ThetaResult result;
  const Eigen::Index n = algebra.dim;

  DerivedCoalgebra<Rational> co = derive_comultiplication(algebra);
  DenseVector<Rational> c = klein_element(algebra, co, phi);
  DenseMatrix<Rational> vbasis = primitive_columns(kernel_basis(moebius_constraints(algebra, phi)));
  const Eigen::Index d = vbasis.cols();

  // Quadratic system over the kernel coordinates, one equation per basis
  // coordinate of the algebra.
  std::vector<DenseVector<Rational>> col(d);
  for (Eigen::Index j = 0; j < d; ++j) col[j] = vbasis.col(j);
  SolveState st;
  st.map = DenseMatrix<Rational>::Identity(d, d);
  st.shift = DenseVector<Rational>::Zero(d);
  std::vector<std::vector<DenseVector<Rational>>> pairwise(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    pairwise[j].resize(d);
    for (Eigen::Index k = 0; k < d; ++k) pairwise[j][k] = algebra_mul(algebra, col[j], col[k]);
  }
  for (Eigen::Index a = 0; a < n; ++a) {
    QuadEq e;
    e.q = DenseMatrix<Rational>::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index k = 0; k < d; ++k) e.q(j, k) = pairwise[j][k](a);
    e.l = DenseVector<Rational>::Zero(d);
    e.c0 = -c(a);
    st.eqs.push_back(std::move(e));
  }

  SearchOutcome outcome;
  solve_system(std::move(st), &outcome);

  auto verified = [&](const DenseVector<Rational>& theta) {
    return check_extended(algebra, phi, theta).ok();
  };

  std::vector<DenseVector<Rational>> thetas;
  for (const DenseVector<Rational>& t : outcome.solutions) {
    DenseVector<Rational> theta = DenseVector<Rational>::Zero(n);
    for (Eigen::Index j = 0; j < d; ++j) theta += t(j) * vbasis.col(j);
    if (verified(theta)) thetas.push_back(theta);
  }
  if (!thetas.empty()) {
    std::sort(thetas.begin(), thetas.end(), canonical_vector_less);
    result.status = ThetaResult::Status::Found;
    result.theta = thetas.front();
    result.detail = outcome.stuck ? "found by partial reduction" : "found by exact reduction";
    return result;
  }

  if (!outcome.stuck) {
    result.status = ThetaResult::Status::NoneOverQ;
    result.detail = "quadratic reduction exhausted every branch";
    return result;
  }

  // The reduction stalled on an indefinite quadric: probe small candidates.
  if (d <= 4) {
    const Rational grid[] = {Rational(0),     Rational(1),     Rational(-1),
                             Rational(2),     Rational(-2),    Rational(1, 2),
                             Rational(-1, 2), Rational(3),     Rational(-3)};
    const long gsize = static_cast<long>(std::size(grid));
    long total = 1;
    for (Eigen::Index j = 0; j < d; ++j) total *= gsize;
    for (long it = 0; it < total; ++it) {
      long v = it;
      DenseVector<Rational> theta = DenseVector<Rational>::Zero(n);
      for (Eigen::Index j = 0; j < d; ++j) {
        theta += grid[v % gsize] * vbasis.col(j);
        v /= gsize;
      }
      if (verified(theta)) {
        result.status = ThetaResult::Status::Found;
        result.theta = theta;
        result.detail = "found by candidate probe";
        return result;
      }
    }
  }

  for (int p : {3, 5, 7, 11}) {
    ModOutcome mo = ModOutcome::Skip;
    switch (p) {
      case 3: mo = mod_p_search<3>(algebra, phi, vbasis, c); break;
      case 5: mo = mod_p_search<5>(algebra, phi, vbasis, c); break;
      case 7: mo = mod_p_search<7>(algebra, phi, vbasis, c); break;
      case 11: mo = mod_p_search<11>(algebra, phi, vbasis, c); break;
    }
    if (mo == ModOutcome::RefutesRational) {
      result.status = ThetaResult::Status::NoneOverQ;
      result.detail = "no solution and no nonzero isotropic vector modulo " + std::to_string(p);
      return result;
    }
  }

  result.status = ThetaResult::Status::Undetermined;
  result.detail = "indefinite quadric: reduction stalled and every prime was inconclusive";
  return result;
}

}  // namespace cob2
