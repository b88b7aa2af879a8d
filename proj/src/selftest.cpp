#include "cob2/selftest.hpp"

#include <random>
#include <sstream>

#include "cob2/classify.hpp"
#include "cob2/random_terms.hpp"
#include "cob2/surface.hpp"
#include "cob2/term.hpp"

namespace cob2 {

FrobeniusAlgebra<Rational> dual_numbers_algebra() {
  FrobeniusAlgebra<Rational> a;
  a.dim = 2;
  a.basis = {"1", "x"};
  a.product = DenseMatrix<Rational>::Zero(2, 4);
  a.product(0, 0) = Rational(1);  // 1*1 = 1
  a.product(1, 1) = Rational(1);  // 1*x = x
  a.product(1, 2) = Rational(1);  // x*1 = x
  a.unit = DenseVector<Rational>::Zero(2);
  a.unit(0) = Rational(1);
  a.counit = DenseMatrix<Rational>::Zero(1, 2);
  a.counit(0, 1) = Rational(1);
  return a;
}

FrobeniusAlgebra<Rational> pair_algebra() {
  FrobeniusAlgebra<Rational> a;
  a.dim = 2;
  a.basis = {"e1", "e2"};
  a.product = DenseMatrix<Rational>::Zero(2, 4);
  a.product(0, 0) = Rational(1);
  a.product(1, 3) = Rational(1);
  a.unit = DenseVector<Rational>::Constant(2, Rational(1));
  a.counit = DenseMatrix<Rational>::Constant(1, 2, Rational(1));
  return a;
}

DenseMatrix<Rational> pair_swap_involution() {
  DenseMatrix<Rational> m = DenseMatrix<Rational>::Zero(2, 2);
  m(0, 1) = Rational(1);
  m(1, 0) = Rational(1);
  return m;
}

namespace {

struct EvalPanel {
  std::vector<ExtendedAlgebra<Rational>> algebras;
  std::vector<std::string> names;
};

EvalPanel seeded_panel(int count) {
  EvalPanel panel;
  for (int s = 0; s < count; ++s) {
    int dim = s % 4 + 1;
    SeededAlgebra sa = random_involutive_algebra(static_cast<std::uint64_t>(s), dim);
    panel.algebras.push_back(
        make_extended(sa.algebra, sa.involution, std::optional<DenseVector<Rational>>(sa.theta)));
    panel.names.push_back("seed" + std::to_string(s) + "/dim" + std::to_string(dim));
  }
  return panel;
}

std::string pair_witness(const TermPtr& a, const TermPtr& b, const std::string& note) {
  return note + ": " + render(a) + "  vs  " + render(b);
}

SuiteResult relations_topological(std::mt19937_64& rng, long cases) {
  SuiteResult r{"relations-topological"};
  for (const Relation& rel : presentation_relations()) {
    TermPtr lhs = parse(rel.lhs);
    TermPtr rhs = parse(rel.rhs);
    ++r.checked;
    if (!surfaces_equal(normalize(lhs), normalize(rhs))) {
      r.pass = false;
      r.detail = pair_witness(lhs, rhs, rel.name);
      return r;
    }
    for (long i = 0; i < cases; ++i) {
      auto [cl, cr] = embed_in_random_context(rng, lhs, rhs, CategoryFlavor::Unoriented);
      ++r.checked;
      if (!surfaces_equal(normalize(cl), normalize(cr))) {
        r.pass = false;
        r.detail = pair_witness(cl, cr, std::string(rel.name) + " in context");
        return r;
      }
    }
  }
  return r;
}

SuiteResult relations_algebraic(const EvalPanel& panel) {
  SuiteResult r{"relations-algebraic"};
  std::vector<std::pair<std::string, ExtendedAlgebra<Rational>>> algebras;
  for (std::size_t i = 0; i < panel.algebras.size() && i < 8; ++i)
    algebras.emplace_back(panel.names[i], panel.algebras[i]);
  // The dual-number algebra admits no Moebius element; its panel entry
  // checks the orientable relations only.
  algebras.emplace_back("dual-numbers",
                        make_extended(dual_numbers_algebra(), identity_matrix<Rational>(2)));
  DenseVector<Rational> zero_theta = DenseVector<Rational>::Zero(2);
  algebras.emplace_back(
      "pair-swap", make_extended(pair_algebra(), pair_swap_involution(),
                                 std::optional<DenseVector<Rational>>(zero_theta)));

  for (const auto& [name, ext] : algebras) {
    for (const Relation& rel : presentation_relations()) {
      TermPtr lhs = parse(rel.lhs);
      TermPtr rhs = parse(rel.rhs);
      if ((term_uses(lhs, Generator::Theta) || term_uses(rhs, Generator::Theta)) && !ext.theta)
        continue;
      ++r.checked;
      if (!exact_equal(evaluate(lhs, ext), evaluate(rhs, ext))) {
        r.pass = false;
        r.detail = pair_witness(lhs, rhs, rel.name + std::string(" on ") + name);
        return r;
      }
    }
  }
  return r;
}

SuiteResult klein_derivation() {
  SuiteResult r{"klein-derivation-chains"};
  for (const auto& chain : klein_derivation_chains()) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      TermPtr a = parse(chain[i]);
      TermPtr b = parse(chain[i + 1]);
      ++r.checked;
      if (!surfaces_equal(normalize(a), normalize(b))) {
        r.pass = false;
        r.detail = pair_witness(a, b, "chain step " + std::to_string(i));
        return r;
      }
    }
  }
  // The chains also join up: the twist on a twice-punctured Klein bottle
  // is absorbed, and the identity holds under identity-involution
  // evaluation as well.
  const Relation& klein = presentation_relations().back();
  TermPtr lhs = parse(klein.lhs);
  TermPtr rhs = parse(klein.rhs);
  ++r.checked;
  if (!surfaces_equal(normalize(lhs), normalize(rhs))) {
    r.pass = false;
    r.detail = pair_witness(lhs, rhs, "twist absorption");
    return r;
  }
  auto ext = make_extended(dual_numbers_algebra(), identity_matrix<Rational>(2));
  ++r.checked;
  if (!exact_equal(evaluate(lhs, ext), evaluate(rhs, ext))) {
    r.pass = false;
    r.detail = pair_witness(lhs, rhs, "twist absorption under evaluation");
  }
  return r;
}

SuiteResult parity_characterization(std::mt19937_64& rng, long cases) {
  SuiteResult r{"parity-characterization"};
  for (long i = 0; i < cases; ++i) {
    TermPtr t = random_term(rng, CategoryFlavor::Unoriented);
    Surface s = normalize(t);
    ++r.checked;
    auto mismatch = [&](int x, long theta) { return ((x % 2) + 2) % 2 != (theta % 2); };
    for (const Component& c : s.open)
      if (mismatch(statistic_x(c), c.theta_count)) {
        r.pass = false;
        r.detail = "open component of " + render(t);
        return r;
      }
    for (const ClosedComponent& c : s.closed)
      if (mismatch(statistic_x(c), c.theta_count)) {
        r.pass = false;
        r.detail = "closed component of " + render(t);
        return r;
      }
  }
  return r;
}

SuiteResult crosscap_free_synthesis(std::mt19937_64& rng, long cases) {
  SuiteResult r{"crosscap-free-synthesis"};
  for (long i = 0; i < cases; ++i) {
    TermPtr t = random_term(rng, CategoryFlavor::Unoriented);
    Surface s = normalize(t);
    ++r.checked;
    // Everything synthesizes in the unoriented flavor.
    TermPtr back = synthesize_term(s, CategoryFlavor::Unoriented);
    if (!surfaces_equal(normalize(back), s)) {
      r.pass = false;
      r.detail = "unoriented round-trip failed for " + render(t);
      return r;
    }
    if (in_ocob2(s).orientable_cat) {
      TermPtr word = synthesize_term(s, CategoryFlavor::Orientable);
      if (term_uses(word, Generator::Theta)) {
        r.pass = false;
        r.detail = "synthesized word still uses theta: " + render(t);
        return r;
      }
      if (!surfaces_equal(normalize(word), s)) {
        r.pass = false;
        r.detail = "orientable round-trip failed for " + render(t);
        return r;
      }
    }
  }
  return r;
}

SuiteResult composition_closure(std::mt19937_64& rng, long cases) {
  SuiteResult r{"composition-closure"};
  long done = 0, attempts = 0;
  while (done < cases && attempts < cases * 20) {
    ++attempts;
    TermPtr t1 = random_term(rng, CategoryFlavor::Unoriented);
    Surface s1 = normalize(t1);
    if (!in_ocob2(s1).orientable_cat) continue;
    TermPtr t2 = random_term_consuming(rng, CategoryFlavor::Unoriented, arity(t1).outputs);
    Surface s2 = normalize(t2);
    if (!in_ocob2(s2).orientable_cat) continue;
    ++done;
    ++r.checked;
    Surface glued = compose_surface(s2, s1);
    if (!in_ocob2(glued).orientable_cat) {
      r.pass = false;
      r.detail = pair_witness(t2, t1, "composite left the subcategory");
      return r;
    }
  }
  return r;
}

std::pair<TermPtr, TermPtr> equal_normal_form_pair(std::mt19937_64& rng, long index) {
  TermGenOptions opts{3, 5};
  if (index % 2 == 0) {
    TermPtr t = random_term(rng, CategoryFlavor::Unoriented, opts);
    TermPtr back = synthesize_term(normalize(t), CategoryFlavor::Unoriented);
    return {t, back};
  }
  const auto& rels = presentation_relations();
  const Relation& rel = rels[rng() % rels.size()];
  return embed_in_random_context(rng, parse(rel.lhs), parse(rel.rhs),
                                 CategoryFlavor::Unoriented, opts);
}

SuiteResult evaluation_oracle(std::mt19937_64& rng, long cases, const EvalPanel& panel) {
  SuiteResult r{"evaluation-oracle"};
  for (long i = 0; i < cases; ++i) {
    auto [t1, t2] = equal_normal_form_pair(rng, i);
    if (!surfaces_equal(normalize(t1), normalize(t2))) {
      r.pass = false;
      r.detail = pair_witness(t1, t2, "pair generator produced unequal normal forms");
      return r;
    }
    for (std::size_t a = 0; a < panel.algebras.size(); ++a) {
      ++r.checked;
      if (!exact_equal(evaluate(t1, panel.algebras[a]), evaluate(t2, panel.algebras[a]))) {
        r.pass = false;
        r.detail = pair_witness(t1, t2, "evaluations differ on " + panel.names[a]);
        return r;
      }
    }
  }
  return r;
}

SuiteResult section_property(std::mt19937_64& rng, long cases, const EvalPanel& panel) {
  SuiteResult r{"identity-involution-section"};
  std::vector<ExtendedAlgebra<Rational>> with_id;
  for (const auto& ext : panel.algebras) {
    if (with_id.size() >= 6) break;
    with_id.push_back(make_extended(ext.algebra, identity_matrix<Rational>(ext.algebra.dim)));
  }
  auto strip = [](const TermPtr& t) {
    return map_generators(
        t, [](Generator g) { return g == Generator::Phi ? Generator::Id : g; });
  };
  for (long i = 0; i < cases; ++i) {
    TermPtr t = random_term(rng, CategoryFlavor::Orientable, {3, 5});
    const ExtendedAlgebra<Rational>& ext = with_id[i % with_id.size()];
    ++r.checked;
    if (!exact_equal(evaluate(t, ext), evaluate(strip(t), ext))) {
      r.pass = false;
      r.detail = "phi-stripping changed the value of " + render(t);
      return r;
    }
    TermPtr oriented = random_term(rng, CategoryFlavor::Oriented, {3, 5});
    ++r.checked;
    if (!in_ocob2(normalize(oriented)).orientable_cat) {
      r.pass = false;
      r.detail = "oriented-alphabet term failed membership: " + render(oriented);
      return r;
    }
  }
  return r;
}

SuiteResult distinguishing_probe(std::mt19937_64& rng, long cases, const EvalPanel& panel) {
  SuiteResult r{"distinguishing-probe"};
  long unequal_pairs = 0, distinguished = 0;
  for (long i = 0; i < cases && unequal_pairs < 50; ++i) {
    TermPtr t1 = random_term(rng, CategoryFlavor::Orientable, {3, 4});
    TermPtr t2 = random_term(rng, CategoryFlavor::Orientable, {3, 4});
    if (!(arity(t1) == arity(t2))) continue;
    if (surfaces_equal(normalize(t1), normalize(t2))) continue;
    ++unequal_pairs;
    for (const auto& ext : panel.algebras) {
      if (!exact_equal(evaluate(t1, ext), evaluate(t2, ext))) {
        ++distinguished;
        break;
      }
    }
  }
  r.checked = unequal_pairs;
  std::ostringstream os;
  os << distinguished << "/" << unequal_pairs
     << " unequal normal-form pairs distinguished by the seeded panel";
  r.detail = os.str();  // informational: small algebras cannot separate everything
  return r;
}

}  // namespace

bool all_pass(const std::vector<SuiteResult>& results) {
  for (const SuiteResult& r : results)
    if (!r.pass) return false;
  return true;
}

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts) {
  std::vector<SuiteResult> out;
  EvalPanel panel = seeded_panel(20);
  std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ULL + 1);

  long ctx = std::max(1L, opts.cases / 4);
  out.push_back(relations_topological(rng, ctx));
  out.push_back(relations_algebraic(panel));
  out.push_back(klein_derivation());
  out.push_back(parity_characterization(rng, std::max(1L, opts.cases * 2)));
  out.push_back(crosscap_free_synthesis(rng, opts.cases));
  out.push_back(composition_closure(rng, std::max(1L, opts.cases / 2)));
  out.push_back(evaluation_oracle(rng, std::max(1L, opts.cases / 2), panel));
  out.push_back(section_property(rng, opts.cases, panel));
  out.push_back(distinguishing_probe(rng, opts.cases, panel));
  return out;
}

}  // namespace cob2
