#include <doctest.h>

#include <random>

#include "cob2/random_terms.hpp"
#include "cob2/surface.hpp"

using namespace cob2;

namespace {
Surface nf(const char* text) { return normalize(parse(text)); }
}  // namespace

TEST_CASE("generator interpretations are the expected surfaces") {
  CHECK(to_text(generator_surface(Generator::Mul)) ==
        "open{in=[1,2],out=[1],or,g=0,tw=[0,0|0]}");
  CHECK(to_text(generator_surface(Generator::Comul)) ==
        "open{in=[1],out=[1,2],or,g=0,tw=[0|0,0]}");
  CHECK(to_text(generator_surface(Generator::Unit)) == "open{in=[],out=[1],or,g=0,tw=[|0]}");
  CHECK(to_text(generator_surface(Generator::Counit)) == "open{in=[1],out=[],or,g=0,tw=[0|]}");
  CHECK(to_text(generator_surface(Generator::Swap)) ==
        "open{in=[1],out=[2],or,g=0,tw=[0|0]};open{in=[2],out=[1],or,g=0,tw=[0|0]}");
  CHECK(to_text(generator_surface(Generator::Phi)) == "open{in=[1],out=[1],or,g=0,tw=[0|1]}");
  CHECK(to_text(generator_surface(Generator::Theta)) == "open{in=[],out=[1],nonor,k=1}");
  CHECK(to_text(generator_surface(Generator::Id)) == "open{in=[1],out=[1],or,g=0,tw=[0|0]}");
  CHECK(to_text(generator_surface(Generator::Empty)) == "empty");
}

TEST_CASE("orientation-reversing cylinder squares to the identity but differs from it") {
  CHECK(surfaces_equal(nf("phi . phi"), nf("id")));
  CHECK_FALSE(surfaces_equal(nf("phi"), nf("id")));
}

TEST_CASE("handle and crosscap bookkeeping through gluing") {
  CHECK(to_text(nf("mul . comul . unit")) == "open{in=[],out=[1],or,g=1,tw=[|0]}");
  CHECK(to_text(nf("mul . (phi * id) . comul . unit")) == "open{in=[],out=[1],nonor,k=2}");
  CHECK(to_text(nf("counit . mul . comul . unit")) == "closed{or,g=1}");
  CHECK(to_text(nf("mul . (theta * theta)")) == "open{in=[],out=[1],nonor,k=2}");
  CHECK(surfaces_equal(nf("mul . (theta * theta)"), nf("mul . (phi * id) . comul . unit")));
  CHECK(to_text(nf("counit . theta")) == "closed{nonor,k=1}");
  CHECK(to_text(nf("counit . mul . (theta * theta)")) == "closed{nonor,k=2}");
}

TEST_CASE("multiplication absorbs the transposition") {
  CHECK(surfaces_equal(nf("mul . swap"), nf("mul")));
}

TEST_CASE("twist position distinguishes presentations") {
  Surface left = nf("mul . (phi * id)");
  Surface right = nf("mul . (id * phi)");
  CHECK(to_text(left) == "open{in=[1,2],out=[1],or,g=0,tw=[0,1|1]}");
  CHECK(to_text(right) == "open{in=[1,2],out=[1],or,g=0,tw=[0,1|0]}");
  CHECK_FALSE(surfaces_equal(left, right));
}

TEST_CASE("empty is the tensor unit and normalizes to the empty surface") {
  CHECK(to_text(nf("empty")) == "empty");
  Surface s = nf("mul . (theta * theta)");
  CHECK(surfaces_equal(tensor_surface(nf("empty"), s), s));
  CHECK(surfaces_equal(tensor_surface(s, nf("empty")), s));
}

TEST_CASE("composition requires matching interfaces") {
  CHECK_THROWS_AS(compose_surface(nf("mul"), nf("counit")), ArityError);
}

TEST_CASE("every defining relation normalizes equal on both sides") {
  for (const Relation& rel : presentation_relations()) {
    CAPTURE(rel.name);
    CHECK(surfaces_equal(nf(rel.lhs), nf(rel.rhs)));
  }
}

TEST_CASE("relations survive random contexts") {
  std::mt19937_64 rng(11);
  for (const Relation& rel : presentation_relations()) {
    TermPtr lhs = parse(rel.lhs);
    TermPtr rhs = parse(rel.rhs);
    for (int i = 0; i < 30; ++i) {
      auto [cl, cr] = embed_in_random_context(rng, lhs, rhs, CategoryFlavor::Unoriented);
      CAPTURE(rel.name);
      CAPTURE(render(cl));
      REQUIRE(surfaces_equal(normalize(cl), normalize(cr)));
    }
  }
}

TEST_CASE("interpretation is associative on random typable triples") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 150; ++i) {
    TermPtr h = random_term(rng, CategoryFlavor::Unoriented);
    TermPtr g = random_term_consuming(rng, CategoryFlavor::Unoriented, arity(h).outputs);
    TermPtr f = random_term_consuming(rng, CategoryFlavor::Unoriented, arity(g).outputs);
    Surface a = normalize(Term::compose(f, Term::compose(g, h)));
    Surface b = normalize(Term::compose(Term::compose(f, g), h));
    REQUIRE(surfaces_equal(a, b));
  }
}

TEST_CASE("interchange of tensor and composition") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 150; ++i) {
    TermPtr c = random_term(rng, CategoryFlavor::Unoriented, {3, 3});
    TermPtr d = random_term(rng, CategoryFlavor::Unoriented, {3, 3});
    TermPtr a = random_term_consuming(rng, CategoryFlavor::Unoriented, arity(c).outputs, {3, 3});
    TermPtr b = random_term_consuming(rng, CategoryFlavor::Unoriented, arity(d).outputs, {3, 3});
    Surface lhs = normalize(Term::compose(Term::tensor(a, b), Term::tensor(c, d)));
    Surface rhs = normalize(Term::tensor(Term::compose(a, c), Term::compose(b, d)));
    REQUIRE(surfaces_equal(lhs, rhs));
  }
}

TEST_CASE("euler characteristic adds over gluing") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 200; ++i) {
    TermPtr g = random_term(rng, CategoryFlavor::Unoriented);
    TermPtr f = random_term_consuming(rng, CategoryFlavor::Unoriented, arity(g).outputs);
    Surface sf = normalize(f);
    Surface sg = normalize(g);
    Surface glued = compose_surface(sf, sg);
    CHECK(glued.euler_characteristic() ==
          sf.euler_characteristic() + sg.euler_characteristic());
  }
}

TEST_CASE("boundary-deficiency parity is additive under gluing") {
  std::mt19937_64 rng(15);
  auto total_x_parity = [](const Surface& s) {
    long x = 0;
    for (const Component& c : s.open) x += c.euler_characteristic() - c.boundary_count();
    for (const ClosedComponent& c : s.closed) x += c.euler_characteristic();
    return ((x % 2) + 2) % 2;
  };
  for (int i = 0; i < 200; ++i) {
    TermPtr g = random_term(rng, CategoryFlavor::Unoriented);
    TermPtr f = random_term_consuming(rng, CategoryFlavor::Unoriented, arity(g).outputs);
    Surface sf = normalize(f);
    Surface sg = normalize(g);
    CHECK(total_x_parity(compose_surface(sf, sg)) ==
          (total_x_parity(sf) + total_x_parity(sg)) % 2);
  }
}

TEST_CASE("canonicalization is idempotent") {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 200; ++i) {
    Surface s = normalize(random_term(rng, CategoryFlavor::Unoriented));
    Surface once = canonicalize(s);
    Surface twice = canonicalize(once);
    CHECK(surfaces_equal(once, twice));
    CHECK(to_text(once) == to_text(twice));
  }
}
