#include <doctest.h>

#include <random>

#include "cob2/random_terms.hpp"
#include "cob2/term.hpp"

using namespace cob2;

TEST_CASE("parse builds the expected trees") {
  TermPtr t = parse("phi . phi");
  REQUIRE(t->kind() == Term::Kind::Compose);
  CHECK(t->left()->generator() == Generator::Phi);
  CHECK(t->right()->generator() == Generator::Phi);

  TermPtr u = parse("mul . (theta * theta)");
  REQUIRE(u->kind() == Term::Kind::Compose);
  CHECK(u->left()->generator() == Generator::Mul);
  REQUIRE(u->right()->kind() == Term::Kind::Tensor);
  CHECK(u->right()->left()->generator() == Generator::Theta);
  CHECK(u->right()->right()->generator() == Generator::Theta);
}

TEST_CASE("tensor binds tighter than composition") {
  TermPtr t = parse("id * id . comul");
  REQUIRE(t->kind() == Term::Kind::Compose);
  CHECK(t->left()->kind() == Term::Kind::Tensor);
  CHECK(t->right()->generator() == Generator::Comul);
  CHECK(render(t) == "((id * id) . comul)");
}

TEST_CASE("composition chains associate to the left") {
  TermPtr t = parse("counit . mul . comul");
  REQUIRE(t->kind() == Term::Kind::Compose);
  CHECK(t->right()->generator() == Generator::Comul);
  CHECK(t->left()->kind() == Term::Kind::Compose);
}

TEST_CASE("syntax errors carry byte offsets") {
  CHECK_THROWS_AS(parse("mul . (unit * id"), ParseError);
  try {
    parse("mul . (unit * id");
  } catch (const ParseError& e) {
    CHECK(e.offset == 16);  // at end of input, where ')' was expected
  }
  CHECK_THROWS_AS(parse("mop"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("mul , id"), ParseError);
  CHECK_THROWS_AS(parse("mul mul"), ParseError);
}

TEST_CASE("parsing rejects ill-typed compositions") {
  CHECK(arity(parse("counit . mul")) == Arity{2, 0});
  CHECK_THROWS_AS(parse("mul . counit"), ArityError);
  try {
    parse("mul . counit");
  } catch (const ArityError& e) {
    CHECK(std::string(e.what()).find("(mul . counit)") != std::string::npos);
  }
}

TEST_CASE("arity of generators and shapes") {
  CHECK(arity(Term::make(Generator::Mul)) == Arity{2, 1});
  CHECK(arity(Term::tensor(Term::make(Generator::Id), Term::make(Generator::Id))) ==
        Arity{2, 2});
  TermPtr padded = Term::compose(
      Term::make(Generator::Mul),
      Term::tensor(Term::make(Generator::Theta), Term::make(Generator::Id)));
  CHECK(arity(padded) == Arity{1, 1});
  CHECK(arity(Term::make(Generator::Empty)) == Arity{0, 0});
  CHECK(arity(parse("empty")) == Arity{0, 0});
}

TEST_CASE("render is canonical and fully parenthesized") {
  CHECK(render(parse("phi . phi")) == "(phi . phi)");
  CHECK(render(parse("theta * theta")) == "(theta * theta)");
  CHECK(render(parse("mul . (phi * id)")) == "(mul . (phi * id))");
}

TEST_CASE("parse after render is the identity on random terms") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    TermPtr t = random_term(rng, CategoryFlavor::Unoriented, {4, 8});
    CHECK(term_eq(parse(render(t)), t));
  }
}

TEST_CASE("arity algebra on random pieces") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    TermPtr a = random_term(rng, CategoryFlavor::Unoriented);
    TermPtr b = random_term(rng, CategoryFlavor::Unoriented);
    CHECK(arity(Term::tensor(a, b)) == arity(a) + arity(b));
    TermPtr g = random_term(rng, CategoryFlavor::Unoriented);
    TermPtr f = random_term_consuming(rng, CategoryFlavor::Unoriented, arity(g).outputs);
    Arity composed = arity(Term::compose(f, g));
    CHECK(composed.inputs == arity(g).inputs);
    CHECK(composed.outputs == arity(f).outputs);
  }
}

TEST_CASE("generator mapping rebuilds leaves") {
  TermPtr t = parse("phi . mul . (phi * id)");
  TermPtr stripped =
      map_generators(t, [](Generator g) { return g == Generator::Phi ? Generator::Id : g; });
  CHECK(render(stripped) == "((id . mul) . (id * id))");
  CHECK(term_size(t) == 4);
  CHECK(term_uses(t, Generator::Phi));
  CHECK_FALSE(term_uses(stripped, Generator::Phi));
}
