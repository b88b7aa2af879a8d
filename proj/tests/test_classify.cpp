#include <doctest.h>

#include <random>

#include "cob2/classify.hpp"
#include "cob2/random_terms.hpp"

using namespace cob2;

namespace {
Surface nf(const char* text) { return normalize(parse(text)); }
const char* kKlein = "mul . (phi * id) . comul . unit";
}  // namespace

TEST_CASE("boundary-deficiency statistic on reference pieces") {
  Surface moebius = nf("theta");
  REQUIRE(moebius.open.size() == 1);
  CHECK(statistic_x(moebius.open[0]) == -1);

  Surface cyl = nf("id");
  CHECK(statistic_x(cyl.open[0]) == -2);

  Surface klein = nf(kKlein);
  REQUIRE(klein.open.size() == 1);
  CHECK(klein.open[0].euler_characteristic() == -1);
  CHECK(statistic_x(klein.open[0]) == -2);
}

TEST_CASE("crosscap fails membership, crosscap pairs pass") {
  MembershipReport crosscap = in_ocob2(nf("theta"));
  CHECK_FALSE(crosscap.orientable_cat);
  REQUIRE(crosscap.components.size() == 1);
  CHECK(crosscap.components[0].x == -1);
  CHECK(crosscap.components[0].crosscaps == 1);
  CHECK_FALSE(crosscap.components[0].even);

  MembershipReport pair = in_ocob2(nf("mul . (theta * theta)"));
  CHECK(pair.orientable_cat);
  CHECK(pair.components[0].crosscaps == 2);

  MembershipReport empty = in_ocob2(nf("empty"));
  CHECK(empty.orientable_cat);
  CHECK(empty.oriented);
  CHECK(empty.components.empty());
}

TEST_CASE("the Klein composite is a member yet not an orientable cobordism") {
  Surface klein = nf(kKlein);
  CHECK(in_ocob2(klein).orientable_cat);
  CHECK_FALSE(is_orientable_cobordism(klein));
  CHECK(is_orientable_cobordism(nf("mul")));
  CHECK_FALSE(is_orientable_cobordism(nf("theta")));
}

TEST_CASE("flavor verdicts in the membership report") {
  MembershipReport twisted = in_ocob2(nf("phi"));
  CHECK_FALSE(twisted.oriented);  // nontrivial boundary twist
  CHECK(twisted.orientable_cat);
  CHECK(twisted.unoriented);

  MembershipReport plain = in_ocob2(nf("mul"));
  CHECK(plain.oriented);
}

TEST_CASE("equality decisions by flavor") {
  CHECK(decide_equal(parse("mul . (mul * id)"), parse("mul . (id * mul)"),
                     CategoryFlavor::Oriented));
  std::string lhs = std::string("mul . ((") + kKlein + ") * id)";
  std::string rhs = std::string("phi . mul . ((") + kKlein + ") * id)";
  CHECK(decide_equal(parse(lhs), parse(rhs), CategoryFlavor::Orientable));
  CHECK_FALSE(decide_equal(parse("phi"), parse("id"), CategoryFlavor::Orientable));
  CHECK_THROWS_AS(decide_equal(parse("theta"), parse("theta"), CategoryFlavor::Orientable),
                  FlavorError);
  CHECK_THROWS_AS(decide_equal(parse("mul"), parse("id"), CategoryFlavor::Oriented),
                  ArityError);
}

TEST_CASE("synthesis covers the reference shapes") {
  // Two crosscaps, no inputs, one output: a theta-free word exists.
  Surface klein = nf(kKlein);
  TermPtr word = synthesize_term(klein, CategoryFlavor::Orientable);
  CHECK_FALSE(term_uses(word, Generator::Theta));
  CHECK(surfaces_equal(normalize(word), klein));

  CHECK_THROWS_AS(synthesize_term(nf("theta"), CategoryFlavor::Orientable), FlavorError);
  CHECK_THROWS_AS(synthesize_term(nf("phi"), CategoryFlavor::Oriented), FlavorError);

  CHECK(render(synthesize_term(nf("id"), CategoryFlavor::Oriented)) == "id");
  CHECK(render(synthesize_term(nf("empty"), CategoryFlavor::Oriented)) == "empty");

  TermPtr moebius_word = synthesize_term(nf("theta"), CategoryFlavor::Unoriented);
  CHECK(surfaces_equal(normalize(moebius_word), nf("theta")));
}

TEST_CASE("synthesis reproduces the normal form across flavors") {
  std::mt19937_64 rng(21);
  auto flavors = {CategoryFlavor::Oriented, CategoryFlavor::Orientable,
                  CategoryFlavor::Unoriented};
  for (CategoryFlavor flavor : flavors) {
    for (int i = 0; i < 150; ++i) {
      TermPtr t = random_term(rng, flavor);
      Surface s = normalize(t);
      TermPtr back = synthesize_term(s, flavor);
      CAPTURE(render(t));
      REQUIRE(surfaces_equal(normalize(back), s));
      CHECK(term_in_flavor(back, flavor));
    }
  }
}

TEST_CASE("crosscap parity tracks the merged theta count") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    TermPtr t = random_term(rng, CategoryFlavor::Unoriented);
    Surface s = normalize(t);
    for (const Component& c : s.open)
      CHECK(((statistic_x(c) % 2) + 2) % 2 == c.theta_count % 2);
    for (const ClosedComponent& c : s.closed)
      CHECK(((statistic_x(c) % 2) + 2) % 2 == c.theta_count % 2);
  }
}

TEST_CASE("members compose to members") {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 100) {
    TermPtr t1 = random_term(rng, CategoryFlavor::Unoriented);
    if (!in_ocob2(normalize(t1)).orientable_cat) continue;
    TermPtr t2 = random_term_consuming(rng, CategoryFlavor::Unoriented, arity(t1).outputs);
    if (!in_ocob2(normalize(t2)).orientable_cat) continue;
    ++done;
    CHECK(in_ocob2(normalize(Term::compose(t2, t1))).orientable_cat);
  }
}

TEST_CASE("membership-passing surfaces synthesize without crosscaps") {
  std::mt19937_64 rng(24);
  int done = 0;
  while (done < 120) {
    TermPtr t = random_term(rng, CategoryFlavor::Unoriented);
    Surface s = normalize(t);
    if (!in_ocob2(s).orientable_cat) continue;
    ++done;
    TermPtr word = synthesize_term(s, CategoryFlavor::Orientable);
    CHECK_FALSE(term_uses(word, Generator::Theta));
    REQUIRE(surfaces_equal(normalize(word), s));
  }
}
