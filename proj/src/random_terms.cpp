#include "cob2/random_terms.hpp"

#include <algorithm>

namespace cob2 {

const std::vector<Relation>& presentation_relations() {
  static const std::vector<Relation> kRelations = {
      {"unit-left", "mul . (unit * id)", "id", 1, CategoryFlavor::Oriented},
      {"unit-right", "mul . (id * unit)", "id", 1, CategoryFlavor::Oriented},
      {"associativity", "mul . (mul * id)", "mul . (id * mul)", 1, CategoryFlavor::Oriented},
      {"commutativity", "mul . swap", "mul", 1, CategoryFlavor::Oriented},
      {"counit-left", "(counit * id) . comul", "id", 2, CategoryFlavor::Oriented},
      {"counit-right", "(id * counit) . comul", "id", 2, CategoryFlavor::Oriented},
      {"coassociativity", "(comul * id) . comul", "(id * comul) . comul", 2,
       CategoryFlavor::Oriented},
      {"cocommutativity", "swap . comul", "comul", 2, CategoryFlavor::Oriented},
      {"frobenius-left", "(id * mul) . (comul * id)", "comul . mul", 3,
       CategoryFlavor::Oriented},
      {"frobenius-right", "(mul * id) . (id * comul)", "comul . mul", 3,
       CategoryFlavor::Oriented},
      {"involution-squared", "phi . phi", "id", 4, CategoryFlavor::Orientable},
      {"involution-multiplicative", "mul . (phi * phi)", "phi . mul", 4,
       CategoryFlavor::Orientable},
      {"involution-unital", "phi . unit", "unit", 4, CategoryFlavor::Orientable},
      {"involution-comultiplicative", "comul . phi", "(phi * phi) . comul", 4,
       CategoryFlavor::Orientable},
      {"involution-counital", "counit . phi", "counit", 4, CategoryFlavor::Orientable},
      {"moebius-twist-absorption", "mul . (theta * id)", "phi . mul . (theta * id)", 5,
       CategoryFlavor::Unoriented},
      {"moebius-square", "mul . (theta * theta)", "mul . (phi * id) . comul . unit", 6,
       CategoryFlavor::Unoriented},
      {"klein-twist-absorption", "mul . ((mul . (phi * id) . comul . unit) * id)",
       "phi . mul . ((mul . (phi * id) . comul . unit) * id)", 7, CategoryFlavor::Orientable},
  };
  return kRelations;
}

const std::vector<std::vector<const char*>>& klein_derivation_chains() {
  // First chain: unfolding the twice-punctured Klein bottle down to
  // mul . (phi * id) . comul. Second chain: post-composing with phi and
  // cancelling it again.
  static const std::vector<std::vector<const char*>> kChains = {
      {
          "mul . ((mul . (phi * id) . comul . unit) * id)",
          "mul . (mul * id) . (phi * id * id) . (comul * id) . (unit * id)",
          "mul . (id * mul) . (phi * id * id) . (comul * id) . (unit * id)",
          "mul . (phi * id) . (id * mul) . (comul * id) . (unit * id)",
          "mul . (phi * id) . comul . mul . (unit * id)",
          "mul . (phi * id) . comul",
      },
      {
          "phi . mul . (phi * id) . comul",
          "mul . ((phi . phi) * phi) . comul",
          "mul . (id * phi) . comul",
          "mul . swap . (phi * id) . swap . comul",
          "mul . (phi * id) . comul",
      },
  };
  return kChains;
}

namespace {

struct Row {
  TermPtr term;
  int inputs = 0;
  int outputs = 0;
};

TermPtr gen(Generator g) { return Term::make(g); }

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// One tensor row consuming exactly `wires` inputs. Output width is kept at
// or below max_width; zero-input generators are sprinkled in when room
// remains.
Row row_consuming(std::mt19937_64& rng, CategoryFlavor flavor, int wires, int max_width) {
  std::vector<TermPtr> factors;
  int remaining = wires;
  int produced = 0;
  auto room = [&](int extra_out) { return produced + remaining + extra_out <= max_width; };
  while (remaining > 0) {
    if (room(1) && rng() % 8 == 0) {
      // insertion that consumes nothing
      if (flavor == CategoryFlavor::Unoriented && rng() % 2 == 0)
        factors.push_back(gen(Generator::Theta));
      else
        factors.push_back(gen(Generator::Unit));
      produced += 1;
      continue;
    }
    std::vector<Generator> pool = {Generator::Id, Generator::Comul, Generator::Counit};
    if (flavor != CategoryFlavor::Oriented) pool.push_back(Generator::Phi);
    if (remaining >= 2) {
      pool.push_back(Generator::Mul);
      pool.push_back(Generator::Swap);
      pool.push_back(Generator::Mul);  // weight fan-in a little heavier
    }
    Generator pick = pool[rng() % pool.size()];
    Arity ar = generator_arity(pick);
    if (produced + (remaining - ar.inputs) + ar.outputs > max_width) pick = Generator::Counit;
    ar = generator_arity(pick);
    factors.push_back(gen(pick));
    remaining -= ar.inputs;
    produced += ar.outputs;
  }
  while (produced < max_width && rng() % 3 == 0) {
    if (flavor == CategoryFlavor::Unoriented && rng() % 2 == 0)
      factors.push_back(gen(Generator::Theta));
    else
      factors.push_back(gen(Generator::Unit));
    produced += 1;
  }
  Row r;
  if (factors.empty()) {
    r.term = gen(Generator::Empty);
  } else {
    r.term = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) r.term = Term::tensor(r.term, factors[i]);
  }
  r.inputs = wires;
  r.outputs = produced;
  return r;
}

// One tensor row producing exactly `wires` outputs (mirror of the above).
Row row_producing(std::mt19937_64& rng, CategoryFlavor flavor, int wires, int max_width) {
  std::vector<TermPtr> factors;
  int remaining = wires;
  int consumed = 0;
  while (remaining > 0) {
    if (consumed + remaining < max_width && rng() % 8 == 0) {
      factors.push_back(gen(Generator::Counit));
      consumed += 1;
      continue;
    }
    std::vector<Generator> pool = {Generator::Id, Generator::Mul, Generator::Unit};
    if (flavor != CategoryFlavor::Oriented) pool.push_back(Generator::Phi);
    if (flavor == CategoryFlavor::Unoriented) pool.push_back(Generator::Theta);
    if (remaining >= 2) {
      pool.push_back(Generator::Comul);
      pool.push_back(Generator::Swap);
    }
    Generator pick = pool[rng() % pool.size()];
    Arity ar = generator_arity(pick);
    if (consumed + ar.inputs + (remaining - ar.outputs) > max_width) pick = Generator::Unit;
    ar = generator_arity(pick);
    factors.push_back(gen(pick));
    remaining -= ar.outputs;
    consumed += ar.inputs;
  }
  Row r;
  if (factors.empty()) {
    r.term = gen(Generator::Empty);
  } else {
    r.term = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) r.term = Term::tensor(r.term, factors[i]);
  }
  r.inputs = consumed;
  r.outputs = wires;
  return r;
}

}  // namespace

TermPtr random_term_consuming(std::mt19937_64& rng, CategoryFlavor flavor, int inputs,
                              const TermGenOptions& opts) {
  Row cur = row_consuming(rng, flavor, inputs, opts.max_width);
  TermPtr t = cur.term;
  int layers = rand_int(rng, 0, opts.max_layers);
  int width = cur.outputs;
  for (int i = 0; i < layers; ++i) {
    Row next = row_consuming(rng, flavor, width, opts.max_width);
    t = Term::compose(next.term, t);
    width = next.outputs;
  }
  return t;
}

TermPtr random_term(std::mt19937_64& rng, CategoryFlavor flavor, const TermGenOptions& opts) {
  int inputs = rand_int(rng, 0, std::min(3, opts.max_width));
  TermPtr t = random_term_consuming(rng, flavor, inputs, opts);
  // occasional side-by-side juxtaposition for tensor-shaped syntax trees
  if (rng() % 4 == 0) {
    Arity a = arity(t);
    if (a.inputs + 1 <= opts.max_width && a.outputs + 1 <= opts.max_width) {
      TermGenOptions small{1, 2};
      TermPtr pad = random_term_consuming(rng, flavor, 1, small);
      t = rng() % 2 ? Term::tensor(t, pad) : Term::tensor(pad, t);
    }
  }
  return t;
}

std::pair<TermPtr, TermPtr> embed_in_random_context(std::mt19937_64& rng, const TermPtr& lhs,
                                                    const TermPtr& rhs, CategoryFlavor flavor,
                                                    const TermGenOptions& opts) {
  Arity ar = arity(lhs);

  TermPtr padded_l = lhs;
  TermPtr padded_r = rhs;
  int pad_in = 0, pad_out = 0;
  if (rng() % 2 == 0) {
    Row pad = row_consuming(rng, flavor, 1, 2);
    bool above = rng() % 2 == 0;
    padded_l = above ? Term::tensor(pad.term, padded_l) : Term::tensor(padded_l, pad.term);
    padded_r = above ? Term::tensor(pad.term, padded_r) : Term::tensor(padded_r, pad.term);
    pad_in += pad.inputs;
    pad_out += pad.outputs;
  }

  int mid_in = ar.inputs + pad_in;
  int mid_out = ar.outputs + pad_out;

  if (mid_in > 0 && rng() % 2 == 0) {
    Row pre = row_producing(rng, flavor, mid_in, opts.max_width);
    padded_l = Term::compose(padded_l, pre.term);
    padded_r = Term::compose(padded_r, pre.term);
  }
  if (mid_out > 0 && rng() % 2 == 0) {
    Row post = row_consuming(rng, flavor, mid_out, opts.max_width);
    padded_l = Term::compose(post.term, padded_l);
    padded_r = Term::compose(post.term, padded_r);
  }
  return {padded_l, padded_r};
}

}  // namespace cob2
