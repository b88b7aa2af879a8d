#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cob2/classify.hpp"
#include "cob2/term.hpp"

namespace cob2 {

/// A named defining relation of the presentation, both sides as concrete
/// syntax over the same arity, with the smallest flavor whose alphabet
/// contains it and the relation-group number (1..7) it belongs to.
struct Relation {
  const char* name;
  const char* lhs;
  const char* rhs;
  int group;
  CategoryFlavor flavor;
};

const std::vector<Relation>& presentation_relations();

/// The two displayed rewriting chains for the twice-punctured Klein bottle;
/// consecutive entries of each chain must normalize equal.
const std::vector<std::vector<const char*>>& klein_derivation_chains();

struct TermGenOptions {
  int max_width = 4;   // widest wire count any intermediate interface may have
  int max_layers = 6;  // composition depth in generated pipelines
};

/// Well-typed random term of the flavor; arity always checks.
TermPtr random_term(std::mt19937_64& rng, CategoryFlavor flavor,
                    const TermGenOptions& opts = {});

/// Random term with exactly `inputs` source circles.
TermPtr random_term_consuming(std::mt19937_64& rng, CategoryFlavor flavor, int inputs,
                              const TermGenOptions& opts = {});

/// Wraps both sides in one shared random context: tensor padding plus random
/// pre- and post-composed rows. The two results have equal normal forms iff
/// the inputs do.
std::pair<TermPtr, TermPtr> embed_in_random_context(std::mt19937_64& rng, const TermPtr& lhs,
                                                    const TermPtr& rhs, CategoryFlavor flavor,
                                                    const TermGenOptions& opts = {});

}  // namespace cob2
