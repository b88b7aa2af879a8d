#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cob2/term.hpp"

namespace cob2 {

/// Topology of one connected piece: orientable with a genus, or
/// non-orientable with a crosscap count (>= 1).
struct ComponentTopology {
  bool orientable = true;
  int count = 0;  // genus when orientable, crosscaps otherwise

  friend bool operator==(const ComponentTopology& a, const ComponentTopology& b) {
    return a.orientable == b.orientable && a.count == b.count;
  }
};

/// Open connected component: the sets of source/target circles it touches
/// plus its topology. Twist bits exist only while the component is
/// orientable and are stored in the canonical (lexicographically minimal
/// under global flip) representative, ports ordered inputs-then-outputs.
struct Component {
  std::vector<int> inputs;   // 1-based global source indices, ascending
  std::vector<int> outputs;  // 1-based global target indices, ascending
  ComponentTopology topology;
  std::vector<std::uint8_t> input_twists;   // aligned with inputs; empty if non-orientable
  std::vector<std::uint8_t> output_twists;  // aligned with outputs
  long theta_count = 0;  // presentation bookkeeping only; never part of equality

  int boundary_count() const {
    return static_cast<int>(inputs.size() + outputs.size());
  }
  int euler_characteristic() const {
    return topology.orientable ? 2 - 2 * topology.count - boundary_count()
                               : 2 - topology.count - boundary_count();
  }
};

/// Closed component (no boundary). Closed orientable pieces carry genus
/// only: every closed orientable surface has an orientation-reversing
/// self-diffeomorphism, so there is one class per genus.
struct ClosedComponent {
  ComponentTopology topology;
  long theta_count = 0;

  int euler_characteristic() const {
    return topology.orientable ? 2 - 2 * topology.count : 2 - topology.count;
  }
};

/// Canonical topological normal form of a cobordism: morphism equality is
/// structural equality of this data (theta counters excluded).
struct Surface {
  Arity arity;
  std::vector<Component> open;
  std::vector<ClosedComponent> closed;

  int euler_characteristic() const;
};

Surface generator_surface(Generator g);
Surface tensor_surface(const Surface& a, const Surface& b);

/// Glues output circle i of g to input circle i of f. Euler characteristic
/// adds over each circle gluing; orientability and twist data follow the
/// component bookkeeping described in the README.
Surface compose_surface(const Surface& f, const Surface& g);

Surface normalize(const TermPtr& t);

bool surfaces_equal(const Surface& a, const Surface& b);

/// Restores the canonical ordering and twist representatives; idempotent.
Surface canonicalize(Surface s);

/// Deterministic single-line text form, e.g.
/// `open{in=[1,2],out=[1],or,g=0,tw=[0,0|0]};closed{nonor,k=2}`;
/// the empty surface prints as `empty`.
std::string to_text(const Surface& s);

}  // namespace cob2
