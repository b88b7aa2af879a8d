#pragma once

#include <string>
#include <vector>

#include "cob2/surface.hpp"
#include "cob2/term.hpp"

namespace cob2 {

/// Generator scopes: Oriented terms use {mul, unit, comul, counit, swap, id,
/// empty}; Orientable adds phi; Unoriented adds theta.
enum class CategoryFlavor { Oriented, Orientable, Unoriented };

const char* flavor_name(CategoryFlavor f);

struct FlavorError : std::runtime_error {
  explicit FlavorError(const std::string& what) : std::runtime_error(what) {}
};

struct ComponentReport {
  bool open = true;
  int chi = 0;
  int boundary = 0;
  int x = 0;          // chi - boundary
  int crosscaps = 0;  // 0 for orientable components
  bool even = false;  // parity verdict on x (equivalently on crosscaps)
};

struct MembershipReport {
  std::vector<ComponentReport> components;
  bool oriented = false;        // image of the oriented category
  bool orientable_cat = false;  // composite-of-orientable-cobordisms category
  bool unoriented = true;

  bool verdict(CategoryFlavor f) const {
    switch (f) {
      case CategoryFlavor::Oriented: return oriented;
      case CategoryFlavor::Orientable: return orientable_cat;
      case CategoryFlavor::Unoriented: return unoriented;
    }
    return false;
  }
};

int statistic_x(const Component& c);
int statistic_x(const ClosedComponent& c);

/// Per-component parity records plus overall verdicts for all three flavors.
MembershipReport in_ocob2(const Surface& s);

/// True iff every component (open and closed) is orientable. Strictly
/// stronger than the orientable-category verdict: a Klein-bottle composite
/// fails this but passes in_ocob2.
bool is_orientable_cobordism(const Surface& s);

bool term_in_flavor(const TermPtr& t, CategoryFlavor flavor);

/// Generator word over the flavor's alphabet normalizing back to s:
/// fan-in/fan-out trees, genus handles, crosscap pairs as punctured Klein
/// bottles, one leftover crosscap (unoriented only), twists and wiring.
TermPtr synthesize_term(const Surface& s, CategoryFlavor flavor);

/// Decides term equality in the flavor's category through the shared
/// unoriented normal form, after enforcing generator scoping.
bool decide_equal(const TermPtr& t1, const TermPtr& t2, CategoryFlavor flavor);

}  // namespace cob2
