#include "cob2/classify.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace cob2 {

const char* flavor_name(CategoryFlavor f) {
  switch (f) {
    case CategoryFlavor::Oriented: return "oriented";
    case CategoryFlavor::Orientable: return "orientable";
    case CategoryFlavor::Unoriented: return "unoriented";
  }
  return "?";
}

int statistic_x(const Component& c) {
  return c.euler_characteristic() - c.boundary_count();
}

int statistic_x(const ClosedComponent& c) { return c.euler_characteristic(); }

namespace {

bool twists_trivial(const Component& c) {
  auto all_zero = [](const std::vector<std::uint8_t>& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint8_t b) { return b == 0; });
  };
  return all_zero(c.input_twists) && all_zero(c.output_twists);
}

ComponentReport report_for(bool open, int chi, int boundary, const ComponentTopology& topo) {
  ComponentReport r;
  r.open = open;
  r.chi = chi;
  r.boundary = boundary;
  r.x = chi - boundary;
  r.crosscaps = topo.orientable ? 0 : topo.count;
  r.even = (r.x % 2) == 0;
  return r;
}

}  // namespace

MembershipReport in_ocob2(const Surface& s) {
  MembershipReport rep;
  rep.oriented = true;
  rep.orientable_cat = true;
  rep.unoriented = true;
  for (const Component& c : s.open) {
    ComponentReport r = report_for(true, c.euler_characteristic(), c.boundary_count(), c.topology);
    rep.orientable_cat = rep.orientable_cat && r.even;
    rep.oriented = rep.oriented && c.topology.orientable && twists_trivial(c);
    rep.components.push_back(r);
  }
  for (const ClosedComponent& c : s.closed) {
    ComponentReport r = report_for(false, c.euler_characteristic(), 0, c.topology);
    rep.orientable_cat = rep.orientable_cat && r.even;
    rep.oriented = rep.oriented && c.topology.orientable;
    rep.components.push_back(r);
  }
  return rep;
}

bool is_orientable_cobordism(const Surface& s) {
  for (const Component& c : s.open)
    if (!c.topology.orientable) return false;
  for (const ClosedComponent& c : s.closed)
    if (!c.topology.orientable) return false;
  return true;
}

bool term_in_flavor(const TermPtr& t, CategoryFlavor flavor) {
  if (flavor != CategoryFlavor::Unoriented && term_uses(t, Generator::Theta)) return false;
  if (flavor == CategoryFlavor::Oriented && term_uses(t, Generator::Phi)) return false;
  return true;
}

bool decide_equal(const TermPtr& t1, const TermPtr& t2, CategoryFlavor flavor) {
  for (const TermPtr& t : {t1, t2}) {
    if (!term_in_flavor(t, flavor))
      throw FlavorError("term " + render(t) + " uses a generator outside the " +
                        flavor_name(flavor) + " alphabet");
  }
  Arity a1 = arity(t1);
  Arity a2 = arity(t2);
  if (!(a1 == a2))
    throw ArityError("cannot compare terms of different arities: " +
                     std::to_string(a1.inputs) + "->" + std::to_string(a1.outputs) +
                     " vs " + std::to_string(a2.inputs) + "->" + std::to_string(a2.outputs));
  return surfaces_equal(normalize(t1), normalize(t2));
}

namespace {

TermPtr gen(Generator g) { return Term::make(g); }

TermPtr tensor_row(const std::vector<TermPtr>& factors) {
  if (factors.empty()) return gen(Generator::Empty);
  TermPtr t = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) t = Term::tensor(t, factors[i]);
  return t;
}

TermPtr id_wires(int n) {
  if (n == 0) return gen(Generator::Empty);
  TermPtr t = gen(Generator::Id);
  for (int i = 1; i < n; ++i) t = Term::tensor(t, gen(Generator::Id));
  return t;
}

TermPtr compose_chain(const std::vector<TermPtr>& stages) {
  // stages listed in application order: stages[0] acts first.
  if (stages.empty()) return gen(Generator::Empty);
  TermPtr t = stages[0];
  for (std::size_t i = 1; i < stages.size(); ++i) t = Term::compose(stages[i], t);
  return t;
}

// Adjacent-swap network realizing wire i -> position target[i] (0-based),
// built by a fixed bubble-sort pass order.
TermPtr permutation_term(const std::vector<int>& target) {
  int n = static_cast<int>(target.size());
  std::vector<int> cur = target;
  std::vector<TermPtr> layers;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p + 1 < n; ++p) {
      if (cur[p] > cur[p + 1]) {
        std::swap(cur[p], cur[p + 1]);
        std::vector<TermPtr> row;
        for (int q = 0; q < p; ++q) row.push_back(gen(Generator::Id));
        row.push_back(gen(Generator::Swap));
        for (int q = p + 2; q < n; ++q) row.push_back(gen(Generator::Id));
        layers.push_back(tensor_row(row));
        changed = true;
      }
    }
  }
  if (layers.empty()) return id_wires(n);
  return compose_chain(layers);
}

// 1 -> 1 stage multiplying by a handle.
TermPtr handle_stage() { return Term::compose(gen(Generator::Mul), gen(Generator::Comul)); }

// The punctured Klein bottle word; multiplying by it adds two crosscaps.
TermPtr klein_bottle_word() {
  return compose_chain({gen(Generator::Unit), gen(Generator::Comul),
                        Term::tensor(gen(Generator::Phi), gen(Generator::Id)),
                        gen(Generator::Mul)});
}

TermPtr crosscap_pair_stage() {
  return Term::compose(gen(Generator::Mul),
                       Term::tensor(klein_bottle_word(), gen(Generator::Id)));
}

TermPtr crosscap_stage() {
  return Term::compose(gen(Generator::Mul),
                       Term::tensor(gen(Generator::Theta), gen(Generator::Id)));
}

TermPtr fan_in(int p) {
  // p wires to one; p >= 2.
  TermPtr t = gen(Generator::Mul);
  for (int k = 3; k <= p; ++k)
    t = Term::compose(gen(Generator::Mul), Term::tensor(t, gen(Generator::Id)));
  return t;
}

TermPtr fan_out(int q) {
  TermPtr t = gen(Generator::Comul);
  for (int k = 3; k <= q; ++k)
    t = Term::compose(Term::tensor(t, gen(Generator::Id)), gen(Generator::Comul));
  return t;
}

TermPtr twist_row(const std::vector<std::uint8_t>& bits) {
  std::vector<TermPtr> row;
  for (std::uint8_t b : bits) row.push_back(gen(b ? Generator::Phi : Generator::Id));
  return tensor_row(row);
}

std::vector<TermPtr> topology_stages(const ComponentTopology& topo) {
  std::vector<TermPtr> stages;
  if (topo.orientable) {
    for (int i = 0; i < topo.count; ++i) stages.push_back(handle_stage());
  } else {
    for (int i = 0; i < topo.count / 2; ++i) stages.push_back(crosscap_pair_stage());
    if (topo.count % 2) stages.push_back(crosscap_stage());
  }
  return stages;
}

TermPtr component_core(const Component& c) {
  int p = static_cast<int>(c.inputs.size());
  int q = static_cast<int>(c.outputs.size());
  std::vector<TermPtr> stages;
  bool any_in_twist =
      std::any_of(c.input_twists.begin(), c.input_twists.end(), [](std::uint8_t b) { return b != 0; });
  bool any_out_twist =
      std::any_of(c.output_twists.begin(), c.output_twists.end(), [](std::uint8_t b) { return b != 0; });
  if (any_in_twist) stages.push_back(twist_row(c.input_twists));
  if (p == 0)
    stages.push_back(gen(Generator::Unit));
  else if (p >= 2)
    stages.push_back(fan_in(p));
  for (TermPtr& s : topology_stages(c.topology)) stages.push_back(std::move(s));
  if (q == 0)
    stages.push_back(gen(Generator::Counit));
  else if (q >= 2)
    stages.push_back(fan_out(q));
  if (any_out_twist) stages.push_back(twist_row(c.output_twists));
  if (stages.empty()) return gen(Generator::Id);
  return compose_chain(stages);
}

TermPtr closed_core(const ClosedComponent& c) {
  std::vector<TermPtr> stages;
  stages.push_back(gen(Generator::Unit));
  for (TermPtr& s : topology_stages(c.topology)) stages.push_back(std::move(s));
  stages.push_back(gen(Generator::Counit));
  return compose_chain(stages);
}

std::string describe_component(const Component& c) {
  std::ostringstream os;
  os << "component touching inputs {";
  for (std::size_t i = 0; i < c.inputs.size(); ++i) os << (i ? "," : "") << c.inputs[i];
  os << "} outputs {";
  for (std::size_t i = 0; i < c.outputs.size(); ++i) os << (i ? "," : "") << c.outputs[i];
  os << "}";
  return os.str();
}

void check_feasible(const Surface& s, CategoryFlavor flavor) {
  if (flavor == CategoryFlavor::Unoriented) return;
  for (const Component& c : s.open) {
    if (!c.topology.orientable) {
      if (flavor == CategoryFlavor::Oriented)
        throw FlavorError(describe_component(c) + " is non-orientable (X = " +
                          std::to_string(statistic_x(c)) + "), not an oriented morphism");
      if (c.topology.count % 2 != 0)
        throw FlavorError(describe_component(c) + " has odd crosscap count " +
                          std::to_string(c.topology.count) + " (X = " +
                          std::to_string(statistic_x(c)) + " is odd)");
    } else if (flavor == CategoryFlavor::Oriented && !twists_trivial(c)) {
      throw FlavorError(describe_component(c) +
                        " carries a nontrivial boundary twist, not an oriented morphism");
    }
  }
  for (const ClosedComponent& c : s.closed) {
    if (c.topology.orientable) continue;
    if (flavor == CategoryFlavor::Oriented)
      throw FlavorError("closed non-orientable component (k = " +
                        std::to_string(c.topology.count) + ") is not an oriented morphism");
    if (c.topology.count % 2 != 0)
      throw FlavorError("closed component has odd crosscap count " +
                        std::to_string(c.topology.count) + " (X = " +
                        std::to_string(statistic_x(c)) + " is odd)");
  }
}

}  // namespace

TermPtr synthesize_term(const Surface& s, CategoryFlavor flavor) {
  check_feasible(s, flavor);

  if (s.open.empty() && s.closed.empty()) return gen(Generator::Empty);

  std::vector<TermPtr> cores;
  std::vector<int> grouped_inputs, grouped_outputs;
  for (const Component& c : s.open) {
    cores.push_back(component_core(c));
    grouped_inputs.insert(grouped_inputs.end(), c.inputs.begin(), c.inputs.end());
    grouped_outputs.insert(grouped_outputs.end(), c.outputs.begin(), c.outputs.end());
  }
  for (const ClosedComponent& c : s.closed) cores.push_back(closed_core(c));

  TermPtr middle = tensor_row(cores);

  std::vector<TermPtr> stages;
  // Route global input wire i to its grouped slot.
  int n_in = s.arity.inputs;
  if (n_in > 0) {
    std::vector<int> target(n_in);
    for (int slot = 0; slot < n_in; ++slot) target[grouped_inputs[slot] - 1] = slot;
    bool identity = true;
    for (int i = 0; i < n_in; ++i) identity = identity && target[i] == i;
    if (!identity) stages.push_back(permutation_term(target));
  }
  stages.push_back(middle);
  // Route grouped output slot back to its global index.
  int n_out = s.arity.outputs;
  if (n_out > 0) {
    std::vector<int> target(n_out);
    for (int slot = 0; slot < n_out; ++slot) target[slot] = grouped_outputs[slot] - 1;
    bool identity = true;
    for (int i = 0; i < n_out; ++i) identity = identity && target[i] == i;
    if (!identity) stages.push_back(permutation_term(target));
  }
  return compose_chain(stages);
}

}  // namespace cob2
