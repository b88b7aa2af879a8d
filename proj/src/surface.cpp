#include "cob2/surface.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <numeric>
#include <sstream>
#include <utility>

namespace cob2 {

int Surface::euler_characteristic() const {
  int chi = 0;
  for (const Component& c : open) chi += c.euler_characteristic();
  for (const ClosedComponent& c : closed) chi += c.euler_characteristic();
  return chi;
}

namespace {

// Untwisted cylinder from input i to output o.
Component cylinder(int in, int out) {
  Component c;
  c.inputs = {in};
  c.outputs = {out};
  c.input_twists = {0};
  c.output_twists = {0};
  return c;
}

std::vector<std::uint8_t> flipped(const std::vector<std::uint8_t>& bits) {
  std::vector<std::uint8_t> r(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) r[i] = bits[i] ^ 1;
  return r;
}

void sort_ports(std::vector<int>& ports, std::vector<std::uint8_t>& twists) {
  std::vector<std::size_t> order(ports.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return ports[a] < ports[b]; });
  std::vector<int> p(ports.size());
  std::vector<std::uint8_t> t(ports.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    p[i] = ports[order[i]];
    if (!twists.empty()) t[i] = twists[order[i]];
  }
  ports = std::move(p);
  if (!twists.empty()) twists = std::move(t);
}

void canonicalize_component(Component& c) {
  sort_ports(c.inputs, c.input_twists);
  sort_ports(c.outputs, c.output_twists);
  if (!c.topology.orientable) {
    c.input_twists.clear();
    c.output_twists.clear();
    return;
  }
  std::vector<std::uint8_t> bits = c.input_twists;
  bits.insert(bits.end(), c.output_twists.begin(), c.output_twists.end());
  std::vector<std::uint8_t> flip = flipped(bits);
  if (flip < bits) {
    c.input_twists = flipped(c.input_twists);
    c.output_twists = flipped(c.output_twists);
  }
}

// Sort key: smallest port, inputs before outputs at equal index.
long component_key(const Component& c) {
  long best = LONG_MAX;
  for (int i : c.inputs) best = std::min(best, 2L * i);
  for (int o : c.outputs) best = std::min(best, 2L * o + 1);
  return best;
}

// Union-find over in-flight components with an orientation parity relative
// to the parent, so flipping a whole side during gluing is O(1).
struct GlueForest {
  struct Node {
    int parent;
    std::uint8_t parity;  // orientation relative to parent
  };
  struct RootData {
    int chi = 0;
    bool orientable = true;
    long theta = 0;
  };
  std::vector<Node> nodes;
  std::vector<RootData> data;

  int add(int chi, bool orientable, long theta) {
    int id = static_cast<int>(nodes.size());
    nodes.push_back({id, 0});
    data.push_back({chi, orientable, theta});
    return id;
  }

  int find(int x) {
    if (nodes[x].parent == x) return x;
    int root = find(nodes[x].parent);
    nodes[x].parity ^= nodes[nodes[x].parent].parity;
    nodes[x].parent = root;
    return root;
  }

  // Effective parity after full compression: find() leaves nodes either as
  // roots (parity 0) or direct children carrying parity-to-root.
  std::uint8_t parity_to_root(int x) {
    find(x);
    return nodes[x].parent == x ? std::uint8_t{0} : nodes[x].parity;
  }

  void unite(int ra, int rb, std::uint8_t rel) {
    nodes[rb].parent = ra;
    nodes[rb].parity = rel;
    data[ra].chi += data[rb].chi;
    data[ra].orientable = data[ra].orientable && data[rb].orientable;
    data[ra].theta += data[rb].theta;
  }
};

struct PortSite {
  int node = -1;
  std::uint8_t bit = 0;
};

}  // namespace

Surface canonicalize(Surface s) {
  for (Component& c : s.open) canonicalize_component(c);
  std::sort(s.open.begin(), s.open.end(), [](const Component& a, const Component& b) {
    return component_key(a) < component_key(b);
  });
  std::sort(s.closed.begin(), s.closed.end(),
            [](const ClosedComponent& a, const ClosedComponent& b) {
              auto key = [](const ClosedComponent& c) {
                return std::tuple<int, int, long>(c.topology.orientable ? 0 : 1,
                                                  c.topology.count, c.theta_count);
              };
              return key(a) < key(b);
            });
  return s;
}

Surface generator_surface(Generator g) {
  Surface s;
  switch (g) {
    case Generator::Mul: {
      s.arity = {2, 1};
      Component c;
      c.inputs = {1, 2};
      c.outputs = {1};
      c.input_twists = {0, 0};
      c.output_twists = {0};
      s.open = {c};
      break;
    }
    case Generator::Comul: {
      s.arity = {1, 2};
      Component c;
      c.inputs = {1};
      c.outputs = {1, 2};
      c.input_twists = {0};
      c.output_twists = {0, 0};
      s.open = {c};
      break;
    }
    case Generator::Unit: {
      s.arity = {0, 1};
      Component c;
      c.outputs = {1};
      c.output_twists = {0};
      s.open = {c};
      break;
    }
    case Generator::Counit: {
      s.arity = {1, 0};
      Component c;
      c.inputs = {1};
      c.input_twists = {0};
      s.open = {c};
      break;
    }
    case Generator::Swap:
      s.arity = {2, 2};
      s.open = {cylinder(1, 2), cylinder(2, 1)};
      break;
    case Generator::Phi: {
      s.arity = {1, 1};
      Component c = cylinder(1, 1);
      c.output_twists = {1};
      s.open = {c};
      break;
    }
    case Generator::Theta: {
      s.arity = {0, 1};
      Component c;
      c.outputs = {1};
      c.topology = {false, 1};
      c.theta_count = 1;
      s.open = {c};
      break;
    }
    case Generator::Id:
      s.arity = {1, 1};
      s.open = {cylinder(1, 1)};
      break;
    case Generator::Empty:
      s.arity = {0, 0};
      break;
  }
  return canonicalize(std::move(s));
}

Surface tensor_surface(const Surface& a, const Surface& b) {
  Surface s;
  s.arity = a.arity + b.arity;
  s.open = a.open;
  s.closed = a.closed;
  for (Component c : b.open) {
    for (int& i : c.inputs) i += a.arity.inputs;
    for (int& o : c.outputs) o += a.arity.outputs;
    s.open.push_back(std::move(c));
  }
  s.closed.insert(s.closed.end(), b.closed.begin(), b.closed.end());
  return canonicalize(std::move(s));
}

Surface compose_surface(const Surface& f, const Surface& g) {
  if (g.arity.outputs != f.arity.inputs)
    throw ArityError("cannot glue: right surface produces " +
                     std::to_string(g.arity.outputs) + " circle(s) but left consumes " +
                     std::to_string(f.arity.inputs));

  const int glued = g.arity.outputs;
  GlueForest forest;

  struct FinalPort {
    int node;
    int index;
    std::uint8_t bit;
  };
  std::vector<FinalPort> final_inputs, final_outputs;
  std::vector<PortSite> g_side(glued + 1), f_side(glued + 1);

  auto add_surface = [&](const Surface& s, bool is_g) {
    for (const Component& c : s.open) {
      int node = forest.add(c.euler_characteristic(), c.topology.orientable, c.theta_count);
      // Orientable genus enters chi already; crosscaps likewise. Record ports.
      for (std::size_t k = 0; k < c.inputs.size(); ++k) {
        std::uint8_t bit = c.topology.orientable ? c.input_twists[k] : 0;
        if (is_g)
          final_inputs.push_back({node, c.inputs[k], bit});
        else
          f_side[c.inputs[k]] = {node, bit};
      }
      for (std::size_t k = 0; k < c.outputs.size(); ++k) {
        std::uint8_t bit = c.topology.orientable ? c.output_twists[k] : 0;
        if (is_g)
          g_side[c.outputs[k]] = {node, bit};
        else
          final_outputs.push_back({node, c.outputs[k], bit});
      }
    }
  };
  add_surface(g, true);
  add_surface(f, false);

  for (int j = 1; j <= glued; ++j) {
    const PortSite& a = g_side[j];
    const PortSite& b = f_side[j];
    int ra = forest.find(a.node);
    int rb = forest.find(b.node);
    std::uint8_t ea = a.bit ^ forest.parity_to_root(a.node);
    std::uint8_t eb = b.bit ^ forest.parity_to_root(b.node);
    if (ra == rb) {
      // Self-gluing: matching orientation data adds a handle, mismatched
      // data adds a Klein handle; chi is unchanged either way.
      if (forest.data[ra].orientable && ea != eb) forest.data[ra].orientable = false;
    } else {
      bool both_orientable = forest.data[ra].orientable && forest.data[rb].orientable;
      std::uint8_t rel = both_orientable ? static_cast<std::uint8_t>(ea ^ eb) : 0;
      forest.unite(ra, rb, rel);
    }
  }

  // Collect roots into components; a root with no surviving ports closed up.
  Surface out;
  out.arity = {g.arity.inputs, f.arity.outputs};
  std::vector<Component> partial(forest.nodes.size());
  std::vector<bool> seen(forest.nodes.size(), false);

  auto attach = [&](const FinalPort& p, bool is_input) {
    int root = forest.find(p.node);
    std::uint8_t bit = p.bit ^ forest.parity_to_root(p.node);
    seen[root] = true;
    Component& c = partial[root];
    if (is_input) {
      c.inputs.push_back(p.index);
      c.input_twists.push_back(bit);
    } else {
      c.outputs.push_back(p.index);
      c.output_twists.push_back(bit);
    }
  };
  for (const FinalPort& p : final_inputs) attach(p, true);
  for (const FinalPort& p : final_outputs) attach(p, false);

  for (std::size_t r = 0; r < forest.nodes.size(); ++r) {
    if (forest.find(static_cast<int>(r)) != static_cast<int>(r)) continue;
    const GlueForest::RootData& d = forest.data[r];
    if (!seen[r]) {
      ClosedComponent cc;
      cc.theta_count = d.theta;
      if (d.orientable) {
        assert((2 - d.chi) % 2 == 0);
        cc.topology = {true, (2 - d.chi) / 2};
      } else {
        cc.topology = {false, 2 - d.chi};
        assert(cc.topology.count >= 1);
      }
      out.closed.push_back(cc);
      continue;
    }
    Component& c = partial[r];
    c.theta_count = d.theta;
    int b = c.boundary_count();
    if (d.orientable) {
      assert((2 - d.chi - b) % 2 == 0);
      c.topology = {true, (2 - d.chi - b) / 2};
      assert(c.topology.count >= 0);
    } else {
      c.topology = {false, 2 - d.chi - b};
      c.input_twists.clear();
      c.output_twists.clear();
      assert(c.topology.count >= 1);
    }
    out.open.push_back(std::move(c));
  }

  out.closed.insert(out.closed.end(), g.closed.begin(), g.closed.end());
  out.closed.insert(out.closed.end(), f.closed.begin(), f.closed.end());
  return canonicalize(std::move(out));
}

Surface normalize(const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::Generator:
      return generator_surface(t->generator());
    case Term::Kind::Compose:
      return compose_surface(normalize(t->left()), normalize(t->right()));
    case Term::Kind::Tensor:
      return tensor_surface(normalize(t->left()), normalize(t->right()));
  }
  throw std::logic_error("unknown term kind");
}

bool surfaces_equal(const Surface& a, const Surface& b) {
  if (a.arity != b.arity) return false;
  if (a.open.size() != b.open.size() || a.closed.size() != b.closed.size()) return false;
  for (std::size_t i = 0; i < a.open.size(); ++i) {
    const Component& x = a.open[i];
    const Component& y = b.open[i];
    if (x.inputs != y.inputs || x.outputs != y.outputs) return false;
    if (!(x.topology == y.topology)) return false;
    if (x.input_twists != y.input_twists || x.output_twists != y.output_twists) return false;
  }
  for (std::size_t i = 0; i < a.closed.size(); ++i)
    if (!(a.closed[i].topology == b.closed[i].topology)) return false;
  return true;
}

namespace {

void print_ports(std::ostringstream& os, const std::vector<int>& ports) {
  os << "[";
  for (std::size_t i = 0; i < ports.size(); ++i) {
    if (i) os << ",";
    os << ports[i];
  }
  os << "]";
}

void print_bits(std::ostringstream& os, const std::vector<std::uint8_t>& in,
                const std::vector<std::uint8_t>& out) {
  os << "[";
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (i) os << ",";
    os << int(in[i]);
  }
  os << "|";
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i) os << ",";
    os << int(out[i]);
  }
  os << "]";
}

}  // namespace

std::string to_text(const Surface& s) {
  if (s.open.empty() && s.closed.empty()) return "empty";
  std::ostringstream os;
  bool first = true;
  for (const Component& c : s.open) {
    if (!first) os << ";";
    first = false;
    os << "open{in=";
    print_ports(os, c.inputs);
    os << ",out=";
    print_ports(os, c.outputs);
    if (c.topology.orientable) {
      os << ",or,g=" << c.topology.count << ",tw=";
      print_bits(os, c.input_twists, c.output_twists);
    } else {
      os << ",nonor,k=" << c.topology.count;
    }
    os << "}";
  }
  for (const ClosedComponent& c : s.closed) {
    if (!first) os << ";";
    first = false;
    if (c.topology.orientable)
      os << "closed{or,g=" << c.topology.count << "}";
    else
      os << "closed{nonor,k=" << c.topology.count << "}";
  }
  return os.str();
}

}  // namespace cob2
