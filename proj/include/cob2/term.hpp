#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cob2 {

/// Generator alphabet of the cobordism term language. `Empty` is the identity
/// of the monoidal unit (the 0 -> 0 morphism), spelled `empty` in the syntax.
enum class Generator { Mul, Unit, Comul, Counit, Swap, Phi, Theta, Id, Empty };

struct Arity {
  int inputs = 0;
  int outputs = 0;

  friend bool operator==(const Arity& a, const Arity& b) {
    return a.inputs == b.inputs && a.outputs == b.outputs;
  }
  friend bool operator!=(const Arity& a, const Arity& b) { return !(a == b); }
  friend Arity operator+(const Arity& a, const Arity& b) {
    return {a.inputs + b.inputs, a.outputs + b.outputs};
  }
};

Arity generator_arity(Generator g);
std::string_view generator_name(Generator g);

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Immutable syntax tree: a generator leaf, a composition f . g (g applied
/// first), or a tensor juxtaposition a * b (a on the lower-numbered wires).
class Term {
 public:
  enum class Kind { Generator, Compose, Tensor };

  static TermPtr make(Generator g);
  static TermPtr compose(TermPtr after, TermPtr first);
  static TermPtr tensor(TermPtr top, TermPtr bottom);

  Kind kind() const { return kind_; }
  Generator generator() const { return generator_; }
  const TermPtr& left() const { return left_; }
  const TermPtr& right() const { return right_; }

 private:
  Term(Kind k, Generator g, TermPtr l, TermPtr r)
      : kind_(k), generator_(g), left_(std::move(l)), right_(std::move(r)) {}

  Kind kind_;
  Generator generator_;
  TermPtr left_;
  TermPtr right_;
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t byte_offset, const std::string& what)
      : std::runtime_error("syntax error at byte " + std::to_string(byte_offset) +
                           ": " + what),
        offset(byte_offset) {}
  std::size_t offset;
};

struct ArityError : std::runtime_error {
  explicit ArityError(const std::string& what) : std::runtime_error(what) {}
};

/// Arity computed bottom-up; throws ArityError naming the first composition
/// whose interface counts disagree.
Arity arity(const TermPtr& t);

/// Parses the concrete syntax (see README) and arity-checks the result.
TermPtr parse(std::string_view text);

/// Canonical fully parenthesized text; parse(render(t)) == t structurally.
std::string render(const TermPtr& t);

bool term_eq(const TermPtr& a, const TermPtr& b);

/// Number of generator leaves (`empty` included).
std::size_t term_size(const TermPtr& t);

bool term_uses(const TermPtr& t, Generator g);

/// Rebuilds t with every generator leaf replaced through `f`.
TermPtr map_generators(const TermPtr& t, const std::function<Generator(Generator)>& f);

}  // namespace cob2
