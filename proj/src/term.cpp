#include "cob2/term.hpp"

#include <array>
#include <cctype>
#include <utility>
#include <vector>

namespace cob2 {

Arity generator_arity(Generator g) {
  switch (g) {
    case Generator::Mul: return {2, 1};
    case Generator::Unit: return {0, 1};
    case Generator::Comul: return {1, 2};
    case Generator::Counit: return {1, 0};
    case Generator::Swap: return {2, 2};
    case Generator::Phi: return {1, 1};
    case Generator::Theta: return {0, 1};
    case Generator::Id: return {1, 1};
    case Generator::Empty: return {0, 0};
  }
  throw std::logic_error("unknown generator");
}

std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::Mul: return "mul";
    case Generator::Unit: return "unit";
    case Generator::Comul: return "comul";
    case Generator::Counit: return "counit";
    case Generator::Swap: return "swap";
    case Generator::Phi: return "phi";
    case Generator::Theta: return "theta";
    case Generator::Id: return "id";
    case Generator::Empty: return "empty";
  }
  throw std::logic_error("unknown generator");
}

TermPtr Term::make(Generator g) {
  return TermPtr(new Term(Kind::Generator, g, nullptr, nullptr));
}

TermPtr Term::compose(TermPtr after, TermPtr first) {
  return TermPtr(new Term(Kind::Compose, Generator::Id, std::move(after), std::move(first)));
}

TermPtr Term::tensor(TermPtr top, TermPtr bottom) {
  return TermPtr(new Term(Kind::Tensor, Generator::Id, std::move(top), std::move(bottom)));
}

Arity arity(const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::Generator:
      return generator_arity(t->generator());
    case Term::Kind::Compose: {
      Arity f = arity(t->left());
      Arity g = arity(t->right());
      if (g.outputs != f.inputs)
        throw ArityError("arity mismatch in " + render(t) + ": left factor consumes " +
                         std::to_string(f.inputs) + " circle(s) but right factor produces " +
                         std::to_string(g.outputs));
      return {g.inputs, f.outputs};
    }
    case Term::Kind::Tensor:
      return arity(t->left()) + arity(t->right());
  }
  throw std::logic_error("unknown term kind");
}

std::string render(const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::Generator:
      return std::string(generator_name(t->generator()));
    case Term::Kind::Compose:
      return "(" + render(t->left()) + " . " + render(t->right()) + ")";
    case Term::Kind::Tensor:
      return "(" + render(t->left()) + " * " + render(t->right()) + ")";
  }
  throw std::logic_error("unknown term kind");
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  if (a->kind() == Term::Kind::Generator) return a->generator() == b->generator();
  return term_eq(a->left(), b->left()) && term_eq(a->right(), b->right());
}

std::size_t term_size(const TermPtr& t) {
  if (t->kind() == Term::Kind::Generator) return 1;
  return term_size(t->left()) + term_size(t->right());
}

bool term_uses(const TermPtr& t, Generator g) {
  if (t->kind() == Term::Kind::Generator) return t->generator() == g;
  return term_uses(t->left(), g) || term_uses(t->right(), g);
}

TermPtr map_generators(const TermPtr& t, const std::function<Generator(Generator)>& f) {
  switch (t->kind()) {
    case Term::Kind::Generator:
      return Term::make(f(t->generator()));
    case Term::Kind::Compose:
      return Term::compose(map_generators(t->left(), f), map_generators(t->right(), f));
    case Term::Kind::Tensor:
      return Term::tensor(map_generators(t->left(), f), map_generators(t->right(), f));
  }
  throw std::logic_error("unknown term kind");
}

namespace {

struct Token {
  enum class Kind { Word, Dot, Star, LParen, RParen, End };
  Kind kind;
  std::string_view text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Token::Kind::End, {}, start};
      return;
    }
    char c = text_[pos_];
    if (c == '.') { ++pos_; current_ = {Token::Kind::Dot, text_.substr(start, 1), start}; return; }
    if (c == '*') { ++pos_; current_ = {Token::Kind::Star, text_.substr(start, 1), start}; return; }
    if (c == '(') { ++pos_; current_ = {Token::Kind::LParen, text_.substr(start, 1), start}; return; }
    if (c == ')') { ++pos_; current_ = {Token::Kind::RParen, text_.substr(start, 1), start}; return; }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      current_ = {Token::Kind::Word, text_.substr(start, pos_ - start), start};
      return;
    }
    throw ParseError(start, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Token::Kind::End, {}, 0};
};

// term := comp ; comp := tens { "." tens } ; tens := atom { "*" atom } ;
// atom := generator-word | "(" term ")".
class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  TermPtr parse_all() {
    TermPtr t = parse_comp();
    const Token& tok = lex_.peek();
    if (tok.kind != Token::Kind::End)
      throw ParseError(tok.offset, "trailing input '" + std::string(tok.text) + "'");
    return t;
  }

 private:
  TermPtr parse_comp() {
    TermPtr t = parse_tens();
    while (lex_.peek().kind == Token::Kind::Dot) {
      lex_.take();
      t = Term::compose(std::move(t), parse_tens());
    }
    return t;
  }

  TermPtr parse_tens() {
    TermPtr t = parse_atom();
    while (lex_.peek().kind == Token::Kind::Star) {
      lex_.take();
      t = Term::tensor(std::move(t), parse_atom());
    }
    return t;
  }

  TermPtr parse_atom() {
    Token tok = lex_.take();
    switch (tok.kind) {
      case Token::Kind::Word: {
        static constexpr std::array<Generator, 9> kAll = {
            Generator::Mul,  Generator::Unit,  Generator::Comul,
            Generator::Counit, Generator::Swap, Generator::Phi,
            Generator::Theta, Generator::Id,   Generator::Empty};
        for (Generator g : kAll)
          if (tok.text == generator_name(g)) return Term::make(g);
        throw ParseError(tok.offset, "unknown generator '" + std::string(tok.text) + "'");
      }
      case Token::Kind::LParen: {
        TermPtr t = parse_comp();
        const Token& close = lex_.peek();
        if (close.kind != Token::Kind::RParen)
          throw ParseError(close.offset, "expected ')'");
        lex_.take();
        return t;
      }
      case Token::Kind::End:
        throw ParseError(tok.offset, "unexpected end of input");
      default:
        throw ParseError(tok.offset, "expected a generator or '('");
    }
  }

  Lexer lex_;
};

}  // namespace

TermPtr parse(std::string_view text) {
  TermPtr t = Parser(text).parse_all();
  arity(t);  // reject ill-typed compositions up front
  return t;
}

}  // namespace cob2
