#include "dessinkit/poly_parse.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dessinkit {

namespace {

struct Node {
  enum class Kind { Number, Symbol, Add, Sub, Mul, Div, Pow, Neg };
  Kind kind;
  Rational value;
  std::string name;
  unsigned long exponent = 0;
  std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return e;
  }

  const std::vector<std::string>& symbols() const { return symbols_; }

 private:
  NodePtr expr() {
    skip();
    NodePtr acc;
    if (peek('-')) {
      ++pos_;
      acc = make(Node::Kind::Neg, term());
    } else {
      if (peek('+')) ++pos_;
      acc = term();
    }
    for (;;) {
      skip();
      if (peek('+')) {
        ++pos_;
        acc = make(Node::Kind::Add, std::move(acc), term());
      } else if (peek('-')) {
        ++pos_;
        acc = make(Node::Kind::Sub, std::move(acc), term());
      } else {
        return acc;
      }
    }
  }

  NodePtr term() {
    NodePtr acc = power();
    for (;;) {
      skip();
      if (peek('*')) {
        ++pos_;
        acc = make(Node::Kind::Mul, std::move(acc), power());
      } else if (peek('/')) {
        ++pos_;
        skip();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("division is only allowed by a number literal");
        }
        acc = make(Node::Kind::Div, std::move(acc), number());
      } else if (pos_ < text_.size() &&
                 (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(' ||
                  text_[pos_] == '_')) {
        acc = make(Node::Kind::Mul, std::move(acc), power());
      } else {
        return acc;
      }
    }
  }

  NodePtr power() {
    NodePtr base = primary();
    skip();
    if (peek('^')) {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      auto n = make(Node::Kind::Pow, std::move(base));
      n->exponent = std::stoul(std::string(text_.substr(start, pos_ - start)));
      return n;
    }
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      skip();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto n = make(Node::Kind::Symbol);
      n->name = std::string(text_.substr(start, pos_ - start));
      bool known = false;
      for (const auto& s : symbols_) known = known || s == n->name;
      if (!known) symbols_.push_back(n->name);
      return n;
    }
    fail("unexpected character");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    auto n = make(Node::Kind::Number);
    n->value = Rational(Integer(std::string(text_.substr(start, pos_ - start))));
    return n;
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> symbols_;
};

template <class F>
Poly<F> evaluate(const Node& n, const std::string& variable,
                 const std::optional<std::pair<std::string, F>>& algebraic) {
  using P = Poly<F>;
  switch (n.kind) {
    case Node::Kind::Number:
      return P::constant(F(n.value));
    case Node::Kind::Symbol:
      if (algebraic && n.name == algebraic->first) return P::constant(algebraic->second);
      return P::variable();
    case Node::Kind::Add:
      return evaluate(*n.lhs, variable, algebraic) + evaluate(*n.rhs, variable, algebraic);
    case Node::Kind::Sub:
      return evaluate(*n.lhs, variable, algebraic) - evaluate(*n.rhs, variable, algebraic);
    case Node::Kind::Mul:
      return evaluate(*n.lhs, variable, algebraic) * evaluate(*n.rhs, variable, algebraic);
    case Node::Kind::Div: {
      if (is_zero(n.rhs->value)) throw ParseError("division by zero");
      return F(Rational(1) / n.rhs->value) * evaluate(*n.lhs, variable, algebraic);
    }
    case Node::Kind::Pow:
      return pow(evaluate(*n.lhs, variable, algebraic), n.exponent);
    case Node::Kind::Neg:
      return -evaluate(*n.lhs, variable, algebraic);
  }
  throw ParseError("malformed expression");
}

std::string pick_variable(const std::vector<std::string>& symbols, const std::string& reserved) {
  std::string variable;
  for (const auto& s : symbols) {
    if (s == reserved) continue;
    if (!variable.empty()) {
      throw ParseError("expression uses more than one variable: " + variable + ", " + s);
    }
    variable = s;
  }
  return variable.empty() ? "x" : variable;
}

}  // namespace

RatPoly parse_rat_poly(std::string_view text) {
  ExprParser parser(text);
  NodePtr root = parser.parse();
  const std::string variable = pick_variable(parser.symbols(), "");
  return evaluate<Rational>(*root, variable, std::nullopt);
}

NFPoly parse_nf_poly(std::string_view text, const FieldPtr& field) {
  ExprParser parser(text);
  NodePtr root = parser.parse();
  const std::string& gen = field->generator_name();
  const std::string variable = pick_variable(parser.symbols(), gen);
  return evaluate<NFElement>(*root, variable,
                             std::make_pair(gen, NFElement::generator(field)));
}

}  // namespace dessinkit
