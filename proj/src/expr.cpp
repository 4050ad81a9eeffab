#include "hkts/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace hkts::expr {

namespace {

struct ParseFail {
  ParseError err;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Ast run() {
    skip_ws();
    Ast e = peek() == '[' ? vector_expr() : sum();
    skip_ws();
    if (pos_ < s_.size()) fail("end of input");
    return e;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& expected) {
    ParseError e;
    e.offset = pos_;
    e.expected = expected;
    e.found = pos_ < s_.size() ? std::string(1, s_[pos_]) : "end of input";
    throw ParseFail{std::move(e)};
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool consume(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("'") + c + "'");
  }

  static Ast make(Kind k, std::string op, std::vector<Ast> ch) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->op = std::move(op);
    n->child = std::move(ch);
    return n;
  }

  Ast vector_expr() {
    expect('[');
    std::vector<Ast> entries;
    entries.push_back(sum());
    while (consume(',')) entries.push_back(sum());
    expect(']');
    return make(Kind::Vector, "", std::move(entries));
  }

  Ast sum() {
    Ast lhs = term();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      lhs = make(Kind::Binary, std::string(1, c), {lhs, term()});
    }
  }

  Ast term() {
    Ast lhs = power();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '*' && c != '/') return lhs;
      ++pos_;
      lhs = make(Kind::Binary, std::string(1, c), {lhs, power()});
    }
  }

  Ast power() {
    Ast base = unary();
    if (consume('^')) return make(Kind::Binary, "^", {base, power()});  // right-assoc
    return base;
  }

  Ast unary() {
    if (consume('-')) return make(Kind::Neg, "", {unary()});
    return primary();
  }

  Ast comparison() {
    Ast lhs = sum();
    skip_ws();
    std::string op;
    if (peek() == '<' || peek() == '>') {
      op += s_[pos_++];
      if (peek() == '=') op += s_[pos_++];
    } else if (peek() == '=') {
      op += s_[pos_++];
    } else {
      fail("comparison operator");
    }
    return make(Kind::Compare, op, {lhs, sum()});
  }

  Ast primary() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Ast e = sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const size_t start = pos_;
      char* end = nullptr;
      const double v = std::strtod(s_.c_str() + start, &end);
      if (end == s_.c_str() + start) fail("number");
      pos_ = static_cast<size_t>(end - s_.c_str());
      auto n = std::make_shared<Node>();
      n->kind = Kind::Number;
      n->number = v;
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      skip_ws();
      if (peek() != '(') {
        if (name == "t") return make(Kind::Var, "t", {});
        pos_ = start;
        fail("variable 't'");
      }
      ++pos_;
      if (name == "piecewise") {
        Ast cond = comparison();
        expect(',');
        Ast then_e = sum();
        expect(',');
        Ast else_e = sum();
        expect(')');
        return make(Kind::Piecewise, "", {cond, then_e, else_e});
      }
      const bool unary_fn = name == "sin" || name == "cos" || name == "exp" ||
                            name == "log" || name == "sqrt" || name == "abs";
      const bool binary_fn = name == "min" || name == "max";
      if (!unary_fn && !binary_fn) {
        pos_ = start;
        fail("known function");
      }
      std::vector<Ast> args;
      args.push_back(sum());
      while (consume(',')) args.push_back(sum());
      expect(')');
      if (args.size() != (unary_fn ? 1u : 2u)) {
        pos_ = start;
        fail("correct arity for " + name);
      }
      return make(Kind::Call, name, std::move(args));
    }
    fail("operand");
  }
};

double eval_scalar(const Ast& ast, double t);

double eval_call(const Node& n, double t) {
  const double a = eval_scalar(n.child[0], t);
  if (n.op == "sin") return std::sin(a);
  if (n.op == "cos") return std::cos(a);
  if (n.op == "exp") return std::exp(a);
  if (n.op == "abs") return std::fabs(a);
  if (n.op == "log") {
    if (a <= 0.0) throw EvalError("log of non-positive argument", t);
    return std::log(a);
  }
  if (n.op == "sqrt") {
    if (a < 0.0) throw EvalError("sqrt of negative argument", t);
    return std::sqrt(a);
  }
  const double b = eval_scalar(n.child[1], t);
  return n.op == "min" ? std::min(a, b) : std::max(a, b);
}

bool eval_compare(const Node& n, double t) {
  const double a = eval_scalar(n.child[0], t);
  const double b = eval_scalar(n.child[1], t);
  if (n.op == "<") return a < b;
  if (n.op == "<=") return a <= b;
  if (n.op == ">") return a > b;
  if (n.op == ">=") return a >= b;
  return a == b;
}

double eval_scalar(const Ast& ast, double t) {
  const Node& n = *ast;
  switch (n.kind) {
    case Kind::Number:
      return n.number;
    case Kind::Var:
      return t;
    case Kind::Neg:
      return -eval_scalar(n.child[0], t);
    case Kind::Binary: {
      const double a = eval_scalar(n.child[0], t);
      const double b = eval_scalar(n.child[1], t);
      switch (n.op[0]) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/':
          if (b == 0.0) throw EvalError("division by zero", t);
          return a / b;
        default: {
          const double v = std::pow(a, b);
          if (!std::isfinite(v)) throw EvalError("power out of domain", t);
          return v;
        }
      }
    }
    case Kind::Call:
      return eval_call(n, t);
    case Kind::Piecewise:
      return eval_compare(*n.child[0], t) ? eval_scalar(n.child[1], t)
                                          : eval_scalar(n.child[2], t);
    default:
      throw EvalError("vector node in scalar context", t);
  }
}

void print_to(const Ast& ast, std::ostream& os) {
  const Node& n = *ast;
  switch (n.kind) {
    case Kind::Number: {
      std::ostringstream tmp;
      tmp.precision(17);
      tmp << n.number;
      os << tmp.str();
      return;
    }
    case Kind::Var:
      os << "t";
      return;
    case Kind::Neg:
      os << "(-";
      print_to(n.child[0], os);
      os << ")";
      return;
    case Kind::Binary:
    case Kind::Compare:
      os << "(";
      print_to(n.child[0], os);
      os << " " << n.op << " ";
      print_to(n.child[1], os);
      os << ")";
      return;
    case Kind::Call:
      os << n.op << "(";
      for (size_t i = 0; i < n.child.size(); ++i) {
        if (i) os << ", ";
        print_to(n.child[i], os);
      }
      os << ")";
      return;
    case Kind::Piecewise: {
      // The condition is printed bare: the grammar admits a comparison only
      // directly inside piecewise, never under parentheses.
      const Node& cond = *n.child[0];
      os << "piecewise(";
      print_to(cond.child[0], os);
      os << " " << cond.op << " ";
      print_to(cond.child[1], os);
      os << ", ";
      print_to(n.child[1], os);
      os << ", ";
      print_to(n.child[2], os);
      os << ")";
      return;
    }
    case Kind::Vector:
      os << "[";
      for (size_t i = 0; i < n.child.size(); ++i) {
        if (i) os << ", ";
        print_to(n.child[i], os);
      }
      os << "]";
      return;
  }
}

}  // namespace

std::string ParseError::render() const {
  std::ostringstream os;
  os << "parse error at offset " << offset << ": expected " << expected << ", found '"
     << found << "'";
  return os.str();
}

ParseResult parse(const std::string& text) {
  try {
    Parser p(text);
    return {p.run(), std::nullopt};
  } catch (const ParseFail& f) {
    return {nullptr, f.err};
  }
}

std::string print(const Ast& ast) {
  std::ostringstream os;
  print_to(ast, os);
  return os.str();
}

bool structurally_equal(const Ast& a, const Ast& b) {
  if (a->kind != b->kind || a->op != b->op || a->child.size() != b->child.size())
    return false;
  if (a->kind == Kind::Number && a->number != b->number) return false;
  for (size_t i = 0; i < a->child.size(); ++i)
    if (!structurally_equal(a->child[i], b->child[i])) return false;
  return true;
}

LatticeElement eval(const Ast& ast, double t) {
  if (ast->kind == Kind::Vector) {
    std::vector<double> coords;
    coords.reserve(ast->child.size());
    for (const auto& c : ast->child) coords.push_back(eval_scalar(c, t));
    return LatticeElement(std::move(coords));
  }
  return LatticeElement::scalar(eval_scalar(ast, t));
}

int dimension(const Ast& ast) {
  return ast->kind == Kind::Vector ? static_cast<int>(ast->child.size()) : 1;
}

std::set<std::string> free_vars(const Ast& ast) {
  std::set<std::string> vars;
  if (ast->kind == Kind::Var) vars.insert(ast->op);
  for (const auto& c : ast->child) {
    auto sub = free_vars(c);
    vars.insert(sub.begin(), sub.end());
  }
  return vars;
}

}  // namespace hkts::expr
