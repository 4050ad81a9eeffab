#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hkts/riesz.hpp"

namespace hkts::expr {

enum class Kind { Number, Var, Neg, Binary, Call, Piecewise, Compare, Vector };

struct Node;
using Ast = std::shared_ptr<const Node>;

struct Node {
  Kind kind = Kind::Number;
  double number = 0.0;      // Number
  std::string op;           // Binary: + - * / ^ ; Compare: < <= > >= = ; Call: name
  std::vector<Ast> child;   // operands / arguments / vector entries
};

struct ParseError {
  size_t offset = 0;       // 0-based byte offset
  std::string expected;
  std::string found;
  std::string render() const;
};

struct ParseResult {
  Ast ast;  // null on error
  std::optional<ParseError> error;
  bool ok() const { return ast != nullptr; }
};

/// Recursive-descent parser; vectors only at top level, `^` right-associative,
/// comparisons only inside piecewise conditions.
ParseResult parse(const std::string& text);

/// Canonical fully parenthesized form; parse(print(a)) is structurally equal
/// to a.
std::string print(const Ast& ast);

bool structurally_equal(const Ast& a, const Ast& b);

struct EvalError : std::runtime_error {
  EvalError(const std::string& what, double at) : std::runtime_error(what), t(at) {}
  double t;
};

/// Evaluates at t; scalar expressions yield dim 1, vectors dim d. Domain
/// violations (log/sqrt of a negative, division by zero) throw EvalError.
LatticeElement eval(const Ast& ast, double t);

int dimension(const Ast& ast);

std::set<std::string> free_vars(const Ast& ast);

}  // namespace hkts::expr
