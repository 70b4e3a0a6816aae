#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "deformata/defquant/hpoly.hpp"
#include "deformata/defquant/hseries.hpp"
#include "deformata/errors.hpp"
#include "deformata/exactalg/ratfn.hpp"

namespace deformata::frontend {

using defquant::HPoly;
using defquant::HSeries;
using exactalg::Poly;
using exactalg::RatFn;
using exactalg::Scalar;
using exactalg::VarList;

// Syntax or semantic error tied to a source position (1-based).
class ParseError : public InputError {
 public:
  ParseError(int line, int col, const std::string& msg);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

struct Expr {
  enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow, Call };
  Kind kind = Kind::Number;
  mpz_class number;        // Number literal, or the exponent of Pow
  std::string name;        // Symbol / Call
  std::vector<Expr> args;  // operands
  int line = 0, col = 0;

  friend bool operator==(const Expr& a, const Expr& b);
};

struct Value {
  enum class Kind { Expr, List, String };
  Kind kind = Kind::Expr;
  Expr expr;
  std::vector<Value> items;
  std::string text;
  int line = 0, col = 0;

  // Label text of a bare symbol or natural number; nullopt otherwise.
  std::optional<std::string> as_label() const;
  friend bool operator==(const Value& a, const Value& b);
};

struct Entry {
  std::string key;
  Value value;
  int line = 0, col = 0;
  friend bool operator==(const Entry& a, const Entry& b) { return a.key == b.key && a.value == b.value; }
};

struct Block {
  std::string kind;  // algebra | poisson | hopf | action
  std::string name;
  std::vector<Entry> entries;
  int line = 0, col = 0;

  const Value* find(std::string_view key) const;
  // ParseError at the block when missing.
  const Value& require(std::string_view key) const;
  friend bool operator==(const Block& a, const Block& b) {
    return a.kind == b.kind && a.name == b.name && a.entries == b.entries;
  }
};

struct Document {
  std::vector<Block> blocks;
  friend bool operator==(const Document& a, const Document& b) { return a.blocks == b.blocks; }
};

// document := block+ ; block := KIND NAME '{' (key '=' value)* '}'.
// Names must be unique per document; keys unique per block. '#' starts a comment.
Document parse(std::string_view text);
Expr parse_expression(std::string_view text);

// Evaluation of expressions. Products are commutative and denote normal-ordered
// elements; 'h' is the deformation parameter and may not name a variable.
Scalar eval_scalar(const Expr& e);
std::size_t eval_nat(const Expr& e);
Poly eval_poly(const Expr& e, const std::shared_ptr<const VarList>& vars);
HPoly eval_hpoly(const Expr& e, const std::shared_ptr<const VarList>& vars, std::size_t order);
// An h-polynomial with scalar coefficients, or exp(c*h).
HSeries eval_series(const Expr& e, std::size_t order);
// The only context in which '/' may have a non-constant divisor.
RatFn eval_ratfn(const Expr& e, const std::shared_ptr<const VarList>& vars);

std::string expr_to_string(const Expr& e);

}  // namespace deformata::frontend
