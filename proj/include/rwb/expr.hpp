#ifndef RWB_EXPR_HPP_
#define RWB_EXPR_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rwb/poly.hpp"

namespace rwb {

// Small total expression language shared by coloring expressions, scene
// predicates, and polynomial entry: integer arithmetic, comparisons and
// logical connectives (0/1 valued), calls like minpos(0) or count(0, 'a').
// Division and modulus by zero evaluate to 0 so every expression is total.
class Expr {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  enum class OpCode {
    constant, ident, call, neg,
    add, sub, mul, div, mod,
    lt, le, gt, ge, eq, ne,
    land, lor
  };

  struct Node {
    OpCode op;
    std::int64_t value = 0;     // constant
    std::string name;           // ident / call
    std::vector<NodePtr> args;  // call args or operands
  };

  static Expr parse(const std::string& text, int line_offset = 1);

  // name(args) resolution; bare identifiers get an empty arg list.
  using Env = std::function<std::int64_t(const std::string&, const std::vector<std::int64_t>&)>;
  std::int64_t eval(const Env& env) const;

  // Polynomial interpretation: identifiers resolve through var_of (e.g.
  // z0..z{m-1}); only + - * and division by a constant are meaningful.
  Poly eval_poly(int vars, const std::function<Poly(const std::string&)>& var_of) const;

  const std::string& text() const { return text_; }
  bool empty() const { return !root_; }

 private:
  NodePtr root_;
  std::string text_;
};

}  // namespace rwb

#endif  // RWB_EXPR_HPP_
