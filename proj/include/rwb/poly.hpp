#ifndef RWB_POLY_HPP_
#define RWB_POLY_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rwb/util.hpp"

namespace rwb {

// Extended-polynomial AST over a family of (possibly partial) binary
// operations. Variable blocks of an OpNode are consecutive and disjoint:
// the left subtree spans x_0..x_{n-1}, the right one x_n..x_{n+m-1}, which
// the representation makes structural (each node stores its arity and the
// right subtree is interpreted with shifted arguments).
class ExtendedPoly {
 public:
  enum class Kind { var, op, left_const, right_const };

  static ExtendedPoly var();
  static ExtendedPoly op(int op_tag, ExtendedPoly left, ExtendedPoly right);
  static ExtendedPoly left_const(int op_tag, std::int64_t constant, ExtendedPoly sub);
  static ExtendedPoly right_const(int op_tag, ExtendedPoly sub, std::int64_t constant);

  Kind kind() const { return kind_; }
  int arity() const { return arity_; }
  int op_tag() const { return op_tag_; }
  std::int64_t constant() const { return constant_; }
  const ExtendedPoly& left() const { return *left_; }
  const ExtendedPoly& right() const { return *right_; }

  std::string str() const;

 private:
  ExtendedPoly() = default;
  Kind kind_ = Kind::var;
  int arity_ = 1;
  int op_tag_ = 0;
  std::int64_t constant_ = 0;
  std::shared_ptr<const ExtendedPoly> left_;
  std::shared_ptr<const ExtendedPoly> right_;
};

// Partial binary operation on 64-bit values; nullopt = undefined.
using PartialOp = std::function<std::optional<std::int64_t>(std::int64_t, std::int64_t)>;

// Structural evaluation; undefinedness of a partial operation propagates as
// UndefinedProduct. ArityMismatch when args do not match the declared arity.
std::int64_t eval_extended(const ExtendedPoly& p, const std::vector<std::int64_t>& args,
                           const std::vector<PartialOp>& ops);

// Multivariate polynomial with rational coefficients, monomial map keyed by
// exponent vectors.
class Poly {
 public:
  explicit Poly(int vars) : vars_(vars) {}
  static Poly constant(int vars, Rational c);
  static Poly variable(int vars, int index);

  int vars() const { return vars_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  int degree() const;
  bool is_zero() const { return terms_.empty(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Rational c) const;

  Rational eval(const std::vector<std::int64_t>& point) const;

  std::string str() const;

 private:
  int vars_;
  std::map<std::vector<int>, Rational> terms_;
  void add_term(const std::vector<int>& expo, Rational c);
};

// Vector of integer-valued polynomials Z^m -> Z^d, certified by evaluation
// on a grid of consecutive integer points (integer-valued on degree+1
// consecutive integers per variable forces integrality everywhere).
class IntPolyVec {
 public:
  const std::vector<Poly>& components() const { return components_; }
  int input_vars() const { return components_.empty() ? 0 : components_[0].vars(); }
  int output_dim() const { return static_cast<int>(components_.size()); }

  std::vector<std::int64_t> eval(const std::vector<std::int64_t>& point) const;

  // Throws NotIntegerValued (with a witness point) or NonzeroAtOrigin.
  static IntPolyVec validate(std::vector<Poly> components, int declared_degree,
                             bool require_zero_at_origin);

  static IntPolyVec identity(int dim);

 private:
  std::vector<Poly> components_;
};

}  // namespace rwb

#endif  // RWB_POLY_HPP_
