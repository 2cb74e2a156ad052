#include "rwb/poly.hpp"

#include <sstream>

#include "rwb/errors.hpp"

namespace rwb {

ExtendedPoly ExtendedPoly::var() {
  ExtendedPoly p;
  p.kind_ = Kind::var;
  p.arity_ = 1;
  return p;
}

ExtendedPoly ExtendedPoly::op(int op_tag, ExtendedPoly left, ExtendedPoly right) {
  ExtendedPoly p;
  p.kind_ = Kind::op;
  p.op_tag_ = op_tag;
  p.arity_ = left.arity() + right.arity();
  p.left_ = std::make_shared<const ExtendedPoly>(std::move(left));
  p.right_ = std::make_shared<const ExtendedPoly>(std::move(right));
  return p;
}

ExtendedPoly ExtendedPoly::left_const(int op_tag, std::int64_t constant, ExtendedPoly sub) {
  ExtendedPoly p;
  p.kind_ = Kind::left_const;
  p.op_tag_ = op_tag;
  p.constant_ = constant;
  p.arity_ = sub.arity();
  p.left_ = std::make_shared<const ExtendedPoly>(std::move(sub));
  return p;
}

ExtendedPoly ExtendedPoly::right_const(int op_tag, ExtendedPoly sub, std::int64_t constant) {
  ExtendedPoly p;
  p.kind_ = Kind::right_const;
  p.op_tag_ = op_tag;
  p.constant_ = constant;
  p.arity_ = sub.arity();
  p.left_ = std::make_shared<const ExtendedPoly>(std::move(sub));
  return p;
}

std::string ExtendedPoly::str() const {
  std::ostringstream os;
  int next_var = 0;
  auto rec = [&](auto&& self, const ExtendedPoly& p) -> void {
    switch (p.kind()) {
      case Kind::var:
        os << "x" << next_var++;
        break;
      case Kind::op:
        os << "(";
        self(self, p.left());
        os << " op" << p.op_tag() << " ";
        self(self, p.right());
        os << ")";
        break;
      case Kind::left_const:
        os << "(" << p.constant() << " op" << p.op_tag() << " ";
        self(self, p.left());
        os << ")";
        break;
      case Kind::right_const:
        os << "(";
        self(self, p.left());
        os << " op" << p.op_tag() << " " << p.constant() << ")";
        break;
    }
  };
  rec(rec, *this);
  return os.str();
}

namespace {

std::int64_t eval_rec(const ExtendedPoly& p, const std::int64_t* args,
                      const std::vector<PartialOp>& ops) {
  auto apply = [&](int tag, std::int64_t a, std::int64_t b) {
    if (tag < 0 || tag >= static_cast<int>(ops.size()))
      throw ArityMismatch("operation tag " + std::to_string(tag) + " unbound");
    auto r = ops[static_cast<size_t>(tag)](a, b);
    if (!r) throw UndefinedProduct("partial operation undefined");
    return *r;
  };
  switch (p.kind()) {
    case ExtendedPoly::Kind::var:
      return args[0];
    case ExtendedPoly::Kind::op: {
      std::int64_t l = eval_rec(p.left(), args, ops);
      std::int64_t r = eval_rec(p.right(), args + p.left().arity(), ops);
      return apply(p.op_tag(), l, r);
    }
    case ExtendedPoly::Kind::left_const:
      return apply(p.op_tag(), p.constant(), eval_rec(p.left(), args, ops));
    case ExtendedPoly::Kind::right_const:
      return apply(p.op_tag(), eval_rec(p.left(), args, ops), p.constant());
  }
  throw Error("unreachable");
}

}  // namespace

std::int64_t eval_extended(const ExtendedPoly& p, const std::vector<std::int64_t>& args,
                           const std::vector<PartialOp>& ops) {
  if (static_cast<int>(args.size()) != p.arity())
    throw ArityMismatch("expected " + std::to_string(p.arity()) + " arguments, got " +
                        std::to_string(args.size()));
  return eval_rec(p, args.data(), ops);
}

Poly Poly::constant(int vars, Rational c) {
  Poly p(vars);
  if (c != Rational(0)) p.terms_[std::vector<int>(static_cast<size_t>(vars), 0)] = c;
  return p;
}

Poly Poly::variable(int vars, int index) {
  Poly p(vars);
  std::vector<int> e(static_cast<size_t>(vars), 0);
  e.at(static_cast<size_t>(index)) = 1;
  p.terms_[e] = Rational(1);
  return p;
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

void Poly::add_term(const std::vector<int>& expo, Rational c) {
  auto it = terms_.find(expo);
  if (it == terms_.end()) {
    if (c != Rational(0)) terms_[expo] = c;
    return;
  }
  it->second = it->second + c;
  if (it->second == Rational(0)) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out(vars_);
  for (const auto& [e0, c0] : terms_) {
    for (const auto& [e1, c1] : o.terms_) {
      std::vector<int> e(e0);
      for (size_t i = 0; i < e.size(); ++i) e[i] += e1[i];
      out.add_term(e, c0 * c1);
    }
  }
  return out;
}

Poly Poly::scaled(Rational c) const {
  Poly out(vars_);
  if (c == Rational(0)) return out;
  for (const auto& [e, k] : terms_) out.terms_[e] = k * c;
  return out;
}

Rational Poly::eval(const std::vector<std::int64_t>& point) const {
  if (static_cast<int>(point.size()) != vars_)
    throw ArityMismatch("polynomial expects " + std::to_string(vars_) + " coordinates");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term = term * Rational(point[i]);
    acc = acc + term;
  }
  return acc;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) os << "*z" << i;
  }
  return os.str();
}

std::vector<std::int64_t> IntPolyVec::eval(const std::vector<std::int64_t>& point) const {
  std::vector<std::int64_t> out;
  for (const auto& p : components_) {
    Rational v = p.eval(point);
    if (!v.is_integer()) throw NotIntegerValued("non-integer value", "");
    out.push_back(v.num);
  }
  return out;
}

IntPolyVec IntPolyVec::validate(std::vector<Poly> components, int declared_degree,
                                bool require_zero_at_origin) {
  if (components.empty()) throw PreconditionFailed("empty polynomial vector");
  const int m = components[0].vars();
  for (const auto& p : components) {
    if (p.vars() != m) throw PreconditionFailed("components disagree on variable count");
    if (p.degree() > declared_degree)
      throw PreconditionFailed("component degree exceeds the declared bound");
  }
  // Grid {-1..degree+1}^m covers {0..degree}^m and its +-1 shifts per axis.
  std::vector<std::int64_t> point(static_cast<size_t>(m), -1);
  const std::int64_t hi = declared_degree + 1;
  bool done = false;
  while (!done) {
    for (const auto& p : components) {
      Rational v = p.eval(point);
      if (!v.is_integer()) {
        std::ostringstream os;
        os << "(";
        for (size_t i = 0; i < point.size(); ++i) os << (i ? "," : "") << point[i];
        os << ")";
        throw NotIntegerValued("polynomial " + p.str() + " is not integer at " + os.str(),
                               os.str());
      }
    }
    done = true;
    for (size_t i = 0; i < point.size(); ++i) {
      if (point[i] < hi) {
        ++point[i];
        for (size_t j = 0; j < i; ++j) point[j] = -1;
        done = false;
        break;
      }
    }
  }
  if (require_zero_at_origin) {
    std::vector<std::int64_t> origin(static_cast<size_t>(m), 0);
    for (const auto& p : components)
      if (!(p.eval(origin) == Rational(0)))
        throw NonzeroAtOrigin("polynomial " + p.str() + " does not vanish at 0");
  }
  IntPolyVec out;
  out.components_ = std::move(components);
  return out;
}

IntPolyVec IntPolyVec::identity(int dim) {
  std::vector<Poly> comps;
  for (int i = 0; i < dim; ++i) comps.push_back(Poly::variable(dim, i));
  return validate(std::move(comps), 1, true);
}

}  // namespace rwb
