#include "rwb/tree_action.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rwb {

namespace {

bool is_endomorphism(const FiniteSemigroup& S, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != S.order()) return false;
  for (int x : map)
    if (x < 0 || x >= S.order()) return false;
  for (int x = 0; x < S.order(); ++x)
    for (int y = 0; y < S.order(); ++y)
      if (map[static_cast<size_t>(S.op(x, y))] !=
          S.op(map[static_cast<size_t>(x)], map[static_cast<size_t>(y)]))
        return false;
  return true;
}

}  // namespace

TreeActionFin::TreeActionFin(FiniteSemigroup sg, RootedTree tree,
                             std::vector<SubSemigroup> node_sub, std::vector<SemigroupEndo> endos)
    : sg_(std::move(sg)),
      tree_(std::move(tree)),
      node_sub_(std::move(node_sub)),
      endos_(std::move(endos)) {
  validate();
}

bool TreeActionFin::carrier_contains(int t, int x) const {
  const auto& c = node_sub_.at(static_cast<size_t>(t)).carrier;
  return std::binary_search(c.begin(), c.end(), x);
}

void TreeActionFin::validate() const {
  if (static_cast<int>(node_sub_.size()) != tree_.size())
    throw MalformedAction("node_sub size must match tree size");
  for (const auto& sub : node_sub_)
    if (!is_closed_carrier(sg_, sub.carrier))
      throw MalformedAction("node subsemigroup empty or not closed");
  // Order preservation: t <= t' implies X_t <= X_t'.
  for (int t = 0; t < tree_.size(); ++t)
    for (int u = 0; u < tree_.size(); ++u)
      if (t != u && tree_.leq(t, u) &&
          !sub_leq(sg_, node_sub_[static_cast<size_t>(t)], node_sub_[static_cast<size_t>(u)]))
        throw MalformedAction("node_sub assignment is not order-preserving at nodes " +
                              std::to_string(t) + "," + std::to_string(u));
  for (const auto& e : endos_) {
    if (e.spine.tree() != tree_) throw MalformedAction("endo spine on a different tree");
    if (!is_endomorphism(sg_, e.map)) throw MalformedAction("endo map is not an endomorphism");
    for (int t = 0; t < tree_.size(); ++t) {
      int ft = e.spine(t);
      for (int x : node_sub_[static_cast<size_t>(t)].carrier) {
        if (!carrier_contains(ft, e.map[static_cast<size_t>(x)]))
          throw MalformedAction("endo does not map X_t into X_{spine(t)}");
        if (ft == t && e.map[static_cast<size_t>(x)] != x)
          throw MalformedAction("endo must fix X_t pointwise when the spine fixes t");
      }
    }
  }
  // Closure under composition with spine functoriality.
  auto key = [](const SemigroupEndo& e) { return std::make_pair(e.map, e.spine.image()); };
  std::set<std::pair<std::vector<int>, std::vector<int>>> present;
  for (const auto& e : endos_) present.insert(key(e));
  for (const auto& a : endos_) {
    for (const auto& b : endos_) {
      std::vector<int> comp(a.map.size());
      for (size_t x = 0; x < a.map.size(); ++x)
        comp[x] = a.map[static_cast<size_t>(b.map[x])];
      RegressiveHom spine = compose_homs(a.spine, b.spine);
      if (!present.count({comp, spine.image()}))
        throw MalformedAction("endo family not closed under composition");
    }
  }
}

TreeActionFin TreeActionFin::with_closure(FiniteSemigroup sg, RootedTree tree,
                                          std::vector<SubSemigroup> node_sub,
                                          std::vector<SemigroupEndo> generators) {
  std::set<std::pair<std::vector<int>, std::vector<int>>> present;
  std::vector<SemigroupEndo> family;
  for (auto& g : generators) {
    if (present.insert({g.map, g.spine.image()}).second) family.push_back(g);
  }
  for (size_t i = 0; i < family.size(); ++i) {
    for (size_t j = 0; j < family.size(); ++j) {
      std::vector<int> comp(family[i].map.size());
      for (size_t x = 0; x < comp.size(); ++x)
        comp[x] = family[i].map[static_cast<size_t>(family[j].map[x])];
      RegressiveHom spine = compose_homs(family[i].spine, family[j].spine);
      if (present.insert({comp, spine.image()}).second)
        family.push_back(SemigroupEndo{comp, spine});
    }
  }
  return TreeActionFin(std::move(sg), std::move(tree), std::move(node_sub), std::move(family));
}

bool TreeActionFin::is_layered(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (const auto& e : endos_) {
    for (int t = 1; t < tree_.size(); ++t) {
      int ft = e.spine(t);
      if (ft != t && ft != tree_.parent(t))
        return fail("spine moves node " + std::to_string(t) + " by more than one level");
    }
  }
  for (int t = 1; t < tree_.size(); ++t) {
    int tp = tree_.parent(t);
    std::vector<const SemigroupEndo*> one_step;
    for (const auto& e : endos_)
      if (e.spine(t) == tp && tp != t) one_step.push_back(&e);
    if (one_step.empty()) continue;
    for (int p : minimal_idempotents(sg_, node_sub_[static_cast<size_t>(tp)].carrier)) {
      bool found = false;
      for (int q : node_sub_[static_cast<size_t>(t)].carrier) {
        bool all = true;
        for (const auto* e : one_step)
          if (e->map[static_cast<size_t>(q)] != p) {
            all = false;
            break;
          }
        if (all) {
          found = true;
          break;
        }
      }
      if (!found)
        return fail("no lift in X_" + std::to_string(t) + " over minimal idempotent " +
                    std::to_string(p) + " of X_" + std::to_string(tp));
    }
  }
  return true;
}

std::string check_assignment_membership(const TreeActionFin& action,
                                        const IdempotentAssignment& xi) {
  const auto& tree = action.tree();
  if (static_cast<int>(xi.size()) != tree.size()) return "assignment size mismatch";
  for (int t = 0; t < tree.size(); ++t)
    if (!action.carrier_contains(t, xi[static_cast<size_t>(t)]))
      return "xi(" + std::to_string(t) + ") outside X_" + std::to_string(t);
  for (const auto& e : action.endos())
    for (int t = 0; t < tree.size(); ++t)
      if (e.map[static_cast<size_t>(xi[static_cast<size_t>(t)])] !=
          xi[static_cast<size_t>(e.spine(t))])
        return "endo equivariance fails at node " + std::to_string(t);
  return {};
}

std::string check_idempotent_assignment(const TreeActionFin& action,
                                        const IdempotentAssignment& xi) {
  std::string err = check_assignment_membership(action, xi);
  if (!err.empty()) return err;
  const auto& S = action.sg();
  const auto& tree = action.tree();
  for (int t = 0; t < tree.size(); ++t)
    if (!S.is_idempotent(xi[static_cast<size_t>(t)]))
      return "xi(" + std::to_string(t) + ") not idempotent";
  for (int t = 0; t < tree.size(); ++t)
    for (int u = 0; u < tree.size(); ++u)
      if (tree.leq(t, u) && !S.idempotent_leq(xi[static_cast<size_t>(t)], xi[static_cast<size_t>(u)]))
        return "xi not order-preserving at " + std::to_string(t) + " <= " + std::to_string(u);
  return {};
}

IdempotentAssignment order_preserving_idempotent(const TreeActionFin& action,
                                                 const IdempotentAssignment& seed) {
  const auto& S = action.sg();
  const auto& tree = action.tree();
  const int n = tree.size();

  std::string err = check_assignment_membership(action, seed);
  if (!err.empty()) throw PreconditionFailed("seed not in X_alpha: " + err);
  for (int t = 0; t < n; ++t)
    if (!S.is_idempotent(seed[static_cast<size_t>(t)]))
      throw PreconditionFailed("seed not idempotent at node " + std::to_string(t));

  const int H = tree.max_height();

  // Sum xi over pi_j(t) for j in [0, height(t)], left to right.
  auto ascend_sum = [&](const IdempotentAssignment& xi, int t) {
    int acc = xi[static_cast<size_t>(t)];
    int v = t;
    while (v != tree.root()) {
      v = tree.parent(v);
      acc = S.op(acc, xi[static_cast<size_t>(v)]);
    }
    return acc;
  };

  std::vector<IdempotentAssignment> stage;
  stage.push_back(seed);
  for (int k = 0; k < H; ++k) {
    const IdempotentAssignment& cur = stage.back();
    // Witness member of Z_k: t -> (xi^(k) o pi_0 + ... + xi^(k) o pi_n)(t).
    IdempotentAssignment w(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) w[static_cast<size_t>(t)] = ascend_sum(cur, t);
    // The idempotent of the monogenic subsemigroup <w> (coordinatewise:
    // every coordinate's unique idempotent power is reached at a common
    // exponent, so this is a power of w and stays inside Z_k).
    IdempotentAssignment next(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t)
      next[static_cast<size_t>(t)] = S.idempotent_power(w[static_cast<size_t>(t)]);

    err = check_assignment_membership(action, next);
    if (!err.empty())
      throw NoIdempotentInStage("stage " + std::to_string(k) + " left X_alpha (" + err + ")");
    for (int t0 : tree.nodes_up_to_height(k)) {
      if (next[static_cast<size_t>(t0)] != cur[static_cast<size_t>(t0)])
        throw NoIdempotentInStage("stage " + std::to_string(k) + " moved a settled node");
      for (int t = 0; t < n; ++t)
        if (tree.leq(t, t0) &&
            S.op(next[static_cast<size_t>(t)], next[static_cast<size_t>(t0)]) !=
                next[static_cast<size_t>(t)])
          throw NoIdempotentInStage("stage " + std::to_string(k) + " lost absorption");
    }
    stage.push_back(std::move(next));
  }

  // xi(t) = (xi^(n) o pi_n + ... + xi^(n) o pi_0)(t) for t of height n.
  IdempotentAssignment out(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) {
    int ht = tree.height(t);
    const IdempotentAssignment& xs = stage[static_cast<size_t>(ht)];
    int acc = xs[static_cast<size_t>(tree.predecessor(t, ht))];
    for (int j = ht - 1; j >= 0; --j)
      acc = S.op(acc, xs[static_cast<size_t>(tree.predecessor(t, j))]);
    out[static_cast<size_t>(t)] = acc;
  }

  err = check_idempotent_assignment(action, out);
  if (!err.empty()) throw NoIdempotentInStage("construction failed final check: " + err);
  if (out[0] != seed[0])
    throw NoIdempotentInStage("construction changed the root value");
  return out;
}

IdempotentAssignment layered_minimal_assignment(const TreeActionFin& action) {
  std::string why;
  if (!action.is_layered(&why)) throw NotLayered(why);

  const auto& S = action.sg();
  const auto& tree = action.tree();
  const int n = tree.size();
  IdempotentAssignment x(static_cast<size_t>(n), -1);

  auto pick_root = minimal_idempotents(S, action.node_sub(0).carrier);
  if (pick_root.empty()) throw NoIdempotentInStage("X_root has no idempotent");
  x[0] = pick_root.front();

  // Nodes in index order have parents already assigned (parent < child).
  for (int t = 1; t < n; ++t) {
    int tp = tree.parent(t);
    std::vector<const SemigroupEndo*> one_step;
    for (const auto& e : action.endos())
      if (e.spine(t) == tp) one_step.push_back(&e);

    if (one_step.empty()) {
      x[static_cast<size_t>(t)] =
          minimal_lift(S, action.node_sub(t), action.node_sub(tp), x[static_cast<size_t>(tp)]);
      continue;
    }
    // Y = {z in X_t : sigma(z) = x_{t-} for all one-step sigma}.
    std::vector<int> Y;
    for (int z : action.node_sub(t).carrier) {
      bool all = true;
      for (const auto* e : one_step)
        if (e->map[static_cast<size_t>(z)] != x[static_cast<size_t>(tp)]) {
          all = false;
          break;
        }
      if (all) Y.push_back(z);
    }
    if (Y.empty()) throw NoIdempotentInStage("lift fiber empty at node " + std::to_string(t));
    std::set<int> Yb;
    for (int y : Y) Yb.insert(S.op(y, x[static_cast<size_t>(tp)]));
    std::vector<int> carrier(Yb.begin(), Yb.end());
    int chosen = -1;
    for (int a : minimal_idempotents(S, carrier)) {
      if (S.op(x[static_cast<size_t>(tp)], a) == a && S.op(a, x[static_cast<size_t>(tp)]) == a) {
        chosen = a;
        break;
      }
    }
    if (chosen < 0)
      throw NoIdempotentInStage("no minimal idempotent below x_{t-} at node " + std::to_string(t));
    x[static_cast<size_t>(t)] = chosen;
  }

  std::string err = check_idempotent_assignment(action, x);
  if (!err.empty()) throw NoIdempotentInStage("layered construction failed check: " + err);
  for (int t = 0; t < n; ++t) {
    auto mins = minimal_idempotents(S, action.node_sub(t).carrier);
    if (std::find(mins.begin(), mins.end(), x[static_cast<size_t>(t)]) == mins.end())
      throw NoIdempotentInStage("x_t not minimal in X_t at node " + std::to_string(t));
  }
  return x;
}

}  // namespace rwb
