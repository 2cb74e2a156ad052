#ifndef RWB_TREE_ACTION_HPP_
#define RWB_TREE_ACTION_HPP_

#include <string>
#include <vector>

#include "rwb/semigroup.hpp"
#include "rwb/tree.hpp"

namespace rwb {

// Semigroup endomorphism together with its declared spine.
struct SemigroupEndo {
  std::vector<int> map;  // total on 0..order-1
  RegressiveHom spine;
};

// Finite shadow of an action of a rooted tree on a compact right
// topological semigroup: an order-preserving assignment of subsemigroups
// to nodes and an endomorphism family with regressive spines, where each
// endo maps X_t into X_{spine(t)} and fixes X_t pointwise when the spine
// fixes t.
class TreeActionFin {
 public:
  TreeActionFin(FiniteSemigroup sg, RootedTree tree, std::vector<SubSemigroup> node_sub,
                std::vector<SemigroupEndo> endos);

  const FiniteSemigroup& sg() const { return sg_; }
  const RootedTree& tree() const { return tree_; }
  const SubSemigroup& node_sub(int t) const { return node_sub_.at(static_cast<size_t>(t)); }
  const std::vector<SemigroupEndo>& endos() const { return endos_; }

  bool carrier_contains(int t, int x) const;

  // Every spine moves each node by at most one level and the one-step lift
  // condition holds (checked exhaustively on the finite carrier).
  bool is_layered(std::string* why = nullptr) const;

  // Closes an endo family under composition (bounded by the finite map
  // space) before validating.
  static TreeActionFin with_closure(FiniteSemigroup sg, RootedTree tree,
                                    std::vector<SubSemigroup> node_sub,
                                    std::vector<SemigroupEndo> generators);

 private:
  FiniteSemigroup sg_;
  RootedTree tree_;
  std::vector<SubSemigroup> node_sub_;
  std::vector<SemigroupEndo> endos_;

  void validate() const;
};

// xi: node -> element.
using IdempotentAssignment = std::vector<int>;

// Empty string when xi is a valid member of X_alpha (per-node membership and
// endo-equivariance); otherwise a description of the first failure.
std::string check_assignment_membership(const TreeActionFin& action,
                                        const IdempotentAssignment& xi);

// Full IdempotentAssignment contract: membership, per-node idempotence,
// order preservation along the tree, and endo-equivariance.
std::string check_idempotent_assignment(const TreeActionFin& action,
                                        const IdempotentAssignment& xi);

// Order-preserving idempotent with the same root value as the seed,
// built by the stagewise recursion through the subsemigroups Z_k.
IdempotentAssignment order_preserving_idempotent(const TreeActionFin& action,
                                                 const IdempotentAssignment& seed);

// For layered actions: order-preserving equivariant assignment whose value
// at every node is a minimal idempotent of that node's subsemigroup.
IdempotentAssignment layered_minimal_assignment(const TreeActionFin& action);

}  // namespace rwb

#endif  // RWB_TREE_ACTION_HPP_
