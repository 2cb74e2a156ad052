#ifndef RWB_TREE_HPP_
#define RWB_TREE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rwb/errors.hpp"

namespace rwb {

// Finite rooted tree. Node 0 is the root and parent[i] < i for every
// non-root node i, so acyclicity is structural. The tree order is
// u <= v iff v lies on the root path of u (root is the unique maximum).
class RootedTree {
 public:
  // parent_of[i] is the parent of node i+1.
  explicit RootedTree(std::vector<int> parent_of = {});

  int size() const { return static_cast<int>(height_.size()); }
  int root() const { return 0; }
  int parent(int v) const;          // v != root
  int height(int v) const { return height_.at(v); }
  int max_height() const { return max_height_; }
  bool adjacent(int u, int v) const;
  bool leq(int u, int v) const;     // u descendant-or-equal of v
  int predecessor(int v, int k) const;  // pi_k; root once height exhausted

  const std::vector<int>& parents() const { return parent_; }
  std::vector<int> non_root_nodes() const;

  // Nodes of height <= k, ascending (the paper's T_k).
  std::vector<int> nodes_up_to_height(int k) const;

  bool operator==(const RootedTree& o) const { return parent_ == o.parent_; }
  bool operator!=(const RootedTree& o) const { return !(*this == o); }

  std::string to_text() const;  // "[p1 p2 ...]"

  // Linear tree I_k with k+1 nodes (a path).
  static RootedTree path(int k);

 private:
  std::vector<int> parent_;  // parent_[i] defined for i >= 1
  std::vector<int> height_;
  int max_height_ = 0;
};

struct NodeSetClassification {
  bool is_chain = false;
  std::optional<int> least;  // minimum under tree order, when nonempty chain
  bool is_within_branch = false;
};

NodeSetClassification classify_node_set(const RootedTree& tree, const std::vector<int>& nodes);

// Regressive homomorphism: f(t) >= t (ancestor-or-self) and adjacent nodes
// map to the same node or to adjacent nodes. Fixes the root and maps each
// branch into itself.
class RegressiveHom {
 public:
  RegressiveHom(RootedTree tree, std::vector<int> image);

  const RootedTree& tree() const { return tree_; }
  int apply(int v) const { return image_.at(v); }
  int operator()(int v) const { return image_.at(v); }
  const std::vector<int>& image() const { return image_; }

  bool is_identity() const;
  // Monotone on every chain: u <= v implies f(u) <= f(v). The classical
  // tetris families have this; bare Def-2.2 maps need not (see words tests).
  bool order_preserving() const;

  bool operator==(const RegressiveHom& o) const {
    return tree_ == o.tree_ && image_ == o.image_;
  }
  bool operator<(const RegressiveHom& o) const { return image_ < o.image_; }

  static RegressiveHom identity(const RootedTree& tree);
  static RegressiveHom predecessor_map(const RootedTree& tree, int k);  // pi_k

 private:
  RootedTree tree_;
  std::vector<int> image_;
};

bool is_regressive_hom(const RootedTree& tree, const std::vector<int>& image);

// f after g (apply g first).
RegressiveHom compose_homs(const RegressiveHom& f, const RegressiveHom& g);

// Exhaustive enumeration, sorted lexicographically by image vector.
// Guarded: refuses trees larger than max_nodes (node_count^node_count blowup).
std::vector<RegressiveHom> enumerate_regressive_homs(const RootedTree& tree, int max_nodes = 10);

// Parses "[0 1 2]" or "[0,1,2]" or bare "0 1 2" into a parent list.
RootedTree parse_tree(const std::string& text);

}  // namespace rwb

#endif  // RWB_TREE_HPP_
