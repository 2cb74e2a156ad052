#include "rwb/tree.hpp"

#include <algorithm>
#include <sstream>

namespace rwb {

RootedTree::RootedTree(std::vector<int> parent_of) : parent_(std::move(parent_of)) {
  const int n = static_cast<int>(parent_.size()) + 1;
  height_.assign(n, 0);
  for (int i = 1; i < n; ++i) {
    int p = parent_[i - 1];
    if (p < 0 || p >= i) {
      throw MalformedTree("parent of node " + std::to_string(i) + " must be in [0," +
                          std::to_string(i) + "), got " + std::to_string(p));
    }
    height_[i] = height_[p] + 1;
    max_height_ = std::max(max_height_, height_[i]);
  }
}

int RootedTree::parent(int v) const {
  if (v <= 0 || v >= size()) throw MalformedTree("node has no parent: " + std::to_string(v));
  return parent_[v - 1];
}

bool RootedTree::adjacent(int u, int v) const {
  if (u == v) return false;
  return (u != 0 && parent(u) == v) || (v != 0 && parent(v) == u);
}

bool RootedTree::leq(int u, int v) const {
  if (u < 0 || u >= size() || v < 0 || v >= size())
    throw MalformedTree("node out of range");
  while (u != v && u != 0) u = parent(u);
  return u == v;
}

int RootedTree::predecessor(int v, int k) const {
  if (v < 0 || v >= size()) throw MalformedTree("node out of range");
  while (k > 0 && v != 0) {
    v = parent(v);
    --k;
  }
  return v;
}

std::vector<int> RootedTree::non_root_nodes() const {
  std::vector<int> out;
  for (int v = 1; v < size(); ++v) out.push_back(v);
  return out;
}

std::vector<int> RootedTree::nodes_up_to_height(int k) const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (height_[v] <= k) out.push_back(v);
  return out;
}

std::string RootedTree::to_text() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < parent_.size(); ++i) {
    if (i) os << " ";
    os << parent_[i];
  }
  os << "]";
  return os.str();
}

RootedTree RootedTree::path(int k) {
  std::vector<int> p(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) p[i] = i;
  return RootedTree(p);
}

NodeSetClassification classify_node_set(const RootedTree& tree, const std::vector<int>& nodes) {
  NodeSetClassification out;
  for (int v : nodes)
    if (v < 0 || v >= tree.size()) throw MalformedTree("node out of range");

  // Empty set counts as a chain with absent least element.
  if (nodes.empty()) {
    out.is_chain = true;
    out.is_within_branch = true;
    return out;
  }
  bool chain = true;
  int least = nodes[0];
  for (int v : nodes) {
    if (tree.leq(v, least)) least = v;
  }
  for (int v : nodes) {
    if (!tree.leq(v, least) && !tree.leq(least, v)) chain = false;
  }
  // A chain is totally ordered, hence within the branch through its minimum.
  if (chain) {
    for (int v : nodes) {
      if (!tree.leq(least, v)) {
        chain = false;
        break;
      }
    }
  }
  out.is_chain = chain;
  if (chain) {
    out.least = least;
    out.is_within_branch = true;
  } else {
    // Within a branch iff some node is below all others.
    for (int cand : nodes) {
      bool all_above = true;
      for (int v : nodes) {
        if (!tree.leq(cand, v)) {
          all_above = false;
          break;
        }
      }
      if (all_above) {
        out.is_within_branch = true;
        break;
      }
    }
  }
  return out;
}

bool is_regressive_hom(const RootedTree& tree, const std::vector<int>& image) {
  if (static_cast<int>(image.size()) != tree.size()) return false;
  for (int v = 0; v < tree.size(); ++v) {
    int w = image[v];
    if (w < 0 || w >= tree.size()) return false;
    if (!tree.leq(v, w)) return false;  // f(t) >= t
  }
  for (int v = 1; v < tree.size(); ++v) {
    int p = tree.parent(v);
    if (image[v] != image[p] && !tree.adjacent(image[v], image[p])) return false;
  }
  return true;
}

RegressiveHom::RegressiveHom(RootedTree tree, std::vector<int> image)
    : tree_(std::move(tree)), image_(std::move(image)) {
  if (!is_regressive_hom(tree_, image_))
    throw MalformedTree("node map is not a regressive homomorphism");
}

bool RegressiveHom::is_identity() const {
  for (int v = 0; v < tree_.size(); ++v)
    if (image_[v] != v) return false;
  return true;
}

bool RegressiveHom::order_preserving() const {
  for (int u = 0; u < tree_.size(); ++u)
    for (int v = 0; v < tree_.size(); ++v)
      if (tree_.leq(u, v) && !tree_.leq(image_[u], image_[v])) return false;
  return true;
}

RegressiveHom RegressiveHom::identity(const RootedTree& tree) {
  std::vector<int> img(static_cast<size_t>(tree.size()));
  for (int v = 0; v < tree.size(); ++v) img[v] = v;
  return RegressiveHom(tree, img);
}

RegressiveHom RegressiveHom::predecessor_map(const RootedTree& tree, int k) {
  std::vector<int> img(static_cast<size_t>(tree.size()));
  for (int v = 0; v < tree.size(); ++v) img[v] = tree.predecessor(v, k);
  return RegressiveHom(tree, img);
}

RegressiveHom compose_homs(const RegressiveHom& f, const RegressiveHom& g) {
  if (f.tree() != g.tree()) throw TreeMismatch("compose_homs: different trees");
  std::vector<int> img(static_cast<size_t>(f.tree().size()));
  for (int v = 0; v < f.tree().size(); ++v) img[v] = f.apply(g.apply(v));
  return RegressiveHom(f.tree(), img);
}

std::vector<RegressiveHom> enumerate_regressive_homs(const RootedTree& tree, int max_nodes) {
  if (tree.size() > max_nodes)
    throw EnumerationBudgetExceeded("regressive hom enumeration refused for " +
                                    std::to_string(tree.size()) + " nodes (guard " +
                                    std::to_string(max_nodes) + ")");
  const int n = tree.size();
  std::vector<RegressiveHom> out;
  std::vector<int> img(static_cast<size_t>(n), 0);

  // Node i's parent has a smaller index, so its image is fixed before i.
  // Candidates for img[i]: ancestors-or-self equal or adjacent to img[parent].
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.emplace_back(tree, img);
      return;
    }
    int p = tree.parent(v);
    for (int w = 0; w < n; ++w) {
      if (!tree.leq(v, w)) continue;
      if (w != img[p] && !tree.adjacent(w, img[p])) continue;
      img[v] = w;
      self(self, v + 1);
    }
  };
  if (n == 1) {
    out.emplace_back(tree, img);
  } else {
    rec(rec, 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootedTree parse_tree(const std::string& text) {
  std::string clean;
  for (char c : text) {
    if (c == '[' || c == ']' || c == ',') {
      clean.push_back(' ');
    } else {
      clean.push_back(c);
    }
  }
  std::istringstream is(clean);
  std::vector<int> parents;
  int p;
  while (is >> p) parents.push_back(p);
  return RootedTree(parents);
}

}  // namespace rwb
