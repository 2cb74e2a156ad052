#ifndef RWB_DELTA_HPP_
#define RWB_DELTA_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rwb/poly.hpp"
#include "rwb/tree.hpp"
#include "rwb/util.hpp"
#include "rwb/words.hpp"

namespace rwb {

struct Box {
  std::vector<std::int64_t> lo, hi;  // [lo, hi) per axis
  int dim() const { return static_cast<int>(lo.size()); }
  std::int64_t volume() const;
  bool contains_box(const Box& inner) const;
};

// Subset of Z^d evaluated inside a finite window box. The membership
// predicate is materialized over the window at construction, so densities
// and delta checks are exact counts.
class DeltaScene {
 public:
  DeltaScene(Box window, std::function<bool(const std::vector<std::int64_t>&)> predicate);
  static DeltaScene from_points(Box window, const std::vector<std::vector<std::int64_t>>& points);

  int dim() const { return window_.dim(); }
  const Box& window() const { return window_; }
  bool contains(const std::vector<std::int64_t>& p) const;  // inside window only

  friend Rational box_density(const DeltaScene& scene, const Box& box);

 private:
  Box window_;
  std::vector<char> cells_;
  std::int64_t index_of(const std::vector<std::int64_t>& p) const;  // -1 outside
};

// |A n box| / |box|, exact. Throws EmptyBox on zero volume and
// PreconditionFailed when the box leaves the window.
Rational box_density(const DeltaScene& scene, const Box& box);

struct DensitySample {
  Box box;
  Rational density;
};

// Sliding-cube sweep: density over every side^d cube inside the window
// (stride per axis), reporting the best box as the Banach-density lower
// bound for this window.
struct DensitySweep {
  std::vector<DensitySample> samples;
  DensitySample best;
};
DensitySweep density_sweep(const DeltaScene& scene, std::int64_t side, std::int64_t stride = 1);

struct DeltaCheck {
  bool member = false;
  bool edge_flagged = false;  // |g| beyond half the window span
};

// g in A-A restricted to the window: some a in A with a+g in A (both inside
// the window). Throws OutOfWindow when |g| exceeds the window span.
DeltaCheck delta_check(const DeltaScene& scene, const std::vector<std::int64_t>& g);
bool delta_membership(const DeltaScene& scene, const std::vector<std::int64_t>& g);

// Per-position, per-variable-node increment g_j(t) in Z^m.
using GMap = std::function<std::vector<std::int64_t>(std::uint64_t pos, int node)>;

struct FurstenbergInstance {
  DeltaScene scene;
  RootedTree tree;
  GMap g;
  int g_dim = 1;
  std::optional<IntPolyVec> poly;  // identity when absent
  std::uint64_t position_bound = 16;
  int block_count = 2;
};

struct FurstenbergWitness {
  std::vector<std::vector<TreeWord>> blocks;  // [block][node]
  std::uint64_t combinations = 0;             // all admissible, all verified
};

struct FurstenbergPick {
  int block;
  RegressiveHom hom;
  int node;
};

// Value of one structured sum: sum over d in F of sum over surviving
// positions j of g_j(image value at j).
std::vector<std::int64_t> furstenberg_sum(const FurstenbergInstance& inst,
                                          const std::vector<std::vector<TreeWord>>& blocks,
                                          const std::vector<FurstenbergPick>& picks);

// Backtracking over blocks with increasing supports such that every
// admissible combination lands p(sum) inside A-A; verified independently by
// sweeping the full combination enumeration through delta_check.
std::optional<FurstenbergWitness> furstenberg_search(const FurstenbergInstance& inst);

// Fresh verification pass for an explicit block family; empty = accepted.
std::string verify_furstenberg(const FurstenbergInstance& inst,
                               const std::vector<std::vector<TreeWord>>& blocks,
                               std::uint64_t* combinations = nullptr);

}  // namespace rwb

#endif  // RWB_DELTA_HPP_
