#include "rwb/delta.hpp"

#include <algorithm>
#include <cmath>

#include "rwb/errors.hpp"

namespace rwb {

std::int64_t Box::volume() const {
  std::int64_t v = 1;
  for (size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] <= lo[i]) return 0;
    v *= hi[i] - lo[i];
  }
  return v;
}

bool Box::contains_box(const Box& inner) const {
  for (size_t i = 0; i < lo.size(); ++i)
    if (inner.lo[i] < lo[i] || inner.hi[i] > hi[i]) return false;
  return true;
}

DeltaScene::DeltaScene(Box window, std::function<bool(const std::vector<std::int64_t>&)> predicate)
    : window_(std::move(window)) {
  std::int64_t vol = window_.volume();
  if (vol <= 0) throw EmptyBox("scene window is empty");
  if (vol > (1 << 24)) throw BudgetExceeded("scene window too large to materialize");
  cells_.assign(static_cast<size_t>(vol), 0);
  std::vector<std::int64_t> p = window_.lo;
  for (std::int64_t idx = 0; idx < vol; ++idx) {
    cells_[static_cast<size_t>(idx)] = predicate(p) ? 1 : 0;
    for (size_t i = 0; i < p.size(); ++i) {
      if (++p[i] < window_.hi[i]) break;
      p[i] = window_.lo[i];
    }
  }
}

DeltaScene DeltaScene::from_points(Box window,
                                   const std::vector<std::vector<std::int64_t>>& points) {
  std::vector<std::vector<std::int64_t>> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  return DeltaScene(std::move(window), [sorted](const std::vector<std::int64_t>& p) {
    return std::binary_search(sorted.begin(), sorted.end(), p);
  });
}

std::int64_t DeltaScene::index_of(const std::vector<std::int64_t>& p) const {
  std::int64_t idx = 0;
  std::int64_t mult = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < window_.lo[i] || p[i] >= window_.hi[i]) return -1;
    idx += (p[i] - window_.lo[i]) * mult;
    mult *= window_.hi[i] - window_.lo[i];
  }
  return idx;
}

bool DeltaScene::contains(const std::vector<std::int64_t>& p) const {
  if (static_cast<int>(p.size()) != dim()) throw PreconditionFailed("dimension mismatch");
  std::int64_t idx = index_of(p);
  return idx >= 0 && cells_[static_cast<size_t>(idx)] != 0;
}

Rational box_density(const DeltaScene& scene, const Box& box) {
  if (box.dim() != scene.dim()) throw PreconditionFailed("box dimension mismatch");
  std::int64_t vol = box.volume();
  if (vol <= 0) throw EmptyBox("density of an empty box");
  if (!scene.window_.contains_box(box))
    throw PreconditionFailed("box not contained in the scene window");
  std::int64_t count = 0;
  std::vector<std::int64_t> p = box.lo;
  for (std::int64_t i = 0; i < vol; ++i) {
    if (scene.contains(p)) ++count;
    for (size_t a = 0; a < p.size(); ++a) {
      if (++p[a] < box.hi[a]) break;
      p[a] = box.lo[a];
    }
  }
  return Rational(count, vol);
}

DensitySweep density_sweep(const DeltaScene& scene, std::int64_t side, std::int64_t stride) {
  if (side <= 0 || stride <= 0) throw PreconditionFailed("side and stride must be positive");
  DensitySweep sweep;
  const Box& w = scene.window();
  std::vector<std::int64_t> off(static_cast<size_t>(scene.dim()), 0);
  bool any = false;
  bool done = false;
  while (!done) {
    Box b;
    bool fits = true;
    for (int i = 0; i < scene.dim(); ++i) {
      std::int64_t lo = w.lo[static_cast<size_t>(i)] + off[static_cast<size_t>(i)];
      if (lo + side > w.hi[static_cast<size_t>(i)]) {
        fits = false;
        break;
      }
      b.lo.push_back(lo);
      b.hi.push_back(lo + side);
    }
    if (fits) {
      DensitySample s{b, box_density(scene, b)};
      if (!any || sweep.best.density < s.density) sweep.best = s;
      any = true;
      sweep.samples.push_back(std::move(s));
    }
    done = true;
    for (size_t i = 0; i < off.size(); ++i) {
      off[i] += stride;
      if (w.lo[i] + off[i] + side <= w.hi[i]) {
        done = false;
        break;
      }
      off[i] = 0;
    }
  }
  if (!any) throw EmptyBox("no cube of that side fits the window");
  return sweep;
}

DeltaCheck delta_check(const DeltaScene& scene, const std::vector<std::int64_t>& g) {
  if (static_cast<int>(g.size()) != scene.dim()) throw PreconditionFailed("dimension mismatch");
  const Box& w = scene.window();
  DeltaCheck out;
  for (int i = 0; i < scene.dim(); ++i) {
    std::int64_t span = w.hi[static_cast<size_t>(i)] - w.lo[static_cast<size_t>(i)];
    std::int64_t mag = g[static_cast<size_t>(i)] < 0 ? -g[static_cast<size_t>(i)]
                                                     : g[static_cast<size_t>(i)];
    if (mag >= span)
      throw OutOfWindow("difference component exceeds the window span");
    if (2 * mag > span) out.edge_flagged = true;
  }
  std::int64_t vol = w.volume();
  std::vector<std::int64_t> p = w.lo;
  std::vector<std::int64_t> q(p.size());
  for (std::int64_t i = 0; i < vol; ++i) {
    if (scene.contains(p)) {
      for (size_t a = 0; a < p.size(); ++a) q[a] = p[a] + g[a];
      bool inside = true;
      for (size_t a = 0; a < q.size(); ++a)
        if (q[a] < w.lo[a] || q[a] >= w.hi[a]) {
          inside = false;
          break;
        }
      if (inside && scene.contains(q)) {
        out.member = true;
        return out;
      }
    }
    for (size_t a = 0; a < p.size(); ++a) {
      if (++p[a] < w.hi[a]) break;
      p[a] = w.lo[a];
    }
  }
  return out;
}

bool delta_membership(const DeltaScene& scene, const std::vector<std::int64_t>& g) {
  return delta_check(scene, g).member;
}

std::vector<std::int64_t> furstenberg_sum(const FurstenbergInstance& inst,
                                          const std::vector<std::vector<TreeWord>>& blocks,
                                          const std::vector<FurstenbergPick>& picks) {
  std::vector<std::int64_t> acc(static_cast<size_t>(inst.g_dim), 0);
  for (const auto& p : picks) {
    const TreeWord& b = blocks.at(static_cast<size_t>(p.block)).at(static_cast<size_t>(p.node));
    for (const auto& [pos, sym] : b.entries()) {
      int image = p.hom.apply(sym.variable_node());
      if (image == inst.tree.root()) continue;
      std::vector<std::int64_t> inc = inst.g(pos, image);
      for (size_t a = 0; a < acc.size(); ++a) acc[a] += inc.at(a);
    }
  }
  return acc;
}

namespace {

struct FPick {
  int block;
  int hom;   // index into the hom family
  int node;  // t_d
};

std::vector<std::int64_t> combo_sum(const FurstenbergInstance& inst,
                                    const std::vector<RegressiveHom>& homs,
                                    const std::vector<std::vector<TreeWord>>& blocks,
                                    const std::vector<FPick>& picks) {
  std::vector<std::int64_t> acc(static_cast<size_t>(inst.g_dim), 0);
  for (const auto& p : picks) {
    const RegressiveHom& f = homs[static_cast<size_t>(p.hom)];
    const TreeWord& b = blocks[static_cast<size_t>(p.block)][static_cast<size_t>(p.node)];
    for (const auto& [pos, sym] : b.entries()) {
      int image = f.apply(sym.variable_node());
      if (image == inst.tree.root()) continue;
      std::vector<std::int64_t> inc = inst.g(pos, image);
      for (size_t a = 0; a < acc.size(); ++a) acc[a] += inc.at(a);
    }
  }
  return acc;
}

// Enumerates admissible combinations over blocks [0, limit], optionally
// only the ones whose maximum block equals require_block. Returns false
// when the visitor rejects one.
bool for_each_combo(const FurstenbergInstance& inst, const std::vector<RegressiveHom>& homs,
                    const std::vector<std::vector<TreeWord>>& blocks, int limit, int require_block,
                    const std::function<bool(const std::vector<FPick>&)>& visit) {
  std::vector<FPick> picks;
  std::function<bool(int)> next_block = [&](int b) -> bool {
    if (b > limit) {
      if (picks.empty()) return true;
      if (require_block >= 0 && picks.back().block != require_block) return true;
      std::vector<int> spine_nodes;
      for (const auto& p : picks)
        spine_nodes.push_back(homs[static_cast<size_t>(p.hom)](p.node));
      auto cls = classify_node_set(inst.tree, spine_nodes);
      if (!cls.is_chain) return true;  // inadmissible, skipped
      return visit(picks);
    }
    if (!next_block(b + 1)) return false;  // b not in F
    for (int h = 0; h < static_cast<int>(homs.size()); ++h) {
      for (int t = 0; t < inst.tree.size(); ++t) {
        picks.push_back({b, h, t});
        bool ok = next_block(b + 1);
        picks.pop_back();
        if (!ok) return false;
      }
    }
    return true;
  };
  return next_block(0);
}

}  // namespace

std::string verify_furstenberg(const FurstenbergInstance& inst,
                               const std::vector<std::vector<TreeWord>>& blocks,
                               std::uint64_t* combinations) {
  std::vector<RegressiveHom> homs = enumerate_regressive_homs(inst.tree);
  if (inst.poly && inst.poly->input_vars() != inst.g_dim)
    return "polynomial arity does not match the g dimension";
  if (inst.poly && inst.poly->output_dim() != inst.scene.dim())
    return "polynomial output does not match the scene dimension";
  if (!inst.poly && inst.g_dim != inst.scene.dim())
    return "g dimension does not match the scene dimension";

  // Increasing supports per node sequence.
  for (size_t n = 1; n < blocks.size(); ++n) {
    for (int t = 0; t < inst.tree.size(); ++t) {
      const TreeWord& prev = blocks[n - 1][static_cast<size_t>(t)];
      const TreeWord& cur = blocks[n][static_cast<size_t>(t)];
      if (!prev.empty() && !cur.empty() && cur.min_pos() <= prev.max_pos())
        return "block supports not increasing at node " + std::to_string(t);
    }
  }
  for (size_t n = 0; n < blocks.size(); ++n)
    for (int t = 0; t < inst.tree.size(); ++t)
      if (!blocks[n][static_cast<size_t>(t)].in_component(t))
        return "block " + std::to_string(n) + " node " + std::to_string(t) +
               " not in its component";

  std::uint64_t count = 0;
  std::string error;
  for_each_combo(inst, homs, blocks, static_cast<int>(blocks.size()) - 1, -1,
                 [&](const std::vector<FPick>& picks) {
                   ++count;
                   std::vector<std::int64_t> s = combo_sum(inst, homs, blocks, picks);
                   std::vector<std::int64_t> v = inst.poly ? inst.poly->eval(s) : s;
                   if (!delta_membership(inst.scene, v)) {
                     error = "combination sum misses the delta set";
                     return false;
                   }
                   return true;
                 });
  if (combinations) *combinations = count;
  return error;
}

std::optional<FurstenbergWitness> furstenberg_search(const FurstenbergInstance& inst) {
  std::vector<RegressiveHom> homs = enumerate_regressive_homs(inst.tree);
  const int B = inst.block_count;

  Rational dens = box_density(inst.scene, inst.scene.window());
  if (dens == Rational(0)) {
    // The theorem's hypothesis fails; search anyway but there is nothing in
    // A-A beyond what an empty A admits.
  }

  ContextPtr ctx = make_context(inst.tree, 0, WordKind::located);
  std::vector<std::vector<TreeWord>> blocks;

  std::function<bool(int, std::uint64_t, std::uint64_t)> dfs = [&](int n, std::uint64_t fresh,
                                                                   std::uint64_t budget) -> bool {
    if (n == B) return true;
    // Candidate words per node over the fresh window.
    std::vector<std::vector<TreeWord>> cand(static_cast<size_t>(inst.tree.size()));
    for (int t = 0; t < inst.tree.size(); ++t) {
      if (t == inst.tree.root()) {
        cand[static_cast<size_t>(t)].push_back(TreeWord(ctx));
        continue;
      }
      std::vector<Symbol> allowed;
      for (int v = 1; v < inst.tree.size(); ++v)
        if (inst.tree.leq(t, v)) allowed.push_back(Symbol::variable(v));
      std::vector<TreeWord::Entry> entries;
      std::function<void(std::uint64_t, bool)> build = [&](std::uint64_t pos, bool has_t) {
        for (std::uint64_t p = pos; p < budget; ++p) {
          for (Symbol s : allowed) {
            entries.emplace_back(p, s);
            bool now_has = has_t || s == Symbol::variable(t);
            if (now_has) cand[static_cast<size_t>(t)].emplace_back(ctx, entries);
            build(p + 1, now_has);
            entries.pop_back();
          }
        }
      };
      build(fresh, false);
      std::stable_sort(cand[static_cast<size_t>(t)].begin(), cand[static_cast<size_t>(t)].end(),
                       [](const TreeWord& a, const TreeWord& b) {
                         if (a.support_size() != b.support_size())
                           return a.support_size() < b.support_size();
                         return a < b;
                       });
    }
    // Tuple choice across nodes (within-block overlap across nodes allowed).
    std::vector<TreeWord> tuple;
    std::function<bool(int)> choose = [&](int t) -> bool {
      if (t == inst.tree.size()) {
        blocks.push_back(tuple);
        bool ok = for_each_combo(inst, homs, blocks, n, n, [&](const std::vector<FPick>& picks) {
          std::vector<std::int64_t> s = combo_sum(inst, homs, blocks, picks);
          std::vector<std::int64_t> v = inst.poly ? inst.poly->eval(s) : s;
          try {
            return delta_membership(inst.scene, v);
          } catch (const OutOfWindow&) {
            return false;
          }
        });
        std::uint64_t new_fresh = fresh;
        for (const auto& w : tuple)
          if (!w.empty()) new_fresh = std::max(new_fresh, w.max_pos() + 1);
        if (ok && dfs(n + 1, new_fresh, budget)) return true;
        blocks.pop_back();
        return false;
      }
      for (const TreeWord& w : cand[static_cast<size_t>(t)]) {
        tuple[static_cast<size_t>(t)] = w;
        if (choose(t + 1)) return true;
      }
      return false;
    };
    tuple.assign(static_cast<size_t>(inst.tree.size()), TreeWord(ctx));
    return choose(0);
  };

  for (std::uint64_t budget = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(B));
       budget <= inst.position_bound; ++budget) {
    blocks.clear();
    if (dfs(0, 0, budget)) {
      FurstenbergWitness w;
      w.blocks = blocks;
      std::string err = verify_furstenberg(inst, w.blocks, &w.combinations);
      if (!err.empty()) throw Error("furstenberg search accepted blocks its verifier rejects: " + err);
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace rwb
