#include "rwb/search.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "rwb/errors.hpp"
#include "rwb/util.hpp"

namespace rwb {

int any_component(const AnyWord& w) {
  return std::visit([](const auto& x) { return x.component(); }, w);
}

std::string any_str(const AnyWord& w) {
  return std::visit([](const auto& x) { return x.str(); }, w);
}

AnyWord any_apply(const SubstitutionMap& sigma, const AnyWord& w) {
  if (std::holds_alternative<TreeWord>(w))
    return substitution_apply(sigma, std::get<TreeWord>(w));
  return substitution_apply_nonlocated(sigma, std::get<StringWord>(w));
}

std::optional<AnyWord> any_combine(const AnyWord& w0, const AnyWord& w1) {
  if (std::holds_alternative<TreeWord>(w0)) {
    auto r = try_word_sum(std::get<TreeWord>(w0), std::get<TreeWord>(w1));
    if (!r) return std::nullopt;
    return AnyWord(*r);
  }
  return AnyWord(concat(std::get<StringWord>(w0), std::get<StringWord>(w1)));
}

Coloring Coloring::external(int colors, std::function<int(const std::vector<const AnyWord*>&)> fn) {
  Coloring c;
  c.colors_ = colors;
  c.kind_ = Kind::external;
  c.fn_ = std::move(fn);
  return c;
}

Coloring Coloring::lookup(int colors, std::map<std::vector<std::string>, int> table) {
  Coloring c;
  c.colors_ = colors;
  c.kind_ = Kind::lookup;
  c.table_ = std::move(table);
  return c;
}

int Coloring::operator()(const std::vector<const AnyWord*>& tuple) const {
  if (kind_ == Kind::lookup) {
    std::vector<std::string> key;
    key.reserve(tuple.size());
    for (const AnyWord* w : tuple) key.push_back(any_str(*w));
    auto it = table_.find(key);
    return it == table_.end() ? 0 : it->second;
  }
  if (!fn_) throw Error("coloring has no evaluator");
  int c = fn_(tuple);
  c %= colors_;
  if (c < 0) c += colors_;
  return c;
}

const std::vector<int>& SearchInstance::endos_at(int factor, int step) const {
  static const std::vector<int> kEmpty;
  if (endo_schedule.empty() || endo_schedule[static_cast<size_t>(factor)].empty()) {
    // All endos: materialized lazily by callers via factor size; signalled
    // by an empty vector here.
    return kEmpty;
  }
  return endo_schedule[static_cast<size_t>(factor)][static_cast<size_t>(step)];
}

void SearchInstance::validate() const {
  if (factors.empty()) throw PreconditionFailed("instance needs at least one factor");
  if (lambda.empty()) throw PreconditionFailed("instance needs at least one coordinate");
  for (int l : lambda)
    if (l < 0 || l >= static_cast<int>(factors.size()))
      throw PreconditionFailed("lambda out of range");
  if (block_count < 1) throw PreconditionFailed("block_count must be positive");
  if (block_count > 20) throw PreconditionFailed("block_count above desk-scale guard (20)");
  if (position_bound > 64)
    throw PreconditionFailed("position_bound above desk-scale guard (64)");
  if (!endo_schedule.empty()) {
    if (endo_schedule.size() != factors.size())
      throw PreconditionFailed("endo schedule must cover every factor");
    for (size_t f = 0; f < factors.size(); ++f) {
      if (endo_schedule[f].empty()) continue;
      if (static_cast<int>(endo_schedule[f].size()) < block_count)
        throw PreconditionFailed("endo schedule shorter than block count");
      for (const auto& step : endo_schedule[f])
        for (int e : step)
          if (e < 0 || e >= static_cast<int>(factors[f].endos.size()))
            throw PreconditionFailed("endo schedule index out of range");
    }
  }
}

namespace {

std::vector<int> schedule_or_all(const SearchInstance& inst, int factor, int step) {
  const auto& s = inst.endos_at(factor, step);
  if (!s.empty()) return s;
  std::vector<int> all(inst.factors[static_cast<size_t>(factor)].endos.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return all;
}

std::string combination_line(const Combination& c) {
  std::ostringstream os;
  for (size_t s = 0; s < c.coords.size(); ++s) {
    if (s) os << " | ";
    os << "s" << s << " F={";
    for (size_t i = 0; i < c.coords[s].size(); ++i) {
      if (i) os << ",";
      os << c.coords[s][i].block;
    }
    os << "} picks=";
    for (const auto& p : c.coords[s]) os << "(" << p.endo << "," << p.node << ")";
    os << " least=" << c.least[s] << " value=" << c.value[s];
  }
  os << " color=" << c.color;
  return os.str();
}

}  // namespace

std::pair<AnyWord, int> structured_sum(const SearchInstance& inst, const Blocks& blocks,
                                       int coordinate, const std::vector<CoordPick>& picks) {
  if (picks.empty()) throw PreconditionFailed("structured sum needs a nonempty index set");
  int factor = inst.lambda[static_cast<size_t>(coordinate)];
  const Factor& fac = inst.factors[static_cast<size_t>(factor)];
  const RootedTree& tree = fac.ctx->tree;

  std::vector<int> spine_nodes;
  for (size_t i = 0; i < picks.size(); ++i) {
    if (i > 0 && picks[i].block <= picks[i - 1].block)
      throw PreconditionFailed("structured sum blocks must strictly increase");
    const auto& e = fac.endos[static_cast<size_t>(picks[i].endo)];
    spine_nodes.push_back(e.spine()(picks[i].node));
  }
  auto cls = classify_node_set(tree, spine_nodes);
  if (!cls.is_chain) throw NotAChain("spine values do not form a chain");

  std::optional<AnyWord> acc;
  for (const auto& p : picks) {
    const auto& e = fac.endos[static_cast<size_t>(p.endo)];
    AnyWord term =
        any_apply(e, blocks[static_cast<size_t>(factor)][static_cast<size_t>(p.block)]
                         [static_cast<size_t>(p.node)]);
    if (!acc) {
      acc = std::move(term);
    } else {
      auto combined = any_combine(*acc, term);
      if (!combined)
        throw DomainsOverlap("structured sum undefined: blocks violate freshness");
      acc = std::move(*combined);
    }
  }
  return {std::move(*acc), *cls.least};
}

namespace {

// Enumerates admissible combinations over blocks [0, limit]; when
// require_block >= 0, only families whose maximum block equals it.
void enumerate_combinations_impl(const SearchInstance& inst, const Blocks& blocks, int limit,
                                 int require_block,
                                 const std::function<void(const Combination&)>& yield) {
  const int m = static_cast<int>(inst.lambda.size());

  // Per-coordinate chosen picks.
  std::vector<std::vector<CoordPick>> coords(static_cast<size_t>(m));

  std::function<void()> finish = [&]() {
    Combination comb;
    comb.coords = coords;
    std::vector<AnyWord> words;
    for (int s = 0; s < m; ++s) {
      int factor = inst.lambda[static_cast<size_t>(s)];
      const Factor& fac = inst.factors[static_cast<size_t>(factor)];
      std::vector<int> spine_nodes;
      for (const auto& p : coords[static_cast<size_t>(s)])
        spine_nodes.push_back(
            fac.endos[static_cast<size_t>(p.endo)].spine()(p.node));
      auto cls = classify_node_set(fac.ctx->tree, spine_nodes);
      if (!cls.is_chain) return;  // inadmissible, skipped
      comb.least.push_back(*cls.least);
    }
    for (int s = 0; s < m; ++s) {
      auto [word, least] = structured_sum(inst, blocks, s, coords[static_cast<size_t>(s)]);
      (void)least;
      words.push_back(std::move(word));
    }
    std::vector<const AnyWord*> tuple;
    for (const auto& w : words) tuple.push_back(&w);
    comb.color = inst.coloring(tuple);
    for (const auto& w : words) comb.value.push_back(any_str(w));
    yield(comb);
  };

  // Assign (endo, node) choices for coordinate s from position i onward.
  std::function<void(int, size_t, const std::function<void()>&)> assign_picks =
      [&](int s, size_t i, const std::function<void()>& next) {
        auto& picks = coords[static_cast<size_t>(s)];
        if (i == picks.size()) {
          next();
          return;
        }
        int factor = inst.lambda[static_cast<size_t>(s)];
        const RootedTree& tree = inst.factors[static_cast<size_t>(factor)].ctx->tree;
        for (int e : schedule_or_all(inst, factor, picks[i].block)) {
          for (int t = 0; t < tree.size(); ++t) {
            picks[i].endo = e;
            picks[i].node = t;
            assign_picks(s, i + 1, next);
          }
        }
      };

  // Choose index sets F_0 < ... < F_{m-1} over blocks [0, limit].
  std::function<void(int, int, bool)> choose_sets = [&](int s, int start, bool used_required) {
    if (s == m) {
      if (require_block >= 0 && !used_required) return;
      std::function<void(int)> assign_all = [&](int sc) {
        if (sc == m) {
          finish();
          return;
        }
        assign_picks(sc, 0, [&]() { assign_all(sc + 1); });
      };
      assign_all(0);
      return;
    }
    const int nblocks = limit + 1;
    for (unsigned mask = 1; mask < (1u << nblocks); ++mask) {
      int lo = __builtin_ctz(mask);
      if (lo < start) continue;
      int hi = 31 - __builtin_clz(mask);
      auto& picks = coords[static_cast<size_t>(s)];
      picks.clear();
      for (int b = 0; b < nblocks; ++b)
        if (mask & (1u << b)) picks.push_back({b, 0, 0});
      choose_sets(s + 1, hi + 1, used_required || hi == require_block);
    }
    coords[static_cast<size_t>(s)].clear();
  };

  choose_sets(0, 0, false);
}

}  // namespace

void enumerate_combinations(const SearchInstance& inst, const Blocks& blocks,
                            const std::function<void(const Combination&)>& yield) {
  int limit = -1;
  for (size_t f = 0; f < blocks.size(); ++f)
    limit = std::max(limit, static_cast<int>(blocks[f].size()) - 1);
  if (limit < 0) return;
  enumerate_combinations_impl(inst, blocks, limit, -1, yield);
}

CoverageReport check_block_witness(const SearchInstance& inst, const Blocks& blocks) {
  CoverageReport report;
  std::string lines;
  enumerate_combinations(inst, blocks, [&](const Combination& c) {
    auto [it, fresh] = report.group_colors.emplace(c.least, c.color);
    if (!fresh && it->second != c.color && report.ok) {
      report.ok = false;
      std::ostringstream os;
      os << "least tuple (";
      for (size_t i = 0; i < c.least.size(); ++i) os << (i ? "," : "") << c.least[i];
      os << ") has colors " << it->second << " and " << c.color << "; offending combination: "
         << combination_line(c);
      report.violation = os.str();
    }
    lines += combination_line(c);
    lines += '\n';
    report.entries.push_back(c);
  });
  report.hash = fnv1a(lines);
  return report;
}

// ---------------------------------------------------------------------------
// Candidate generation
// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kCandidateGuard = 1u << 22;

// Located words with support in [lo, hi), component exactly `node`, ordered
// by (support size, support, symbols).
std::vector<TreeWord> located_candidates(const ContextPtr& ctx, int node, std::uint64_t lo,
                                         std::uint64_t hi) {
  const RootedTree& tree = ctx->tree;
  std::vector<Symbol> allowed;
  for (int a = 0; a < ctx->alphabet_size; ++a) allowed.push_back(Symbol::letter(a));
  if (node != tree.root()) {
    for (int v = 1; v < tree.size(); ++v)
      if (tree.leq(node, v)) allowed.push_back(Symbol::variable(v));
  }
  std::vector<std::uint64_t> positions;
  for (std::uint64_t p = lo; p < hi; ++p) positions.push_back(p);

  std::vector<TreeWord> out;
  if (node == tree.root() || tree.size() == 1) {
    if (node == tree.root()) out.emplace_back(ctx);  // empty word
  }
  if (allowed.empty()) return out;

  std::vector<std::uint64_t> support;
  std::vector<TreeWord::Entry> entries;
  const Symbol required = Symbol::variable(node);

  std::function<void(size_t, bool)> fill = [&](size_t i, bool has_required) {
    if (i == support.size()) {
      if (node == tree.root() || has_required) {
        if (out.size() >= kCandidateGuard)
          throw BudgetExceeded("candidate enumeration exceeded guard");
        out.emplace_back(ctx, entries);
      }
      return;
    }
    for (Symbol s : allowed) {
      entries[i] = {support[i], s};
      fill(i + 1, has_required || s == required);
    }
  };
  std::function<void(size_t, size_t)> choose = [&](size_t idx, size_t need) {
    if (need == 0) {
      entries.assign(support.size(), {0, allowed[0]});
      for (size_t i = 0; i < support.size(); ++i) entries[i].first = support[i];
      fill(0, false);
      return;
    }
    if (idx + need > positions.size()) return;
    support.push_back(positions[idx]);
    choose(idx + 1, need - 1);
    support.pop_back();
    choose(idx + 1, need);
  };
  for (size_t size = 1; size <= positions.size(); ++size) choose(0, size);
  return out;
}

// Nonlocated words of each length in [len_lo, len_hi], component `node`.
std::vector<StringWord> nonlocated_candidates(const ContextPtr& ctx, int node,
                                              std::uint64_t len_lo, std::uint64_t len_hi) {
  const RootedTree& tree = ctx->tree;
  std::vector<Symbol> allowed;
  for (int a = 0; a < ctx->alphabet_size; ++a) allowed.push_back(Symbol::letter(a));
  if (node != tree.root()) {
    for (int v = 1; v < tree.size(); ++v)
      if (tree.leq(node, v)) allowed.push_back(Symbol::variable(v));
  }
  std::vector<StringWord> out;
  if (node == tree.root() && len_lo == 0) out.emplace_back(ctx);
  if (allowed.empty()) return out;
  const Symbol required = Symbol::variable(node);

  std::vector<Symbol> cur;
  std::function<void(std::uint64_t, bool)> build = [&](std::uint64_t remaining, bool has_req) {
    if (remaining == 0) {
      if (node == tree.root() || has_req) {
        if (out.size() >= kCandidateGuard)
          throw BudgetExceeded("candidate enumeration exceeded guard");
        out.emplace_back(ctx, cur);
      }
      return;
    }
    for (Symbol s : allowed) {
      cur.push_back(s);
      build(remaining - 1, has_req || s == required);
      cur.pop_back();
    }
  };
  for (std::uint64_t len = std::max<std::uint64_t>(len_lo, 1); len <= len_hi; ++len)
    build(len, false);
  return out;
}

struct DfsState {
  const SearchInstance& inst;
  std::uint64_t budget;  // located: position budget; nonlocated: length budget
  Blocks blocks;
  std::vector<std::uint64_t> fresh_min;  // per located factor
  std::map<std::vector<int>, int> group_colors;
  SearchStats* stats;
  std::uint64_t node_budget;
  std::function<void(const Blocks&)> on_family;  // when set, collect instead of prune
  std::map<std::tuple<size_t, int, std::uint64_t>, std::vector<AnyWord>> cand_cache;

  DfsState(const SearchInstance& i, std::uint64_t b, SearchStats* st, std::uint64_t nb)
      : inst(i), budget(b), stats(st), node_budget(nb) {
    blocks.resize(inst.factors.size());
    fresh_min.assign(inst.factors.size(), 0);
  }

  const std::vector<AnyWord>& candidates_for(size_t f, int node, std::uint64_t lo,
                                             std::uint64_t len_lo) {
    auto key = std::make_tuple(f, node, located(f) ? lo : len_lo);
    auto it = cand_cache.find(key);
    if (it != cand_cache.end()) return it->second;
    std::vector<AnyWord> cands;
    const auto& ctx = inst.factors[f].ctx;
    if (located(f)) {
      for (auto& w : located_candidates(ctx, node, lo, budget)) cands.emplace_back(std::move(w));
    } else {
      for (auto& w : nonlocated_candidates(ctx, node, len_lo, budget))
        cands.emplace_back(std::move(w));
    }
    return cand_cache.emplace(key, std::move(cands)).first->second;
  }

  bool located(size_t f) const { return inst.factors[f].ctx->kind == WordKind::located; }

  // Consistency of all combinations whose maximum block is `n` against the
  // running group colors; extends the map, recording additions for rollback.
  bool extend_groups(int n, std::vector<std::vector<int>>& added) {
    bool ok = true;
    enumerate_combinations_impl(inst, blocks, n, n, [&](const Combination& c) {
      if (!ok) return;
      auto [it, fresh] = group_colors.emplace(c.least, c.color);
      if (fresh) {
        added.push_back(c.least);
      } else if (it->second != c.color) {
        ok = false;
      }
    });
    return ok;
  }

  bool dfs_block(int n) {
    if (stats && ++stats->nodes_visited > node_budget)
      throw BudgetExceeded("search node budget exceeded");
    if (n == inst.block_count) {
      if (on_family) {
        on_family(blocks);
        return false;  // keep enumerating
      }
      return true;
    }
    // Candidate lists for every (factor, node) slot of this block.
    struct Slot {
      size_t factor;
      int node;
      const std::vector<AnyWord>* cands;
    };
    std::vector<Slot> slots;
    for (size_t f = 0; f < inst.factors.size(); ++f) {
      const auto& ctx = inst.factors[f].ctx;
      std::uint64_t floor = 0;
      if (f < inst.freshness_floor.size() &&
          static_cast<size_t>(n) < inst.freshness_floor[f].size())
        floor = inst.freshness_floor[f][static_cast<size_t>(n)];
      std::uint64_t dlo = 0;
      if (static_cast<size_t>(n) < inst.length_schedule.size())
        dlo = inst.length_schedule[static_cast<size_t>(n)];
      for (int t = 0; t < ctx->tree.size(); ++t) {
        const auto& cands = candidates_for(f, t, std::max(fresh_min[f], floor), dlo);
        if (cands.empty()) return false;
        slots.push_back(Slot{f, t, &cands});
      }
    }
    for (size_t f = 0; f < inst.factors.size(); ++f)
      blocks[f].emplace_back(inst.factors[f].ctx->tree.size(),
                             AnyWord(TreeWord(inst.factors[f].ctx)));

    std::function<bool(size_t)> choose = [&](size_t si) -> bool {
      if (si == slots.size()) {
        if (stats) ++stats->candidates_tried;
        // Advance freshness and recurse.
        std::vector<std::uint64_t> saved_fresh = fresh_min;
        for (size_t f = 0; f < inst.factors.size(); ++f) {
          if (!located(f)) continue;
          for (const auto& w : blocks[f].back()) {
            const TreeWord& tw = std::get<TreeWord>(w);
            if (!tw.empty()) fresh_min[f] = std::max(fresh_min[f], tw.max_pos() + 1);
          }
        }
        std::vector<std::vector<int>> added;
        bool consistent = on_family ? true : extend_groups(n, added);
        bool done = false;
        if (consistent) done = dfs_block(n + 1);
        for (const auto& k : added) group_colors.erase(k);
        fresh_min = saved_fresh;
        return done;
      }
      const Slot& slot = slots[si];
      for (const AnyWord& w : *slot.cands) {
        blocks[slot.factor].back()[static_cast<size_t>(slot.node)] = w;
        if (choose(si + 1)) return true;
      }
      return false;
    };
    bool done = choose(0);
    for (size_t f = 0; f < inst.factors.size(); ++f) blocks[f].pop_back();
    return done;
  }
};

std::uint64_t minimal_budget(const SearchInstance& inst) {
  std::uint64_t p = 1;
  for (size_t f = 0; f < inst.factors.size(); ++f) {
    const auto& ctx = inst.factors[f].ctx;
    if (ctx->kind == WordKind::located && ctx->tree.size() > 1)
      p = std::max<std::uint64_t>(p, static_cast<std::uint64_t>(inst.block_count));
    if (ctx->kind == WordKind::nonlocated)
      for (std::uint64_t d : inst.length_schedule) p = std::max(p, d);
  }
  return p;
}

}  // namespace

std::optional<BlockWitness> search_block_sequence(const SearchInstance& inst, SearchStats* stats,
                                                  std::uint64_t node_budget) {
  inst.validate();
  std::uint64_t lo = minimal_budget(inst);
  for (std::uint64_t p = lo; p <= inst.position_bound; ++p) {
    DfsState state(inst, p, stats, node_budget);
    if (state.dfs_block(0)) {
      BlockWitness w;
      w.blocks = state.blocks;
      w.coverage = check_block_witness(inst, w.blocks);
      if (!w.coverage.ok)
        throw Error("search accepted blocks the verifier rejects: " + w.coverage.violation);
      return w;
    }
  }
  return std::nullopt;
}

void enumerate_block_families(const SearchInstance& inst, std::uint64_t budget,
                              const std::function<void(const Blocks&)>& yield) {
  inst.validate();
  DfsState state(inst, budget, nullptr, ~0ull);
  state.on_family = yield;
  state.dfs_block(0);
}

ThresholdResult threshold(const std::function<SearchInstance(int)>& family, int colors,
                          int max_bound, int jobs, std::size_t max_cells) {
  ThresholdResult result;
  for (int N = 1; N <= max_bound; ++N) {
    SearchInstance inst = family(N);
    inst.validate();
    ThresholdCertificate cert;
    cert.bound = N;

    // Reachable coloring universe: every combination value tuple over every
    // block family within the bound.
    std::set<std::vector<std::string>> tuples;
    inst.coloring = Coloring::external(1, [](const std::vector<const AnyWord*>&) { return 0; });
    enumerate_block_families(inst, static_cast<std::uint64_t>(N), [&](const Blocks& blocks) {
      enumerate_combinations(inst, blocks, [&](const Combination& c) { tuples.insert(c.value); });
    });
    cert.reachable_tuples = tuples.size();

    if (tuples.empty()) {
      // No block family fits: N cannot certify.
      cert.all_admit = false;
      result.per_bound.push_back(cert);
      continue;
    }
    if (tuples.size() > max_cells)
      throw BudgetExceeded("threshold: " + std::to_string(tuples.size()) +
                           " reachable tuples at bound " + std::to_string(N) +
                           " exceed the exhaustive enumeration guard");
    std::vector<std::vector<std::string>> keys(tuples.begin(), tuples.end());
    const std::size_t cells = keys.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
      if (total > (1ull << 26)) throw BudgetExceeded("threshold: coloring space too large");
      total *= static_cast<std::uint64_t>(colors);
    }
    cert.colorings_total = total;

    std::vector<int> perm_base(static_cast<size_t>(colors));
    for (int i = 0; i < colors; ++i) perm_base[static_cast<size_t>(i)] = i;

    auto decode = [&](std::uint64_t idx) {
      std::vector<int> v(cells);
      for (std::size_t i = 0; i < cells; ++i) {
        v[cells - 1 - i] = static_cast<int>(idx % static_cast<std::uint64_t>(colors));
        idx /= static_cast<std::uint64_t>(colors);
      }
      return v;
    };
    auto canonical = [&](const std::vector<int>& v) {
      std::vector<int> perm = perm_base;
      do {
        bool smaller = false, larger = false;
        for (int x : v) {
          int y = perm[static_cast<size_t>(x)];
          if (y < x) {
            smaller = true;
            break;
          }
          if (y > x) {
            larger = true;
            break;
          }
        }
        if (smaller) return false;
        (void)larger;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return true;
    };

    std::atomic<std::uint64_t> first_avoider{~0ull};
    std::atomic<std::uint64_t> checked{0};
    int nthreads = std::max(1, jobs);
    std::vector<std::thread> pool;
    auto worker = [&](int wid) {
      for (std::uint64_t idx = static_cast<std::uint64_t>(wid); idx < total;
           idx += static_cast<std::uint64_t>(nthreads)) {
        if (first_avoider.load() != ~0ull && first_avoider.load() < idx) continue;
        std::vector<int> v = decode(idx);
        if (!canonical(v)) continue;
        checked.fetch_add(1);
        std::map<std::vector<std::string>, int> table;
        for (std::size_t i = 0; i < cells; ++i) table[keys[i]] = v[i];
        SearchInstance trial = inst;
        trial.coloring = Coloring::lookup(colors, std::move(table));
        if (!search_block_sequence(trial).has_value()) {
          std::uint64_t prev = first_avoider.load();
          while (idx < prev && !first_avoider.compare_exchange_weak(prev, idx)) {
          }
        }
      }
    };
    if (nthreads == 1) {
      worker(0);
    } else {
      for (int w = 0; w < nthreads; ++w) pool.emplace_back(worker, w);
      for (auto& t : pool) t.join();
    }
    cert.colorings_checked = checked.load();
    if (first_avoider.load() == ~0ull) {
      cert.all_admit = true;
      result.per_bound.push_back(cert);
      result.value = N;
      return result;
    }
    std::vector<int> v = decode(first_avoider.load());
    for (std::size_t i = 0; i < cells; ++i) cert.avoider[keys[i]] = v[i];
    cert.all_admit = false;
    result.per_bound.push_back(cert);
  }
  return result;
}

}  // namespace rwb
