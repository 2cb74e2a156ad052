#include "rwb/actions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rwb/errors.hpp"

namespace rwb {

namespace {

std::vector<std::optional<Symbol>> image_vector(const SubstitutionMap& s) {
  std::vector<std::optional<Symbol>> img(static_cast<size_t>(s.context()->tree.size()));
  for (int v = 1; v < s.context()->tree.size(); ++v) img[static_cast<size_t>(v)] = s.image_of(v);
  return img;
}

}  // namespace

WordAction::WordAction(ContextPtr ctx, std::vector<SubstitutionMap> generators, int closure_depth)
    : ctx_(std::move(ctx)) {
  std::set<std::vector<std::optional<Symbol>>> seen;
  std::vector<SubstitutionMap> frontier;
  for (auto& g : generators) {
    if (!(*g.context() == *ctx_)) throw TreeMismatch("endo generator on a different context");
    if (seen.insert(image_vector(g)).second) {
      endos_.push_back(g);
      frontier.push_back(g);
    }
  }
  for (int depth = 1; depth < closure_depth && !frontier.empty(); ++depth) {
    std::vector<SubstitutionMap> next;
    for (const auto& f : frontier) {
      for (const auto& g : endos_) {
        SubstitutionMap comp = compose_substitutions(f, g);
        if (seen.insert(image_vector(comp)).second) {
          next.push_back(comp);
          endos_.push_back(comp);
        }
        SubstitutionMap comp2 = compose_substitutions(g, f);
        if (seen.insert(image_vector(comp2)).second) {
          next.push_back(comp2);
          endos_.push_back(comp2);
        }
      }
    }
    frontier = std::move(next);
  }
}

WordAction WordAction::tetris_action(ContextPtr ctx) {
  std::vector<SubstitutionMap> gens;
  for (const auto& f : enumerate_regressive_homs(ctx->tree))
    gens.push_back(SubstitutionMap::from_hom(ctx, f));
  return WordAction(std::move(ctx), std::move(gens), 1);  // hom family is already closed
}

WordAction WordAction::letter_substitution_action(ContextPtr ctx) {
  std::vector<SubstitutionMap> gens;
  gens.push_back(SubstitutionMap::identity(ctx));
  for (int a = 0; a < ctx->alphabet_size; ++a) {
    std::vector<std::optional<Symbol>> img(static_cast<size_t>(ctx->tree.size()));
    for (int v = 1; v < ctx->tree.size(); ++v) img[static_cast<size_t>(v)] = Symbol::letter(a);
    gens.emplace_back(ctx, ctx->kind, std::move(img));
  }
  return WordAction(std::move(ctx), std::move(gens), 3);
}

ActionCheckReport check_action_axioms(const WordAction& action, int sample_budget,
                                      std::uint64_t seed) {
  ActionCheckReport report;
  const auto& ctx = action.context();
  const auto& tree = ctx->tree;

  auto note = [&](const std::string& rule, const std::string& detail) {
    report.ok = false;
    report.violations.push_back({rule, detail});
  };

  for (size_t i = 0; i < action.endos().size(); ++i) {
    const auto& e = action.endos()[i];
    if (!is_regressive_hom(tree, e.spine().image()))
      note("spine-regressive", "endo " + std::to_string(i));
  }

  // Sample words of a given component and check mapping + fixing.
  std::mt19937_64 rng(seed);
  auto random_word = [&](int t) -> std::optional<TreeWord> {
    // Chain through t: ancestors of t (excluding root), t required.
    std::vector<int> pool;
    for (int v = t; v != tree.root(); v = tree.parent(v)) pool.push_back(v);
    std::vector<TreeWord::Entry> entries;
    std::set<std::uint64_t> used;
    if (t != tree.root()) {
      int extra = static_cast<int>(rng() % 3);
      entries.emplace_back(rng() % 16, Symbol::variable(t));
      used.insert(entries.back().first);
      for (int i = 0; i < extra; ++i) {
        std::uint64_t p = rng() % 16;
        if (used.count(p)) continue;
        used.insert(p);
        entries.emplace_back(p, Symbol::variable(pool[rng() % pool.size()]));
      }
    }
    if (ctx->alphabet_size > 0) {
      int extra = static_cast<int>(rng() % 3);
      for (int i = 0; i < extra; ++i) {
        std::uint64_t p = rng() % 16;
        if (used.count(p)) continue;
        used.insert(p);
        entries.emplace_back(p, Symbol::letter(static_cast<int>(rng() % ctx->alphabet_size)));
      }
    }
    TreeWord w(ctx, entries);
    if (!w.in_component(t)) return std::nullopt;
    return w;
  };

  for (int c = 0; c < sample_budget; ++c) {
    int t = static_cast<int>(rng() % tree.size());
    auto wopt = random_word(t);
    if (!wopt) continue;
    const TreeWord& w = *wopt;
    ++report.cases_checked;
    for (size_t i = 0; i < action.endos().size(); ++i) {
      const auto& e = action.endos()[i];
      int ft = e.spine()(t);
      TreeWord img = substitution_apply(e, w);
      if (!img.in_component(ft))
        note("component-mapping", "endo " + std::to_string(i) + " node " + std::to_string(t) +
                                      " word " + w.str() + " -> " + img.str() +
                                      " not in component " + std::to_string(ft));
      if (ft == t && !(img == w))
        note("fixed-point", "endo " + std::to_string(i) + " moves " + w.str() +
                                " inside component " + std::to_string(t));
    }
  }
  return report;
}

std::optional<RamseyWitness> find_ramsey_witness(const RamseyInstance& inst) {
  const auto& ctx = inst.action.context();
  const auto& tree = ctx->tree;
  const int n = tree.size();

  std::vector<TreeWord> window = adequacy_window(ctx, inst.s0, inst.position_bound);
  // Deterministic order: support size, then entry list.
  std::stable_sort(window.begin(), window.end(),
                   [](const TreeWord& a, const TreeWord& b) {
                     if (a.support_size() != b.support_size())
                       return a.support_size() < b.support_size();
                     return a < b;
                   });
  std::vector<std::vector<const TreeWord*>> candidates(static_cast<size_t>(n));
  for (const auto& w : window)
    for (int t = 0; t < n; ++t)
      if (w.in_component(t)) candidates[static_cast<size_t>(t)].push_back(&w);
  for (int t = 0; t < n; ++t)
    if (candidates[static_cast<size_t>(t)].empty()) return std::nullopt;

  std::vector<const TreeWord*> chosen(static_cast<size_t>(n), nullptr);
  std::map<int, int> group_color;

  auto rec = [&](auto&& self, int t) -> bool {
    if (t == n) return true;
    for (const TreeWord* w : candidates[static_cast<size_t>(t)]) {
      std::vector<std::pair<int, bool>> added;  // group, was-new
      bool ok = true;
      for (int ei : inst.f0) {
        const auto& e = inst.action.endos()[static_cast<size_t>(ei)];
        int g = e.spine()(t);
        int c = inst.coloring(substitution_apply(e, *w));
        auto it = group_color.find(g);
        if (it == group_color.end()) {
          group_color.emplace(g, c);
          added.emplace_back(g, true);
        } else if (it->second != c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        chosen[static_cast<size_t>(t)] = w;
        if (self(self, t + 1)) return true;
      }
      for (auto& [g, was_new] : added)
        if (was_new) group_color.erase(g);
    }
    return false;
  };

  if (!rec(rec, 0)) return std::nullopt;
  RamseyWitness w;
  for (int t = 0; t < n; ++t) w.x.push_back(*chosen[static_cast<size_t>(t)]);
  std::string err = verify_ramsey_witness(inst, w);
  if (!err.empty()) throw Error("search produced a witness its verifier rejects: " + err);
  return w;
}

std::string verify_ramsey_witness(const RamseyInstance& inst, const RamseyWitness& w) {
  const auto& ctx = inst.action.context();
  const auto& tree = ctx->tree;
  if (static_cast<int>(w.x.size()) != tree.size()) return "witness size mismatch";

  std::set<std::uint64_t> blocked;
  for (const auto& b : inst.s0)
    for (const auto& [pos, sym] : b.entries()) blocked.insert(pos);
  for (int t = 0; t < tree.size(); ++t) {
    if (!w.x[static_cast<size_t>(t)].in_component(t))
      return "x(" + std::to_string(t) + ") not in component " + std::to_string(t);
    for (const auto& [pos, sym] : w.x[static_cast<size_t>(t)].entries()) {
      if (pos >= inst.position_bound) return "x exceeds the position bound";
      if (blocked.count(pos)) return "x not in the adequacy window of S0";
    }
  }
  std::map<int, int> group;
  for (int ei : inst.f0) {
    const auto& e = inst.action.endos()[static_cast<size_t>(ei)];
    for (int t = 0; t < tree.size(); ++t) {
      int g = e.spine()(t);
      int c = inst.coloring(substitution_apply(e, w.x[static_cast<size_t>(t)]));
      auto [it, fresh] = group.emplace(g, c);
      if (!fresh && it->second != c)
        return "color of tau(x(" + std::to_string(t) + ")) differs within group " +
               std::to_string(g);
    }
  }
  return {};
}

}  // namespace rwb
