#include "rwb/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rwb/errors.hpp"

namespace rwb {

namespace {

void require_same_context(const ContextPtr& a, const ContextPtr& b, const char* what) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) {
    if (a && b && a->tree != b->tree) throw TreeMismatch(std::string(what) + ": different trees");
    throw AlphabetMismatch(std::string(what) + ": different word contexts");
  }
}

int chain_least(const RootedTree& tree, const std::vector<int>& vars) {
  if (vars.empty()) return tree.root();
  auto cls = classify_node_set(tree, vars);
  if (!cls.is_chain)
    throw NotAChain("variable set is not a chain; word lies in no component");
  return *cls.least;
}

}  // namespace

std::string Symbol::str() const {
  if (is_variable()) return "$" + std::to_string(variable_node());
  return std::string(1, static_cast<char>('a' + letter_index()));
}

Symbol Symbol::parse(const std::string& text) {
  if (text.empty()) throw Error("empty symbol");
  if (text[0] == '$') return Symbol::variable(std::stoi(text.substr(1)));
  if (text.size() == 1 && text[0] >= 'a' && text[0] <= 'z')
    return Symbol::letter(text[0] - 'a');
  throw Error("bad symbol literal: " + text);
}

void check_symbol(const WordContext& ctx, Symbol s) {
  if (s.is_letter()) {
    if (s.letter_index() >= ctx.alphabet_size)
      throw AlphabetMismatch("letter index " + std::to_string(s.letter_index()) +
                             " outside alphabet of size " + std::to_string(ctx.alphabet_size));
  } else {
    int v = s.variable_node();
    if (v <= 0 || v >= ctx.tree.size())
      throw TreeMismatch("variable node " + std::to_string(v) + " not a non-root node");
  }
}

TreeWord::TreeWord(ContextPtr ctx, std::vector<Entry> entries)
    : ctx_(std::move(ctx)), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (size_t i = 0; i + 1 < entries_.size(); ++i)
    if (entries_[i].first == entries_[i + 1].first)
      throw Error("duplicate position in word: " + std::to_string(entries_[i].first));
  for (const auto& [pos, sym] : entries_) check_symbol(*ctx_, sym);
}

std::uint64_t TreeWord::min_pos() const { return entries_.empty() ? 0 : entries_.front().first; }
std::uint64_t TreeWord::max_pos() const { return entries_.empty() ? 0 : entries_.back().first; }

std::vector<int> TreeWord::variable_nodes() const {
  std::set<int> vars;
  for (const auto& [pos, sym] : entries_)
    if (sym.is_variable()) vars.insert(sym.variable_node());
  return std::vector<int>(vars.begin(), vars.end());
}

int TreeWord::component() const { return chain_least(ctx_->tree, variable_nodes()); }

bool TreeWord::in_component(int t) const {
  try {
    return component() == t;
  } catch (const NotAChain&) {
    return false;
  }
}

std::string TreeWord::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ", ";
    os << entries_[i].first << ":" << entries_[i].second.str();
  }
  os << "]";
  return os.str();
}

std::optional<TreeWord> try_word_sum(const TreeWord& b0, const TreeWord& b1) {
  require_same_context(b0.context(), b1.context(), "word_sum");
  std::vector<TreeWord::Entry> merged;
  merged.reserve(b0.entries().size() + b1.entries().size());
  size_t i = 0, j = 0;
  const auto& e0 = b0.entries();
  const auto& e1 = b1.entries();
  while (i < e0.size() && j < e1.size()) {
    if (e0[i].first == e1[j].first) return std::nullopt;
    if (e0[i].first < e1[j].first)
      merged.push_back(e0[i++]);
    else
      merged.push_back(e1[j++]);
  }
  while (i < e0.size()) merged.push_back(e0[i++]);
  while (j < e1.size()) merged.push_back(e1[j++]);
  return TreeWord(b0.context(), std::move(merged));
}

TreeWord word_sum(const TreeWord& b0, const TreeWord& b1) {
  auto r = try_word_sum(b0, b1);
  if (!r) throw DomainsOverlap("word_sum undefined: domains intersect");
  return *r;
}

StringWord::StringWord(ContextPtr ctx, std::vector<Symbol> symbols)
    : ctx_(std::move(ctx)), symbols_(std::move(symbols)) {
  for (Symbol s : symbols_) check_symbol(*ctx_, s);
}

std::vector<int> StringWord::variable_nodes() const {
  std::set<int> vars;
  for (Symbol s : symbols_)
    if (s.is_variable()) vars.insert(s.variable_node());
  return std::vector<int>(vars.begin(), vars.end());
}

int StringWord::component() const { return chain_least(ctx_->tree, variable_nodes()); }

bool StringWord::in_component(int t) const {
  try {
    return component() == t;
  } catch (const NotAChain&) {
    return false;
  }
}

std::string StringWord::str() const {
  std::ostringstream os;
  for (Symbol s : symbols_) os << s.str();
  return os.str();
}

StringWord concat(const StringWord& w0, const StringWord& w1) {
  require_same_context(w0.context(), w1.context(), "concat");
  std::vector<Symbol> syms = w0.symbols();
  syms.insert(syms.end(), w1.symbols().begin(), w1.symbols().end());
  return StringWord(w0.context(), std::move(syms));
}

SubstitutionMap::SubstitutionMap(ContextPtr ctx, WordKind mode,
                                 std::vector<std::optional<Symbol>> variable_image)
    : ctx_(std::move(ctx)),
      mode_(mode),
      variable_image_(std::move(variable_image)),
      spine_(RegressiveHom::identity(ctx_->tree)) {
  const auto& tree = ctx_->tree;
  if (static_cast<int>(variable_image_.size()) != tree.size())
    throw TreeMismatch("variable image must have one slot per tree node");
  if (variable_image_[0].has_value())
    throw Error("the root is not a variable");
  std::vector<int> spine_img(static_cast<size_t>(tree.size()), 0);
  for (int v = 1; v < tree.size(); ++v) {
    const auto& img = variable_image_[static_cast<size_t>(v)];
    if (img.has_value()) {
      check_symbol(*ctx_, *img);
      if (img->is_variable()) spine_img[static_cast<size_t>(v)] = img->variable_node();
    } else if (mode_ == WordKind::nonlocated) {
      throw ModeMismatch("nonlocated substitution map must be total on variables");
    }
  }
  if (!is_regressive_hom(tree, spine_img))
    throw Error("derived spine is not a regressive homomorphism");
  spine_ = RegressiveHom(tree, spine_img);
}

bool SubstitutionMap::defined_on(int var_node) const {
  return variable_image_.at(static_cast<size_t>(var_node)).has_value();
}

std::optional<Symbol> SubstitutionMap::image_of(int var_node) const {
  return variable_image_.at(static_cast<size_t>(var_node));
}

bool SubstitutionMap::is_identity_on_variables() const {
  for (int v = 1; v < ctx_->tree.size(); ++v) {
    const auto& img = variable_image_[static_cast<size_t>(v)];
    if (!img || !(*img == Symbol::variable(v))) return false;
  }
  return true;
}

SubstitutionMap SubstitutionMap::identity(ContextPtr ctx) {
  std::vector<std::optional<Symbol>> img(static_cast<size_t>(ctx->tree.size()));
  for (int v = 1; v < ctx->tree.size(); ++v)
    img[static_cast<size_t>(v)] = Symbol::variable(v);
  return SubstitutionMap(std::move(ctx), WordKind::nonlocated, std::move(img));
}

SubstitutionMap SubstitutionMap::from_hom(ContextPtr ctx, const RegressiveHom& f) {
  if (f.tree() != ctx->tree) throw TreeMismatch("tetris map: hom on a different tree");
  std::vector<std::optional<Symbol>> img(static_cast<size_t>(ctx->tree.size()));
  for (int v = 1; v < ctx->tree.size(); ++v) {
    int fv = f.apply(v);
    if (fv != ctx->tree.root()) img[static_cast<size_t>(v)] = Symbol::variable(fv);
  }
  return SubstitutionMap(std::move(ctx), WordKind::located, std::move(img));
}

SubstitutionMap compose_substitutions(const SubstitutionMap& s, const SubstitutionMap& t) {
  require_same_context(s.context(), t.context(), "compose_substitutions");
  const auto& tree = s.context()->tree;
  WordKind mode = (s.mode() == WordKind::located || t.mode() == WordKind::located)
                      ? WordKind::located
                      : WordKind::nonlocated;
  std::vector<std::optional<Symbol>> img(static_cast<size_t>(tree.size()));
  for (int v = 1; v < tree.size(); ++v) {
    auto first = t.image_of(v);
    if (!first) continue;
    if (first->is_letter()) {
      img[static_cast<size_t>(v)] = first;
      continue;
    }
    img[static_cast<size_t>(v)] = s.image_of(first->variable_node());
  }
  return SubstitutionMap(s.context(), mode, std::move(img));
}

TreeWord substitution_apply(const SubstitutionMap& sigma, const TreeWord& b) {
  require_same_context(sigma.context(), b.context(), "substitution_apply");
  std::vector<TreeWord::Entry> out;
  out.reserve(b.entries().size());
  for (const auto& [pos, sym] : b.entries()) {
    if (sym.is_letter()) {
      out.emplace_back(pos, sym);
      continue;
    }
    auto img = sigma.image_of(sym.variable_node());
    if (img) out.emplace_back(pos, *img);
  }
  return TreeWord(b.context(), std::move(out));
}

TreeWord tetris_apply(const RegressiveHom& f, const TreeWord& b) {
  return substitution_apply(SubstitutionMap::from_hom(b.context(), f), b);
}

StringWord substitution_apply_nonlocated(const SubstitutionMap& sigma, const StringWord& w) {
  require_same_context(sigma.context(), w.context(), "substitution_apply_nonlocated");
  if (sigma.mode() != WordKind::nonlocated)
    throw ModeMismatch("nonlocated application requires a total substitution map");
  std::vector<Symbol> out;
  out.reserve(w.symbols().size());
  for (Symbol s : w.symbols()) {
    if (s.is_letter()) {
      out.push_back(s);
    } else {
      out.push_back(*sigma.image_of(s.variable_node()));
    }
  }
  return StringWord(w.context(), std::move(out));
}

std::vector<TreeWord> adequacy_window(const ContextPtr& ctx, const std::vector<TreeWord>& blockers,
                                      std::uint64_t position_bound) {
  if (position_bound > 20)
    throw EnumerationBudgetExceeded("adequacy window bound too large for enumeration");
  std::set<std::uint64_t> blocked;
  for (const auto& w : blockers) {
    require_same_context(ctx, w.context(), "adequacy_window");
    for (const auto& [pos, sym] : w.entries()) blocked.insert(pos);
  }
  std::vector<std::uint64_t> free_pos;
  for (std::uint64_t p = 0; p < position_bound; ++p)
    if (!blocked.count(p)) free_pos.push_back(p);

  std::vector<Symbol> symbols;
  for (int a = 0; a < ctx->alphabet_size; ++a) symbols.push_back(Symbol::letter(a));
  for (int v = 1; v < ctx->tree.size(); ++v) symbols.push_back(Symbol::variable(v));

  std::vector<TreeWord> out;
  std::vector<TreeWord::Entry> cur;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == free_pos.size()) {
      out.emplace_back(ctx, cur);
      return;
    }
    self(self, i + 1);  // position unused
    for (Symbol s : symbols) {
      cur.emplace_back(free_pos[i], s);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rwb
