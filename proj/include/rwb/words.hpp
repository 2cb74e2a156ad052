#ifndef RWB_WORDS_HPP_
#define RWB_WORDS_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rwb/tree.hpp"

namespace rwb {

enum class WordKind { located, nonlocated };

// Tree + alphabet shared by a family of words. Letters are indices
// 0..alphabet_size-1 and print as 'a','b',.... Variables are non-root tree
// nodes. FIN^T is the located kind with an empty alphabet.
struct WordContext {
  RootedTree tree;
  int alphabet_size = 0;
  WordKind kind = WordKind::located;

  bool operator==(const WordContext& o) const {
    return tree == o.tree && alphabet_size == o.alphabet_size && kind == o.kind;
  }
};

using ContextPtr = std::shared_ptr<const WordContext>;

inline ContextPtr make_context(RootedTree tree, int alphabet_size,
                               WordKind kind = WordKind::located) {
  return std::make_shared<const WordContext>(WordContext{std::move(tree), alphabet_size, kind});
}

// Letter(index) or Variable(node != root).
class Symbol {
 public:
  static Symbol letter(int index) { return Symbol(index); }
  static Symbol variable(int node) { return Symbol(-node - 1); }

  bool is_letter() const { return code_ >= 0; }
  bool is_variable() const { return code_ < 0; }
  int letter_index() const { return code_; }
  int variable_node() const { return -code_ - 1; }

  bool operator==(Symbol o) const { return code_ == o.code_; }
  bool operator!=(Symbol o) const { return code_ != o.code_; }
  bool operator<(Symbol o) const { return code_ < o.code_; }

  std::string str() const;                       // 'a' or $3
  static Symbol parse(const std::string& text);  // inverse of str()

 private:
  explicit Symbol(std::int32_t code) : code_(code) {}
  std::int32_t code_;
};

void check_symbol(const WordContext& ctx, Symbol s);

// Finitely supported map position -> symbol: an element of FIN_L^T
// (FIN^T when the alphabet is empty). Entries kept sorted by position.
class TreeWord {
 public:
  using Entry = std::pair<std::uint64_t, Symbol>;

  explicit TreeWord(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  TreeWord(ContextPtr ctx, std::vector<Entry> entries);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  size_t support_size() const { return entries_.size(); }
  std::uint64_t min_pos() const;  // 0 on the empty word
  std::uint64_t max_pos() const;  // 0 on the empty word

  std::vector<int> variable_nodes() const;  // deduplicated, sorted

  // Component: root for variable-free words, else the least element of the
  // variable chain. Throws NotAChain when the variables are incomparable.
  int component() const;
  bool in_component(int t) const;

  std::string str() const;  // [pos:sym, ...]

  bool operator==(const TreeWord& o) const { return entries_ == o.entries_; }
  bool operator<(const TreeWord& o) const { return entries_ < o.entries_; }

 private:
  ContextPtr ctx_;
  std::vector<Entry> entries_;
};

// Union of graphs; defined only when the domains are disjoint.
TreeWord word_sum(const TreeWord& b0, const TreeWord& b1);
std::optional<TreeWord> try_word_sum(const TreeWord& b0, const TreeWord& b1);

// Finite string over letters and variables; concatenation is total.
class StringWord {
 public:
  explicit StringWord(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  StringWord(ContextPtr ctx, std::vector<Symbol> symbols);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  size_t length() const { return symbols_.size(); }

  std::vector<int> variable_nodes() const;
  int component() const;
  bool in_component(int t) const;

  std::string str() const;

  bool operator==(const StringWord& o) const { return symbols_ == o.symbols_; }
  bool operator<(const StringWord& o) const { return symbols_ < o.symbols_; }

 private:
  ContextPtr ctx_;
  std::vector<Symbol> symbols_;
};

StringWord concat(const StringWord& w0, const StringWord& w1);

// Variable substitution map. Located mode: partially defined on variables
// (an absent image drops the positions carrying that variable). Nonlocated
// mode: total on variables. Letters always map to themselves. The derived
// spine sends t to sigma(t) when that is a variable and to the root
// otherwise, and must be a regressive homomorphism.
class SubstitutionMap {
 public:
  SubstitutionMap(ContextPtr ctx, WordKind mode,
                  std::vector<std::optional<Symbol>> variable_image);

  const ContextPtr& context() const { return ctx_; }
  WordKind mode() const { return mode_; }
  const RegressiveHom& spine() const { return spine_; }
  bool defined_on(int var_node) const;
  std::optional<Symbol> image_of(int var_node) const;

  bool is_identity_on_variables() const;

  static SubstitutionMap identity(ContextPtr ctx);
  // Tetris map of a regressive hom: variables move along the hom, letters
  // pass through; variables sent to the root become undefined. Located only.
  static SubstitutionMap from_hom(ContextPtr ctx, const RegressiveHom& f);

  bool operator==(const SubstitutionMap& o) const {
    return mode_ == o.mode_ && variable_image_ == o.variable_image_;
  }

 private:
  ContextPtr ctx_;
  WordKind mode_;
  std::vector<std::optional<Symbol>> variable_image_;  // indexed by node, [0] unused
  RegressiveHom spine_;
};

SubstitutionMap compose_substitutions(const SubstitutionMap& s, const SubstitutionMap& t);

TreeWord substitution_apply(const SubstitutionMap& sigma, const TreeWord& b);
TreeWord tetris_apply(const RegressiveHom& f, const TreeWord& b);
StringWord substitution_apply_nonlocated(const SubstitutionMap& sigma, const StringWord& w);

// All tree words with positions in [0, bound) whose domain is disjoint from
// the domain of every word in blockers: the finitary slice of phi_S(A).
// Exponential in the free window; intended for small bounds.
std::vector<TreeWord> adequacy_window(const ContextPtr& ctx, const std::vector<TreeWord>& blockers,
                                      std::uint64_t position_bound);

}  // namespace rwb

#endif  // RWB_WORDS_HPP_
