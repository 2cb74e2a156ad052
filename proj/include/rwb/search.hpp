#ifndef RWB_SEARCH_HPP_
#define RWB_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rwb/words.hpp"

namespace rwb {

using AnyWord = std::variant<TreeWord, StringWord>;

int any_component(const AnyWord& w);
std::string any_str(const AnyWord& w);
AnyWord any_apply(const SubstitutionMap& sigma, const AnyWord& w);
// Disjoint-domain sum for located words (nullopt on overlap), concatenation
// for nonlocated ones (total).
std::optional<AnyWord> any_combine(const AnyWord& w0, const AnyWord& w1);

struct Factor {
  ContextPtr ctx;
  std::vector<SubstitutionMap> endos;
};

class Coloring {
 public:
  enum class Kind { expression, lookup, external };

  Coloring() = default;
  static Coloring external(int colors, std::function<int(const std::vector<const AnyWord*>&)> fn);
  // Lookup over tuples keyed by their serialized words; missing tuples get 0.
  static Coloring lookup(int colors, std::map<std::vector<std::string>, int> table);

  int colors() const { return colors_; }
  Kind kind() const { return kind_; }
  int operator()(const std::vector<const AnyWord*>& tuple) const;
  const std::map<std::vector<std::string>, int>& table() const { return table_; }
  const std::string& description() const { return description_; }
  void set_description(std::string d) { description_ = std::move(d); }

 private:
  int colors_ = 1;
  Kind kind_ = Kind::external;
  std::function<int(const std::vector<const AnyWord*>&)> fn_;
  std::map<std::vector<std::string>, int> table_;
  std::string description_;
};

// Finitary instance of the block-sequence theorems: k factor contexts, a
// coordinate assignment lambda: m -> k, per-step endo schedules, freshness
// (located: supports strictly above everything previously used on the
// factor's axis; nonlocated: minimum lengths), and a position bound.
struct SearchInstance {
  std::vector<Factor> factors;
  std::vector<int> lambda;
  int block_count = 1;
  std::uint64_t position_bound = 8;
  // [factor][step] -> endo indices; empty schedule = all endos every step.
  std::vector<std::vector<std::vector<int>>> endo_schedule;
  std::vector<std::uint64_t> length_schedule;  // nonlocated minimum lengths
  // [factor][step] -> block supports must start at or above this position
  // (the trace of the per-step adequacy sets); empty = no floors.
  std::vector<std::vector<std::uint64_t>> freshness_floor;
  Coloring coloring;

  const std::vector<int>& endos_at(int factor, int step) const;
  void validate() const;
};

// blocks[factor][step][node]
using Blocks = std::vector<std::vector<std::vector<AnyWord>>>;

struct CoordPick {
  int block;
  int endo;
  int node;
};

struct Combination {
  std::vector<std::vector<CoordPick>> coords;  // per coordinate, blocks increasing
  std::vector<int> least;                      // least chain element per coordinate
  int color = 0;
  std::vector<std::string> value;  // serialized coordinate words
};

// Structured sum of one coordinate: picks with strictly increasing blocks,
// endos drawn from the schedule. Returns the word and the least element of
// the spine chain; NotAChain when inadmissible, DomainsOverlap only when
// freshness was violated upstream.
std::pair<AnyWord, int> structured_sum(const SearchInstance& inst, const Blocks& blocks,
                                       int coordinate, const std::vector<CoordPick>& picks);

// Exhaustively yields every admissible combination in a fixed order.
void enumerate_combinations(const SearchInstance& inst, const Blocks& blocks,
                            const std::function<void(const Combination&)>& yield);

struct CoverageReport {
  std::vector<Combination> entries;
  bool ok = true;
  std::string violation;  // first conflicting pair, empty when ok
  std::uint64_t hash = 0;
  std::map<std::vector<int>, int> group_colors;
};

// Independent verifier: groups every admissible combination by its least
// tuple and demands color constancy per group.
CoverageReport check_block_witness(const SearchInstance& inst, const Blocks& blocks);

struct BlockWitness {
  Blocks blocks;
  CoverageReport coverage;
};

struct SearchStats {
  std::uint64_t nodes_visited = 0;
  std::uint64_t candidates_tried = 0;
};

// Backtracking search in support-lexicographic order with incremental
// group-color pruning, iteratively deepened over the used-position budget.
// nullopt = exhausted at position_bound (bound insufficiency, not a
// refutation). Successful witnesses are re-verified with
// check_block_witness before being returned.
std::optional<BlockWitness> search_block_sequence(const SearchInstance& inst,
                                                  SearchStats* stats = nullptr,
                                                  std::uint64_t node_budget = 200'000'000);

// All block families at the given budget, without any coloring constraint.
void enumerate_block_families(const SearchInstance& inst, std::uint64_t budget,
                              const std::function<void(const Blocks&)>& yield);

struct ThresholdCertificate {
  int bound = 0;
  std::size_t reachable_tuples = 0;
  std::uint64_t colorings_total = 0;
  std::uint64_t colorings_checked = 0;  // canonical under color permutation
  bool all_admit = false;
  std::map<std::vector<std::string>, int> avoider;  // witnessless coloring, if any
};

struct ThresholdResult {
  std::optional<int> value;  // smallest certified N, if any
  std::vector<ThresholdCertificate> per_bound;
};

// Smallest N <= max_bound such that every r-coloring of the reachable
// universe admits a witness, certified by exhaustive coloring enumeration
// with color-permutation canonicalization.
ThresholdResult threshold(const std::function<SearchInstance(int)>& family, int colors,
                          int max_bound, int jobs = 1, std::size_t max_cells = 24);

}  // namespace rwb

#endif  // RWB_SEARCH_HPP_
