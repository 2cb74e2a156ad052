#ifndef RWB_DSL_HPP_
#define RWB_DSL_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rwb/delta.hpp"
#include "rwb/search.hpp"

namespace rwb {

inline constexpr const char* kEngineVersion = "0.1.0";

// Named substitution-map declaration, kept in surface syntax for canonical
// re-emission: either "pred <k>" or a list of "$v->rhs" entries with rhs a
// letter, a variable, or "." (undefined; located only).
struct EndoDecl {
  std::string name;
  bool is_pred = false;
  int pred_k = 0;
  std::vector<std::pair<int, std::string>> entries;
};

struct FactorSpec {
  WordKind kind = WordKind::located;
  std::vector<int> tree_parents;
  int alphabet = 0;
  std::string endo_mode = "all-homs";  // all-homs | letters | named
  std::vector<std::string> endo_names;
  std::vector<EndoDecl> decls;
  std::vector<std::uint64_t> floors;  // per-step freshness floors
};

struct InstanceSpec {
  std::string mode = "search";  // search | verify | threshold | delta-scan
  int colors = 2;
  int blocks = 1;
  int coords = 1;
  std::vector<int> lambda;  // defaults to all-zero of size coords
  std::uint64_t bound = 8;
  std::uint64_t seed = 0;
  std::string coloring_kind = "expr";  // expr | table
  std::string coloring_expr = "0";
  std::vector<int> coloring_table;
  std::vector<std::uint64_t> lengths;
  std::vector<FactorSpec> factors;

  // delta-scan section
  int dim = 1;
  std::vector<std::int64_t> window_lo, window_hi;
  std::string set_expr = "0";
  std::vector<int> delta_tree;
  int gdim = 1;
  std::map<int, std::vector<std::int64_t>> gmap_nodes;  // node -> vector; 0 = const default
  std::vector<std::string> poly_exprs;
  int pdegree = 2;
  bool origin_zero = true;
  int mblocks = 2;
  std::int64_t sweep_side = 0;  // 0 = whole window only
};

// Full-file parser with line/column errors; unknown keys are rejected.
InstanceSpec parse_instance(const std::string& text);
// Canonical form: fixed key order, normalized spacing. parse(emit(.)) is the
// identity on the canonical form.
std::string emit_instance(const InstanceSpec& spec);
std::uint64_t instance_digest(const InstanceSpec& spec);

SearchInstance build_search_instance(const InstanceSpec& spec);
DeltaScene build_scene(const InstanceSpec& spec);
FurstenbergInstance build_delta_instance(const InstanceSpec& spec);

// Word literals: located "[0:$1, 3:a]", nonlocated "ab$1b".
TreeWord parse_tree_word(const ContextPtr& ctx, const std::string& text);
StringWord parse_string_word(const ContextPtr& ctx, const std::string& text);
AnyWord parse_any_word(const ContextPtr& ctx, const std::string& text);

}  // namespace rwb

#endif  // RWB_DSL_HPP_
