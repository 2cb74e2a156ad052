#ifndef RWB_ACTIONS_HPP_
#define RWB_ACTIONS_HPP_

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rwb/words.hpp"

namespace rwb {

// Action of the context's tree on its word semigroup: a finite endomorphism
// family closed under composition (up to the declared closure depth), each
// entry a substitution map with its derived regressive spine.
class WordAction {
 public:
  WordAction(ContextPtr ctx, std::vector<SubstitutionMap> generators, int closure_depth = 3);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<SubstitutionMap>& endos() const { return endos_; }

  // Full tetris family tau_f over every regressive homomorphism (located).
  static WordAction tetris_action(ContextPtr ctx);
  // Letter substitutions sigma_a for each letter plus the identity (the
  // Hales-Jewett family for the two-node tree).
  static WordAction letter_substitution_action(ContextPtr ctx);

 private:
  ContextPtr ctx_;
  std::vector<SubstitutionMap> endos_;
};

struct ActionViolation {
  std::string rule;
  std::string detail;
};

struct ActionCheckReport {
  bool ok = true;
  std::vector<ActionViolation> violations;
  int cases_checked = 0;
};

// Spine regressivity, component mapping tau(S_t) into S_{f(t)}, and the
// fixed-point condition, on exhaustively enumerated small words plus
// random samples up to sample_budget.
ActionCheckReport check_action_axioms(const WordAction& action, int sample_budget,
                                      std::uint64_t seed = 1);

struct RamseyInstance {
  WordAction action;
  std::vector<TreeWord> s0;                      // adequacy blockers
  std::function<int(const TreeWord&)> coloring;  // total on the bounded universe
  int colors = 2;
  std::vector<int> f0;  // endo indices
  std::uint64_t position_bound = 8;
};

struct RamseyWitness {
  std::vector<TreeWord> x;  // per node
};

// Backtracking over per-node word choices; the result is re-verified with
// verify_ramsey_witness before being returned. nullopt = exhausted within
// the bound (the bound was too small, not a refutation).
std::optional<RamseyWitness> find_ramsey_witness(const RamseyInstance& inst);

// Independent straightforward evaluator (no shared search state).
std::string verify_ramsey_witness(const RamseyInstance& inst, const RamseyWitness& w);

}  // namespace rwb

#endif  // RWB_ACTIONS_HPP_
