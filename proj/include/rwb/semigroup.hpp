#ifndef RWB_SEMIGROUP_HPP_
#define RWB_SEMIGROUP_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rwb/errors.hpp"

namespace rwb {

using CayleyTable = std::vector<std::vector<int>>;

// First violating triple (x,y,z) with (x+y)+z != x+(y+z), if any.
std::optional<std::array<int, 3>> associativity_violation(const CayleyTable& table);
bool check_associativity(const CayleyTable& table);

// Finite semigroup over elements 0..order-1; associativity validated at
// construction.
class FiniteSemigroup {
 public:
  explicit FiniteSemigroup(CayleyTable table);

  int order() const { return static_cast<int>(table_.size()); }
  int op(int x, int y) const { return table_[x][y]; }
  const CayleyTable& table() const { return table_; }

  bool is_idempotent(int x) const { return op(x, x) == x; }
  std::vector<int> idempotents() const;

  // Iterates y -> y+y from x until the orbit repeats, then returns the
  // idempotent inside the cycle. Always terminates on a finite carrier.
  int idempotent_power(int x) const;

  // e0 <= e1 iff e0+e1 = e1+e0 = e0; both must be idempotent.
  bool idempotent_leq(int e0, int e1) const;

  bool operator==(const FiniteSemigroup& o) const { return table_ == o.table_; }

  static FiniteSemigroup cyclic_add(int n);   // Z_n under +
  static FiniteSemigroup cyclic_mult(int n);  // Z_n under *
  static FiniteSemigroup left_zero(int n);    // x+y = x

 private:
  CayleyTable table_;
};

// Nonempty carrier closed under the operation, kept sorted.
struct SubSemigroup {
  std::vector<int> carrier;
};

bool is_closed_carrier(const FiniteSemigroup& S, const std::vector<int>& carrier);
SubSemigroup make_subsemigroup(const FiniteSemigroup& S, std::vector<int> carrier);
SubSemigroup full_subsemigroup(const FiniteSemigroup& S);
std::vector<SubSemigroup> all_subsemigroups(const FiniteSemigroup& S);

// A <= B iff (A+B) u (B+A) is contained in A.
bool sub_leq(const FiniteSemigroup& S, const SubSemigroup& A, const SubSemigroup& B);

// Idempotents of the carrier minimal for the idempotent order within it.
std::vector<int> minimal_idempotents(const FiniteSemigroup& S, const std::vector<int>& carrier);
std::vector<int> minimal_idempotents(const FiniteSemigroup& S);

// Minimal idempotent a of A with a <= b, for A <= B and idempotent b in B.
// Follows the lemma's recipe: scan the minimal idempotents of A+b and keep
// those with b+a = a = a+b (always at least one; ties broken by lowest
// index). Throws PreconditionFailed when A <= B fails or b is not an
// idempotent of B.
int minimal_lift(const FiniteSemigroup& S, const SubSemigroup& A, const SubSemigroup& B, int b);

struct MinimalLiftScan {
  std::uint64_t tables_scanned = 0;
  std::uint64_t associative_tables = 0;
  std::uint64_t triples_checked = 0;
  bool ok = true;
  std::string counterexample;  // first failure, empty when ok
};

// Exhaustive verification of minimal_lift's postcondition over every
// associative Cayley table of order <= max_order and every valid
// (A <= B, idempotent b) triple. Deterministic result regardless of jobs.
MinimalLiftScan scan_minimal_lift_exhaustive(int max_order, int jobs = 1);

}  // namespace rwb

#endif  // RWB_SEMIGROUP_HPP_
