#include "rwb/semigroup.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <thread>

namespace rwb {

std::optional<std::array<int, 3>> associativity_violation(const CayleyTable& table) {
  const int n = static_cast<int>(table.size());
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(table[x].size()) != n)
      throw PreconditionFailed("Cayley table is not square");
    for (int y = 0; y < n; ++y) {
      int v = table[x][y];
      if (v < 0 || v >= n) throw PreconditionFailed("Cayley table entry out of range");
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          return std::array<int, 3>{x, y, z};
  return std::nullopt;
}

bool check_associativity(const CayleyTable& table) {
  return !associativity_violation(table).has_value();
}

FiniteSemigroup::FiniteSemigroup(CayleyTable table) : table_(std::move(table)) {
  if (table_.empty()) throw PreconditionFailed("semigroup must be nonempty");
  if (auto viol = associativity_violation(table_)) {
    auto [x, y, z] = *viol;
    throw PreconditionFailed("table not associative at (" + std::to_string(x) + "," +
                             std::to_string(y) + "," + std::to_string(z) + ")");
  }
}

std::vector<int> FiniteSemigroup::idempotents() const {
  std::vector<int> out;
  for (int x = 0; x < order(); ++x)
    if (is_idempotent(x)) out.push_back(x);
  return out;
}

int FiniteSemigroup::idempotent_power(int x) const {
  // Doubling lands in the cyclic part of <x>; the cycle is a finite cyclic
  // group, so y-multiplication from y reaches its identity, the unique
  // idempotent of <x>. (Doubling alone can orbit without hitting it, e.g.
  // 1 -> 2 -> 1 in Z_3 under addition.)
  std::vector<char> seen(static_cast<size_t>(order()), 0);
  int y = x;
  while (!seen[static_cast<size_t>(y)]) {
    seen[static_cast<size_t>(y)] = 1;
    y = op(y, y);
  }
  int z = y;
  while (op(z, z) != z) z = op(z, y);
  return z;
}

bool FiniteSemigroup::idempotent_leq(int e0, int e1) const {
  if (!is_idempotent(e0) || !is_idempotent(e1))
    throw NotIdempotent("idempotent_leq requires idempotent arguments");
  return op(e0, e1) == e0 && op(e1, e0) == e0;
}

FiniteSemigroup FiniteSemigroup::cyclic_add(int n) {
  CayleyTable t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = (x + y) % n;
  return FiniteSemigroup(t);
}

FiniteSemigroup FiniteSemigroup::cyclic_mult(int n) {
  CayleyTable t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = (x * y) % n;
  return FiniteSemigroup(t);
}

FiniteSemigroup FiniteSemigroup::left_zero(int n) {
  CayleyTable t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = x;
  return FiniteSemigroup(t);
}

bool is_closed_carrier(const FiniteSemigroup& S, const std::vector<int>& carrier) {
  if (carrier.empty()) return false;
  std::vector<char> in(static_cast<size_t>(S.order()), 0);
  for (int x : carrier) {
    if (x < 0 || x >= S.order()) return false;
    in[static_cast<size_t>(x)] = 1;
  }
  for (int x : carrier)
    for (int y : carrier)
      if (!in[static_cast<size_t>(S.op(x, y))]) return false;
  return true;
}

SubSemigroup make_subsemigroup(const FiniteSemigroup& S, std::vector<int> carrier) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  if (!is_closed_carrier(S, carrier))
    throw PreconditionFailed("carrier is empty or not closed under the operation");
  return SubSemigroup{std::move(carrier)};
}

SubSemigroup full_subsemigroup(const FiniteSemigroup& S) {
  std::vector<int> all(static_cast<size_t>(S.order()));
  for (int i = 0; i < S.order(); ++i) all[static_cast<size_t>(i)] = i;
  return SubSemigroup{all};
}

std::vector<SubSemigroup> all_subsemigroups(const FiniteSemigroup& S) {
  std::vector<SubSemigroup> out;
  const int n = S.order();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> carrier;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) carrier.push_back(i);
    if (is_closed_carrier(S, carrier)) out.push_back(SubSemigroup{carrier});
  }
  return out;
}

bool sub_leq(const FiniteSemigroup& S, const SubSemigroup& A, const SubSemigroup& B) {
  std::vector<char> inA(static_cast<size_t>(S.order()), 0);
  for (int x : A.carrier) inA[static_cast<size_t>(x)] = 1;
  for (int a : A.carrier)
    for (int b : B.carrier)
      if (!inA[static_cast<size_t>(S.op(a, b))] || !inA[static_cast<size_t>(S.op(b, a))])
        return false;
  return true;
}

std::vector<int> minimal_idempotents(const FiniteSemigroup& S, const std::vector<int>& carrier) {
  std::vector<int> idems;
  for (int x : carrier)
    if (S.is_idempotent(x)) idems.push_back(x);
  std::vector<int> out;
  for (int e : idems) {
    bool minimal = true;
    for (int z : idems) {
      if (z != e && S.op(z, e) == z && S.op(e, z) == z) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(e);
  }
  return out;
}

std::vector<int> minimal_idempotents(const FiniteSemigroup& S) {
  return minimal_idempotents(S, full_subsemigroup(S).carrier);
}

namespace {

// Postcondition of minimal_lift for a concrete result.
std::string lift_postcondition(const FiniteSemigroup& S, const SubSemigroup& A, int b, int a) {
  if (!S.is_idempotent(a)) return "result not idempotent";
  if (std::find(A.carrier.begin(), A.carrier.end(), a) == A.carrier.end())
    return "result outside A";
  if (S.op(a, b) != a || S.op(b, a) != a) return "result not below b";
  for (int z : A.carrier)
    if (z != a && S.is_idempotent(z) && S.op(z, a) == z && S.op(a, z) == z)
      return "result not minimal in A (below: " + std::to_string(z) + ")";
  return {};
}

}  // namespace

int minimal_lift(const FiniteSemigroup& S, const SubSemigroup& A, const SubSemigroup& B, int b) {
  if (!is_closed_carrier(S, A.carrier) || !is_closed_carrier(S, B.carrier))
    throw PreconditionFailed("minimal_lift: carriers must be nonempty and closed");
  if (!sub_leq(S, A, B)) throw PreconditionFailed("minimal_lift: A <= B fails");
  bool b_in_B = std::find(B.carrier.begin(), B.carrier.end(), b) != B.carrier.end();
  if (!b_in_B || !S.is_idempotent(b))
    throw PreconditionFailed("minimal_lift: b must be an idempotent of B");

  // A+b is a subsemigroup of A.
  std::set<int> Ab;
  for (int x : A.carrier) Ab.insert(S.op(x, b));
  std::vector<int> Ab_carrier(Ab.begin(), Ab.end());

  // Every a in A+b already has a+b = a; the lemma's massaging step amounts
  // to keeping the minimal idempotents with b+a = a as well. b+A+b is a
  // subsemigroup of A+b all of whose idempotents qualify, so the scan
  // cannot come up empty.
  std::vector<int> candidates = minimal_idempotents(S, Ab_carrier);
  for (int a : candidates) {
    if (S.op(b, a) == a && S.op(a, b) == a) return a;
  }
  throw PreconditionFailed("minimal_lift: no minimal idempotent of A+b lies below b");
}

MinimalLiftScan scan_minimal_lift_exhaustive(int max_order, int jobs) {
  MinimalLiftScan total;
  for (int n = 1; n <= max_order; ++n) {
    std::uint64_t cells = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    std::uint64_t count = 1;
    for (std::uint64_t i = 0; i < cells; ++i) count *= static_cast<std::uint64_t>(n);

    const int nthreads = std::max(1, jobs);
    std::vector<MinimalLiftScan> partial(static_cast<size_t>(nthreads));
    std::vector<std::uint64_t> first_bad(static_cast<size_t>(nthreads), ~0ull);

    auto run = [&](int wid) {
      MinimalLiftScan& acc = partial[static_cast<size_t>(wid)];
      CayleyTable table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
      for (std::uint64_t idx = static_cast<std::uint64_t>(wid); idx < count;
           idx += static_cast<std::uint64_t>(nthreads)) {
        std::uint64_t v = idx;
        for (std::uint64_t i = 0; i < cells; ++i) {
          table[i / static_cast<std::uint64_t>(n)][i % static_cast<std::uint64_t>(n)] =
              static_cast<int>(v % static_cast<std::uint64_t>(n));
          v /= static_cast<std::uint64_t>(n);
        }
        ++acc.tables_scanned;
        if (associativity_violation(table)) continue;
        ++acc.associative_tables;
        FiniteSemigroup S(table);
        auto subs = all_subsemigroups(S);
        for (const auto& A : subs) {
          for (const auto& B : subs) {
            if (!sub_leq(S, A, B)) continue;
            for (int b : B.carrier) {
              if (!S.is_idempotent(b)) continue;
              ++acc.triples_checked;
              std::string err;
              try {
                int a = minimal_lift(S, A, B, b);
                err = lift_postcondition(S, A, b, a);
              } catch (const Error& e) {
                err = e.what();
              }
              if (!err.empty() && acc.ok) {
                acc.ok = false;
                acc.counterexample = "order " + std::to_string(n) + " table #" +
                                     std::to_string(idx) + ": " + err;
                first_bad[static_cast<size_t>(wid)] = idx;
              }
            }
          }
        }
      }
    };

    if (nthreads == 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < nthreads; ++w) pool.emplace_back(run, w);
      for (auto& t : pool) t.join();
    }
    std::uint64_t best = ~0ull;
    int best_w = -1;
    for (int w = 0; w < nthreads; ++w) {
      total.tables_scanned += partial[static_cast<size_t>(w)].tables_scanned;
      total.associative_tables += partial[static_cast<size_t>(w)].associative_tables;
      total.triples_checked += partial[static_cast<size_t>(w)].triples_checked;
      if (first_bad[static_cast<size_t>(w)] < best) {
        best = first_bad[static_cast<size_t>(w)];
        best_w = w;
      }
    }
    if (best_w >= 0 && total.ok) {
      total.ok = false;
      total.counterexample = partial[static_cast<size_t>(best_w)].counterexample;
    }
  }
  return total;
}

}  // namespace rwb
