#pragma once

// Which finite groups act by automorphisms (or only birationally) on some
// non-trivial Severi-Brauer surface: admissible orders, verdicts with
// structural witnesses, enumeration and the restriction over Q.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbgroups/group_kernel.hpp"

namespace sbg::classifier {

using u64 = std::uint64_t;

enum class OrderObstruction { None, DivisibleBy9, BadPrime };

struct OrderVerdict {
  u64 n;
  bool admissible;
  OrderObstruction obstruction;
  u64 prime = 0;  // set for BadPrime
};

enum class Verdict { AutRealizable, BirOnlyRealizable, NotRealizable };

enum class WitnessKind { Cyclic, Cyclic3n, Balanced, Mu3TimesBalanced, Mu3Cubed };

/// Cyclic(n) = mu_n with 3 not dividing n; Cyclic3n(n) = mu_{3n}; Balanced(n, d) =
/// mu_n x| mu_3; Mu3TimesBalanced(n, d) = mu_3 x (mu_n x| mu_3); Mu3Cubed = mu_3^3.
/// For Balanced and Mu3TimesBalanced, d is the canonical character.
struct Witness {
  WitnessKind kind;
  u64 n = 0;
  u64 d = 0;

  u64 group_order() const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Why a group is not realizable.
enum class Obstruction {
  None,
  ElementOfOrder9,
  BadPrime,
  NonCyclicAbelian,
  NoNormalAbelianIndex3Subgroup,
  NonCyclicNormalSubgroup,
  UnbalancedAction,
};

struct Classification {
  Verdict verdict;
  std::optional<Witness> witness;
  Obstruction obstruction = Obstruction::None;
  u64 prime = 0;  // set for BadPrime

  friend bool operator==(const Classification&, const Classification&) = default;
};

std::string_view to_string(OrderObstruction o);
std::string_view to_string(Verdict v);
std::string_view to_string(WitnessKind k);
std::string_view to_string(Obstruction o);

OrderVerdict admissible_order(u64 n);

/// Follows the structure theorem on the table: order-9 and bad-prime exclusions,
/// abelian invariant factors, then a cyclic normal abelian subgroup of index 3,
/// a complement of order 3 and the balancedness of its conjugation action.
Classification classify_group(const group::FiniteGroup& g);

/// Structured group descriptions accepted by the fast path.
struct Descriptor {
  enum class Kind { Cyclic, Semidirect, Mu3TimesSemidirect, Mu3k };
  Kind kind;
  u64 n = 1;
  u64 d = 0;
  unsigned k = 0;
};

/// Throws MalformedDescriptor for invalid parameters.
void validate(const Descriptor& desc);
group::FiniteGroup realize(const Descriptor& desc);
group::FiniteGroup realize(const Witness& w);
/// Agrees with classify_group(realize(desc)) without building a table.
Classification classify_descriptor(const Descriptor& desc);

/// True iff G is abelian of exponent dividing 3 and order dividing 27.
bool classify_over_Q(const group::FiniteGroup& g);

std::vector<u64> enumerate_admissible_orders(u64 max);
/// One witness per isomorphism class of automorphism-realizable groups of order <= max,
/// sorted by (order, kind, n, d).
std::vector<Witness> enumerate_aut_groups(u64 max_order);

}  // namespace sbg::classifier
