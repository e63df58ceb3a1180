#pragma once

// Finite groups given by explicit multiplication tables. Element 0 is always
// the identity. Tables are stored compactly; orders are capped at kMaxOrder.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace sbg::group {

using Element = std::uint32_t;

// Large enough for mu_3 x (mu_n x| mu_3) with n up to 2000 and for the
// order-6000 products met in isomorphism sweeps; a full table at this size is 72 MB.
inline constexpr std::size_t kMaxOrder = 6144;

class FiniteGroup {
 public:
  /// Validates range, identity at 0, Latin-square rows/columns and associativity.
  /// Throws MalformedTable on any failure, TooLarge above kMaxOrder.
  static FiniteGroup from_table(const std::vector<std::vector<Element>>& table);
  /// Builds from a row-major table already known to be a group (internal constructions).
  static FiniteGroup from_trusted(std::size_t order, std::vector<std::uint16_t> table);

  std::size_t order() const { return order_; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element power(Element a, long long k) const;
  /// Precomputed, so O(1).
  std::size_t element_order(Element a) const { return orders_[a]; }
  const std::vector<std::uint32_t>& orders() const { return orders_; }
  std::vector<std::vector<Element>> table() const;

 private:
  FiniteGroup(std::size_t order, std::vector<std::uint16_t> table);

  std::size_t order_;
  std::vector<std::uint16_t> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> orders_;
};

/// A handle pairing an element id with its group.
struct GroupElement {
  const FiniteGroup* group;
  Element id;

  GroupElement operator*(const GroupElement& other) const { return {group, group->mul(id, other.id)}; }
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.group == b.group && a.id == b.id; }
};

/// Sorted element ids of a subgroup.
using Subgroup = std::vector<Element>;

/// Pairs (r mod m, s mod n) with id r*n + s and product
/// (r1,s1)(r2,s2) = (r1 + r2, s1*d^{r2} + s2). x = (0,1), y = (1,0) satisfy xy = yx^d.
/// Throws BadCharacter unless gcd(d, n) = 1 and d^m = 1 mod n.
FiniteGroup build_semidirect(std::uint64_t n, std::uint64_t m, std::uint64_t d);
inline constexpr Element semidirect_x(std::uint64_t n) { return n == 1 ? 0 : 1; }
inline constexpr Element semidirect_y(std::uint64_t n) { return static_cast<Element>(n); }

FiniteGroup build_cyclic(std::uint64_t n);
/// Element (g, h) has id g*|H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
FiniteGroup elementary_abelian_3(unsigned k);
/// Upper unitriangular 3x3 matrices over F_p, order p^3; (a,b,c) has id a*p*p + b*p + c
/// and product (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
FiniteGroup build_heisenberg(std::uint64_t p);

bool is_abelian(const FiniteGroup& g);
/// Order -> number of elements of that order.
std::map<std::size_t, std::size_t> element_orders(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens);
Subgroup derived_subgroup(const FiniteGroup& g);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
/// Greedy generating set: repeatedly the lowest id of maximal order outside the span so far.
std::vector<Element> generating_set(const FiniteGroup& g);
/// Invariant factors d_1 | d_2 | ... | d_k, each > 1. Throws NotAbelian.
std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& g);

/// Images of the generating_set(g) elements under an isomorphism g -> h, if one exists.
struct Isomorphism {
  std::vector<Element> generators;
  std::vector<Element> images;
  std::vector<Element> mapping;  // mapping[a] = image of a
};
std::optional<Isomorphism> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);
bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

std::vector<Subgroup> normal_abelian_index3_subgroups(const FiniteGroup& g);

struct Complement {
  Element generator;
  Subgroup subgroup;
};
/// Complement of order 3 to a normal subgroup of index 3. Throws NoSplit when every
/// element outside h has order divisible by 9.
Complement split_over(const FiniteGroup& g, const Subgroup& h);

}  // namespace sbg::group
