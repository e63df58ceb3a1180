#include "sbgroups/classifier.hpp"

#include <algorithm>
#include <tuple>

#include "sbgroups/error.hpp"
#include "sbgroups/residue_arith.hpp"
#include "sbgroups/semidirect.hpp"

namespace sbg::classifier {

namespace {

bool bad_prime(u64 p) { return p % 3 == 2; }

std::optional<u64> smallest_bad_prime(u64 n) {
  for (const auto& f : nt::factorize(n).factors) {
    if (bad_prime(f.prime)) return f.prime;
  }
  return std::nullopt;
}

Classification realizable(Witness w) { return {Verdict::AutRealizable, w, Obstruction::None, 0}; }

Classification not_realizable(Obstruction o, u64 prime = 0) { return {Verdict::NotRealizable, std::nullopt, o, prime}; }

Classification cyclic(u64 m) {
  return m % 3 == 0 ? realizable({WitnessKind::Cyclic3n, m / 3, 0}) : realizable({WitnessKind::Cyclic, m, 0});
}

// mu_3^r x mu_m with 3 not dividing m and every prime of m admissible.
Classification abelian(unsigned three_rank, u64 m) {
  if (three_rank == 0) return realizable({WitnessKind::Cyclic, m, 0});
  if (three_rank == 1) return realizable({WitnessKind::Cyclic3n, m, 0});
  if (m == 1 && three_rank == 2) return realizable({WitnessKind::Mu3TimesBalanced, 1, 0});
  if (m == 1 && three_rank == 3) return {Verdict::BirOnlyRealizable, Witness{WitnessKind::Mu3Cubed}, Obstruction::None, 0};
  return not_realizable(Obstruction::NonCyclicAbelian);
}

// G = mu_3^extra x (mu_n x| mu_3) with a nontrivial character d on n, 3 not dividing n.
Classification non_abelian(unsigned extra, u64 n, u64 d) {
  if (extra >= 2) return not_realizable(Obstruction::NonCyclicNormalSubgroup);
  if (!semidirect::is_balanced(n, d)) return not_realizable(Obstruction::UnbalancedAction);
  const u64 c = semidirect::canonical_character(n, d);
  return realizable({extra == 0 ? WitnessKind::Balanced : WitnessKind::Mu3TimesBalanced, n, c});
}

}  // namespace

u64 Witness::group_order() const {
  switch (kind) {
    case WitnessKind::Cyclic: return n;
    case WitnessKind::Cyclic3n: return 3 * n;
    case WitnessKind::Balanced: return 3 * n;
    case WitnessKind::Mu3TimesBalanced: return 9 * n;
    case WitnessKind::Mu3Cubed: return 27;
  }
  return 0;
}

std::string_view to_string(OrderObstruction o) {
  switch (o) {
    case OrderObstruction::None: return "None";
    case OrderObstruction::DivisibleBy9: return "DivisibleBy9";
    case OrderObstruction::BadPrime: return "BadPrime";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::AutRealizable: return "AutRealizable";
    case Verdict::BirOnlyRealizable: return "BirOnlyRealizable";
    case Verdict::NotRealizable: return "NotRealizable";
  }
  return "?";
}

std::string_view to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::Cyclic: return "Cyclic";
    case WitnessKind::Cyclic3n: return "Cyclic3n";
    case WitnessKind::Balanced: return "Balanced";
    case WitnessKind::Mu3TimesBalanced: return "Mu3TimesBalanced";
    case WitnessKind::Mu3Cubed: return "Mu3Cubed";
  }
  return "?";
}

std::string_view to_string(Obstruction o) {
  switch (o) {
    case Obstruction::None: return "None";
    case Obstruction::ElementOfOrder9: return "ElementOfOrder9";
    case Obstruction::BadPrime: return "BadPrime";
    case Obstruction::NonCyclicAbelian: return "NonCyclicAbelian";
    case Obstruction::NoNormalAbelianIndex3Subgroup: return "NoNormalAbelianIndex3Subgroup";
    case Obstruction::NonCyclicNormalSubgroup: return "NonCyclicNormalSubgroup";
    case Obstruction::UnbalancedAction: return "UnbalancedAction";
  }
  return "?";
}

OrderVerdict admissible_order(u64 n) {
  if (n == 0) throw std::invalid_argument("admissible_order: n must be positive");
  if (n % 9 == 0) return {n, false, OrderObstruction::DivisibleBy9, 0};
  if (const auto p = smallest_bad_prime(n)) return {n, false, OrderObstruction::BadPrime, *p};
  return {n, true, OrderObstruction::None, 0};
}

Classification classify_group(const group::FiniteGroup& g) {
  using group::Element;
  for (auto o : g.orders()) {
    if (o % 9 == 0) return not_realizable(Obstruction::ElementOfOrder9);
  }
  if (const auto p = smallest_bad_prime(g.order())) return not_realizable(Obstruction::BadPrime, *p);

  if (group::is_abelian(g)) {
    const auto inv = group::abelian_invariants(g);
    if (inv.empty()) return cyclic(1);
    unsigned three_rank = 0;
    for (u64 f : inv) three_rank += f % 3 == 0;
    if (inv.size() == 1) return cyclic(inv[0]);
    // No element of order 9, so the 3-part is elementary abelian of rank three_rank.
    if (inv.size() == three_rank) {
      u64 m = inv.back() / 3;
      for (std::size_t i = 0; i + 1 < inv.size(); ++i) {
        if (inv[i] != 3) m = 0;
      }
      if (m != 0) return abelian(three_rank, m);
    }
    return not_realizable(Obstruction::NonCyclicAbelian);
  }

  const auto candidates = group::normal_abelian_index3_subgroups(g);
  if (candidates.empty()) return not_realizable(Obstruction::NoNormalAbelianIndex3Subgroup);
  for (const auto& h : candidates) {
    const u64 m = h.size();
    const auto gen = std::find_if(h.begin(), h.end(), [&](Element a) { return g.element_order(a) == m; });
    if (gen == h.end()) continue;
    const Element x = *gen;
    const Element y = group::split_over(g, h).generator;
    // y^-1 x y = x^d
    const Element conj = g.mul(g.mul(g.inverse(y), x), y);
    u64 d = 0;
    for (Element p = 0; p != conj; p = g.mul(p, x)) ++d;
    if (m % 3 == 0) {
      // The 3-part of H is mu_3 and is central; the action lives on mu_{m/3}.
      const u64 n = m / 3;
      return non_abelian(1, n, d % n);
    }
    return non_abelian(0, m, d % m);
  }
  return not_realizable(Obstruction::NonCyclicNormalSubgroup);
}

void validate(const Descriptor& desc) {
  auto bad = [](const std::string& why) { throw Error(ErrorKind::MalformedDescriptor, why); };
  switch (desc.kind) {
    case Descriptor::Kind::Cyclic:
      if (desc.n == 0) bad("cyclic: n must be positive");
      if (desc.n > group::kMaxOrder) bad("cyclic: n exceeds " + std::to_string(group::kMaxOrder));
      return;
    case Descriptor::Kind::Mu3k:
      if (desc.k > 3) bad("mu3k: k must be at most 3");
      return;
    case Descriptor::Kind::Semidirect:
    case Descriptor::Kind::Mu3TimesSemidirect: {
      const u64 factor = desc.kind == Descriptor::Kind::Semidirect ? 3 : 9;
      if (desc.n == 0) bad("semidirect: n must be positive");
      if (desc.n > group::kMaxOrder / factor) bad("semidirect: n exceeds the table cap");
      if (desc.n == 1 ? desc.d != 0
                      : desc.d >= desc.n || nt::gcd(desc.d, desc.n) != 1 || nt::pow_mod(desc.d, 3, desc.n) != 1) {
        bad("semidirect: d=" + std::to_string(desc.d) + " is not a cube root of unity mod " + std::to_string(desc.n));
      }
      return;
    }
  }
}

group::FiniteGroup realize(const Descriptor& desc) {
  validate(desc);
  switch (desc.kind) {
    case Descriptor::Kind::Cyclic: return group::build_cyclic(desc.n);
    case Descriptor::Kind::Mu3k: return group::elementary_abelian_3(desc.k);
    case Descriptor::Kind::Semidirect: return group::build_semidirect(desc.n, 3, desc.d);
    case Descriptor::Kind::Mu3TimesSemidirect:
      return group::direct_product(group::build_cyclic(3), group::build_semidirect(desc.n, 3, desc.d));
  }
  throw Error(ErrorKind::MalformedDescriptor, "unknown descriptor kind");
}

group::FiniteGroup realize(const Witness& w) {
  switch (w.kind) {
    case WitnessKind::Cyclic: return group::build_cyclic(w.n);
    case WitnessKind::Cyclic3n: return group::build_cyclic(3 * w.n);
    case WitnessKind::Balanced: return group::build_semidirect(w.n, 3, w.d);
    case WitnessKind::Mu3TimesBalanced:
      return group::direct_product(group::build_cyclic(3), group::build_semidirect(w.n, 3, w.d));
    case WitnessKind::Mu3Cubed: return group::elementary_abelian_3(3);
  }
  throw std::invalid_argument("unknown witness kind");
}

Classification classify_descriptor(const Descriptor& desc) {
  validate(desc);
  if (desc.kind == Descriptor::Kind::Mu3k) return abelian(desc.k, 1);
  if (desc.kind == Descriptor::Kind::Cyclic) {
    if (desc.n % 9 == 0) return not_realizable(Obstruction::ElementOfOrder9);
    if (const auto p = smallest_bad_prime(desc.n)) return not_realizable(Obstruction::BadPrime, *p);
    return cyclic(desc.n);
  }
  // mu_n x| mu_3, possibly times mu_3. Split n = 3^e * n' with 3 not dividing n'.
  const u64 n = desc.n;
  if (n % 9 == 0) return not_realizable(Obstruction::ElementOfOrder9);
  if (const auto p = smallest_bad_prime(n)) return not_realizable(Obstruction::BadPrime, *p);
  const unsigned e = n % 3 == 0 ? 1 : 0;
  const u64 n_prime = e ? n / 3 : n;
  // The character is trivial on mu_3 (Aut(mu_3) has order 2), so the 3-part of mu_n is central.
  const unsigned extra = e + (desc.kind == Descriptor::Kind::Mu3TimesSemidirect ? 1 : 0);
  const u64 d = n_prime == 1 ? 0 : desc.d % n_prime;
  if (d == 1 % n_prime) return abelian(extra + 1, n_prime);
  return non_abelian(extra, n_prime, d);
}

bool classify_over_Q(const group::FiniteGroup& g) {
  if (27 % g.order() != 0) return false;
  for (auto o : g.orders()) {
    if (3 % o != 0) return false;
  }
  return group::is_abelian(g);
}

std::vector<u64> enumerate_admissible_orders(u64 max) {
  std::vector<u64> out;
  for (u64 n = 1; n <= max; ++n) {
    if (admissible_order(n).admissible) out.push_back(n);
  }
  return out;
}

std::vector<Witness> enumerate_aut_groups(u64 max_order) {
  std::vector<Witness> out;
  for (u64 m : enumerate_admissible_orders(max_order)) {
    out.push_back(*cyclic(m).witness);
  }
  for (u64 n = 1; 3 * n <= max_order; ++n) {
    if (n % 3 == 0 || smallest_bad_prime(n)) continue;
    for (u64 d : semidirect::isomorphism_classes_of_balanced(n)) {
      // Balanced(1, trivial) is mu_3, already listed as Cyclic3n(1).
      if (n > 1) out.push_back({WitnessKind::Balanced, n, d});
      if (9 * n <= max_order) out.push_back({WitnessKind::Mu3TimesBalanced, n, d});
    }
  }
  std::sort(out.begin(), out.end(), [](const Witness& a, const Witness& b) {
    return std::tuple(a.group_order(), a.kind, a.n, a.d) < std::tuple(b.group_order(), b.kind, b.n, b.d);
  });
  return out;
}

}  // namespace sbg::classifier
