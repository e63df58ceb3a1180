#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "sbgroups/classifier.hpp"
#include "sbgroups/error.hpp"
#include "sbgroups/semidirect.hpp"

using namespace sbg;
using namespace sbg::classifier;
using group::build_cyclic;
using group::build_semidirect;
using group::direct_product;

namespace {

bool admissible_by_division(u64 n) {
  if (n % 9 == 0) return false;
  for (u64 p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    bool prime = true;
    for (u64 q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
    if (prime && p % 3 == 2) return false;
  }
  return true;
}

Witness w(WitnessKind k, u64 n = 0, u64 d = 0) { return {k, n, d}; }

}  // namespace

TEST_CASE("admissible orders") {
  auto v = admissible_order(21);
  CHECK(v.admissible);
  v = admissible_order(9);
  CHECK_FALSE(v.admissible);
  CHECK(v.obstruction == OrderObstruction::DivisibleBy9);
  CHECK(admissible_order(1).admissible);
  v = admissible_order(14);
  CHECK(v.obstruction == OrderObstruction::BadPrime);
  CHECK(v.prime == 2);
  for (u64 n = 1; n <= 3000; ++n) CHECK(admissible_order(n).admissible == admissible_by_division(n));
  CHECK(enumerate_admissible_orders(25) == std::vector<u64>{1, 3, 7, 13, 19, 21});
  CHECK(enumerate_admissible_orders(0).empty());
}

TEST_CASE("classify_group on named groups") {
  auto c = classify_group(build_semidirect(7, 3, 2));
  CHECK(c.verdict == Verdict::AutRealizable);
  CHECK(c.witness == w(WitnessKind::Balanced, 7, 2));
  c = classify_group(group::elementary_abelian_3(3));
  CHECK(c.verdict == Verdict::BirOnlyRealizable);
  CHECK(c.witness == w(WitnessKind::Mu3Cubed));
  c = classify_group(build_cyclic(9));
  CHECK(c.verdict == Verdict::NotRealizable);
  CHECK(c.obstruction == Obstruction::ElementOfOrder9);
  c = classify_group(direct_product(build_cyclic(3), build_semidirect(7, 3, 4)));
  CHECK(c.witness == w(WitnessKind::Mu3TimesBalanced, 7, 2));
  c = classify_group(build_semidirect(91, 3, testing::non_balanced_91()));
  CHECK(c.verdict == Verdict::NotRealizable);
  CHECK(c.obstruction == Obstruction::UnbalancedAction);
  c = classify_group(group::build_heisenberg(3));
  CHECK(c.verdict == Verdict::NotRealizable);
  CHECK(c.obstruction == Obstruction::NonCyclicNormalSubgroup);
  c = classify_group(build_cyclic(2));
  CHECK(c.obstruction == Obstruction::BadPrime);
  CHECK(c.prime == 2);
  CHECK(classify_group(build_cyclic(1)).witness == w(WitnessKind::Cyclic, 1));
  CHECK(classify_group(build_cyclic(21)).witness == w(WitnessKind::Cyclic3n, 7));
  CHECK(classify_group(group::elementary_abelian_3(2)).witness == w(WitnessKind::Mu3TimesBalanced, 1, 0));
  CHECK(classify_group(direct_product(build_cyclic(3), build_cyclic(21))).obstruction == Obstruction::NonCyclicAbelian);
  CHECK(classify_group(direct_product(build_cyclic(7), build_semidirect(7, 3, 2))).obstruction ==
        Obstruction::NonCyclicNormalSubgroup);
}

TEST_CASE("classify_descriptor examples") {
  auto c = classify_descriptor({Descriptor::Kind::Cyclic, 21});
  CHECK(c.verdict == Verdict::AutRealizable);
  CHECK(c.witness == w(WitnessKind::Cyclic3n, 7));
  c = classify_descriptor({Descriptor::Kind::Mu3k, 1, 0, 3});
  CHECK(c.verdict == Verdict::BirOnlyRealizable);
  c = classify_descriptor({Descriptor::Kind::Semidirect, 7, 4});
  CHECK(c.witness == w(WitnessKind::Balanced, 7, 2));
  auto malformed = [](Descriptor d) {
    try {
      classify_descriptor(d);
    } catch (const Error& e) {
      return e.kind() == ErrorKind::MalformedDescriptor;
    }
    return false;
  };
  CHECK(malformed({Descriptor::Kind::Cyclic, 0}));
  CHECK(malformed({Descriptor::Kind::Semidirect, 7, 3}));
  CHECK(malformed({Descriptor::Kind::Semidirect, 1, 1}));
  CHECK(malformed({Descriptor::Kind::Mu3k, 1, 0, 4}));
}

TEST_CASE("descriptor fast path agrees with the table classifier on every descriptor of order <= 400") {
  std::vector<Descriptor> corpus;
  for (u64 n = 1; n <= 400; ++n) corpus.push_back({Descriptor::Kind::Cyclic, n});
  for (unsigned k = 0; k <= 3; ++k) corpus.push_back({Descriptor::Kind::Mu3k, 1, 0, k});
  for (u64 n = 1; 3 * n <= 400; ++n) {
    for (const auto& r : nt::cube_roots_of_unity(n)) corpus.push_back({Descriptor::Kind::Semidirect, n, r.value()});
  }
  for (u64 n = 1; 9 * n <= 400; ++n) {
    for (const auto& r : nt::cube_roots_of_unity(n)) {
      corpus.push_back({Descriptor::Kind::Mu3TimesSemidirect, n, r.value()});
    }
  }
  for (const auto& desc : corpus) {
    const auto fast = classify_descriptor(desc);
    const auto slow = classify_group(realize(desc));
    REQUIRE_MESSAGE(fast == slow, "kind=" << static_cast<int>(desc.kind) << " n=" << desc.n << " d=" << desc.d
                                          << " k=" << desc.k);
  }
}

TEST_CASE("witnesses realize groups isomorphic to the classified group") {
  for (const auto& [name, g] : testing::group_corpus()) {
    const auto c = classify_group(g);
    if (c.verdict == Verdict::NotRealizable) continue;
    REQUIRE(c.witness.has_value());
    const auto r = realize(*c.witness);
    CHECK_MESSAGE(group::is_isomorphic(g, r), name);
    if (c.witness->kind == WitnessKind::Balanced || c.witness->kind == WitnessKind::Mu3TimesBalanced) {
      CHECK(semidirect::is_balanced(c.witness->n, c.witness->d));
    }
  }
}

TEST_CASE("enumeration of automorphism-realizable groups up to order 63 matches the hand-derived list") {
  const std::vector<Witness> expected{
      w(WitnessKind::Cyclic, 1),        w(WitnessKind::Cyclic3n, 1),        w(WitnessKind::Cyclic, 7),
      w(WitnessKind::Mu3TimesBalanced, 1, 0), w(WitnessKind::Cyclic, 13),  w(WitnessKind::Cyclic, 19),
      w(WitnessKind::Cyclic3n, 7),      w(WitnessKind::Balanced, 7, 2),     w(WitnessKind::Cyclic, 31),
      w(WitnessKind::Cyclic, 37),       w(WitnessKind::Cyclic3n, 13),       w(WitnessKind::Balanced, 13, 3),
      w(WitnessKind::Cyclic, 43),       w(WitnessKind::Cyclic, 49),         w(WitnessKind::Cyclic3n, 19),
      w(WitnessKind::Balanced, 19, 7),  w(WitnessKind::Cyclic, 61),         w(WitnessKind::Mu3TimesBalanced, 7, 2),
  };
  CHECK(enumerate_aut_groups(63) == expected);
}

TEST_CASE("enumerated witnesses are pairwise non-isomorphic and classify as themselves") {
  const auto all = enumerate_aut_groups(400);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto g = realize(all[i]);
    const auto c = classify_group(g);
    CHECK(c.verdict == Verdict::AutRealizable);
    CHECK(c.witness == all[i]);
    for (std::size_t j = i + 1; j < all.size() && all[j].group_order() == all[i].group_order(); ++j) {
      CHECK_FALSE(group::is_isomorphic(g, realize(all[j])));
    }
  }
}

TEST_CASE("completeness on cyclic combinations of order <= 100") {
  // Products mu_a x (mu_b x| mu_c) for primes and small prime powers; every group
  // that does not match a realizable witness must be rejected.
  std::vector<group::FiniteGroup> groups;
  for (u64 a = 1; a <= 100; ++a) {
    for (u64 b = 1; a * b <= 100; ++b) {
      for (u64 c : {1ULL, 2ULL, 3ULL}) {
        if (a * b * c > 100) continue;
        for (u64 d = 1; d < std::max<u64>(b, 2); ++d) {
          if (b > 1 && (nt::gcd(d, b) != 1 || nt::pow_mod(d, c, b) != 1)) continue;
          if (b == 1 && d != 1) continue;
          groups.push_back(direct_product(build_cyclic(a), build_semidirect(b, c, b == 1 ? 0 : d)));
        }
      }
    }
  }
  groups.push_back(group::build_heisenberg(3));
  groups.push_back(group::elementary_abelian_3(3));
  std::size_t rejected = 0;
  for (const auto& g : groups) {
    const auto c = classify_group(g);
    const auto candidates = enumerate_aut_groups(g.order());
    bool matches = false;
    for (const auto& cand : candidates) {
      if (cand.group_order() == g.order() && group::is_isomorphic(g, realize(cand))) matches = true;
    }
    if (matches) {
      CHECK(c.verdict == Verdict::AutRealizable);
    } else if (group::is_isomorphic(g, group::elementary_abelian_3(3))) {
      CHECK(c.verdict == Verdict::BirOnlyRealizable);
    } else {
      CHECK(c.verdict == Verdict::NotRealizable);
      ++rejected;
    }
  }
  CHECK(rejected > 50);
}

TEST_CASE("classification over Q") {
  CHECK(classify_over_Q(group::elementary_abelian_3(2)));
  CHECK_FALSE(classify_over_Q(build_semidirect(7, 3, 2)));
  CHECK(classify_over_Q(build_cyclic(1)));
  CHECK_FALSE(classify_over_Q(build_cyclic(9)));
  CHECK_FALSE(classify_over_Q(group::build_heisenberg(3)));
  for (const auto& [name, g] : testing::group_corpus()) {
    if (classify_over_Q(g)) {
      const auto c = classify_group(g);
      CHECK(c.verdict != Verdict::NotRealizable);
      CHECK(c.verdict == (g.order() == 27 ? Verdict::BirOnlyRealizable : Verdict::AutRealizable));
    }
  }
}
