#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "sbgroups/error.hpp"
#include "sbgroups/group_kernel.hpp"
#include "sbgroups/residue_arith.hpp"
#include "sbgroups/semidirect.hpp"

using namespace sbg;
using namespace sbg::group;

namespace {

// Checks every product, independent of how the map was found.
bool is_isomorphism_map(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Element>& map) {
  if (map.size() != g.order() || g.order() != h.order()) return false;
  std::vector<bool> hit(h.order(), false);
  for (Element m : map) {
    if (m >= h.order() || hit[m]) return false;
    hit[m] = true;
  }
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return false;
    }
  }
  return true;
}

std::size_t center_by_scan(const FiniteGroup& g) {
  std::size_t count = 0;
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    count += central;
  }
  return count;
}

// Invariant factors of Z/o_1 x ... x Z/o_k by merging prime-power parts.
std::vector<std::uint64_t> invariant_factors_of(const std::vector<std::uint64_t>& cyclic_orders) {
  std::map<std::uint64_t, std::vector<std::uint64_t>> parts;
  for (std::uint64_t o : cyclic_orders) {
    for (std::uint64_t p = 2; p <= o; ++p) {
      std::uint64_t q = 1;
      while (o % p == 0) {
        o /= p;
        q *= p;
      }
      if (q > 1) parts[p].push_back(q);
    }
  }
  std::size_t len = 0;
  for (auto& [p, qs] : parts) {
    std::sort(qs.rbegin(), qs.rend());
    len = std::max(len, qs.size());
  }
  std::vector<std::uint64_t> out(len, 1);
  for (auto& [p, qs] : parts) {
    for (std::size_t i = 0; i < qs.size(); ++i) out[i] *= qs[i];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// All subgroups of the given order generated by at most two elements.
std::set<Subgroup> two_generated_subgroups_of_order(const FiniteGroup& g, std::size_t order) {
  std::set<Subgroup> out;
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = a; b < g.order(); ++b) {
      auto s = generated_subgroup(g, {a, b});
      if (s.size() == order) out.insert(std::move(s));
    }
  }
  return out;
}

// Exponents e with c^-1 x c = x^e over all order-3 elements c and a fixed generator
// x of the unique subgroup of order n; distinguishes the balanced classes on n.
std::set<std::uint64_t> conjugation_exponents(const FiniteGroup& g, std::uint64_t n) {
  Element x = 0;
  for (Element a = 0; a < g.order(); ++a) {
    if (g.element_order(a) == n) {
      x = a;
      break;
    }
  }
  std::set<std::uint64_t> out;
  for (Element c = 0; c < g.order(); ++c) {
    if (g.element_order(c) != 3) continue;
    const Element conj = g.mul(g.mul(g.inverse(c), x), c);
    Element p = 0;
    for (std::uint64_t e = 0; e < n; ++e, p = g.mul(p, x)) {
      if (p == conj) out.insert(e);
    }
  }
  return out;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::BadCharacter;
}

}  // namespace

TEST_CASE("build_semidirect examples") {
  const auto g = build_semidirect(7, 3, 2);
  CHECK(g.order() == 21);
  CHECK_FALSE(is_abelian(g));
  const auto a = build_semidirect(13, 3, 1);
  CHECK(is_abelian(a));
  CHECK(is_isomorphic(a, direct_product(build_cyclic(3), build_cyclic(13))));
  const auto nb = build_semidirect(91, 3, testing::non_balanced_91());
  CHECK(center(nb).size() == 7);
  CHECK(center_by_scan(nb) == 7);
  CHECK(kind_of([] { build_semidirect(7, 3, 3); }) == ErrorKind::BadCharacter);
  CHECK(kind_of([] { build_semidirect(9, 3, 3); }) == ErrorKind::BadCharacter);
  CHECK(kind_of([] { build_semidirect(3000, 3, 1); }) == ErrorKind::TooLarge);
}

TEST_CASE("presentation law: |H| = 3n, <x> and <y> meet trivially, xy = yx^d") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    for (const auto& r : nt::cube_roots_of_unity(n)) {
      const std::uint64_t d = r.value();
      const auto g = build_semidirect(n, 3, d);
      REQUIRE(g.order() == 3 * n);
      const Element x = semidirect_x(n), y = semidirect_y(n);
      const auto gx = generated_subgroup(g, {x});
      const auto gy = generated_subgroup(g, {y});
      CHECK(gx.size() == n);
      CHECK(gy.size() == 3);
      std::vector<Element> meet;
      std::set_intersection(gx.begin(), gx.end(), gy.begin(), gy.end(), std::back_inserter(meet));
      CHECK(meet == std::vector<Element>{0});
      CHECK(g.mul(x, y) == g.mul(y, g.power(x, static_cast<long long>(d))));
      CHECK(generated_subgroup(g, {x, y}).size() == 3 * n);
    }
  }
}

TEST_CASE("semidirect product is abelian iff the character is trivial, n <= 300") {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    for (const auto& r : nt::cube_roots_of_unity(n)) {
      const auto g = build_semidirect(n, 3, r.value());
      CHECK(is_abelian(g) == (r.value() == 1 % n));
    }
  }
}

TEST_CASE("standard constructions") {
  CHECK(build_cyclic(1).order() == 1);
  const auto p = direct_product(build_cyclic(3), build_semidirect(7, 3, 2));
  CHECK(p.order() == 63);
  const auto e = elementary_abelian_3(2);
  CHECK(e.order() == 9);
  CHECK(element_orders(e) == std::map<std::size_t, std::size_t>{{1, 1}, {3, 8}});
  CHECK(elementary_abelian_3(0).order() == 1);
  CHECK(elementary_abelian_3(3).order() == 27);
  const auto h = build_heisenberg(3);
  CHECK_FALSE(is_abelian(h));
  CHECK(element_orders(h) == std::map<std::size_t, std::size_t>{{1, 1}, {3, 26}});
  CHECK(center(h).size() == 3);
}

TEST_CASE("table validation") {
  const auto g = build_semidirect(7, 3, 2);
  const auto round = FiniteGroup::from_table(g.table());
  CHECK(round.table() == g.table());
  CHECK(kind_of([] { FiniteGroup::from_table({}); }) == ErrorKind::MalformedTable);
  CHECK(kind_of([] { FiniteGroup::from_table({{0, 1}, {1, 1}}); }) == ErrorKind::MalformedTable);
  CHECK(kind_of([] { FiniteGroup::from_table({{0, 1}, {1, 2}}); }) == ErrorKind::MalformedTable);
  CHECK(kind_of([] { FiniteGroup::from_table({{1, 0}, {0, 1}}); }) == ErrorKind::MalformedTable);
  CHECK(kind_of([] { FiniteGroup::from_table({{0, 1}, {1}}); }) == ErrorKind::MalformedTable);
  // A Latin square with identity 0 that is not associative (order 5 loop).
  const std::vector<std::vector<Element>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(kind_of([&] { FiniteGroup::from_table(loop); }) == ErrorKind::MalformedTable);
}

TEST_CASE("element orders agree with repeated multiplication") {
  for (const auto& [name, g] : testing::group_corpus()) {
    if (g.order() > 200) continue;
    for (Element a = 1; a < g.order(); ++a) {
      std::size_t k = 1;
      for (Element x = a; x != 0; x = g.mul(x, a)) ++k;
      REQUIRE(g.element_order(a) == k);
      CHECK(g.mul(a, g.inverse(a)) == 0);
    }
  }
}

TEST_CASE("element orders, center and invariants of named groups") {
  const auto g = build_semidirect(7, 3, 2);
  CHECK(element_orders(g) == std::map<std::size_t, std::size_t>{{1, 1}, {3, 14}, {7, 6}});
  CHECK(abelian_invariants(build_cyclic(21)) == std::vector<std::uint64_t>{21});
  CHECK(abelian_invariants(build_cyclic(1)).empty());
  CHECK(abelian_invariants(elementary_abelian_3(3)) == std::vector<std::uint64_t>{3, 3, 3});
  CHECK(kind_of([&] { abelian_invariants(g); }) == ErrorKind::NotAbelian);
  for (const auto& [name, h] : testing::group_corpus()) {
    if (h.order() <= 200) CHECK_MESSAGE(center(h).size() == center_by_scan(h), name);
  }
}

TEST_CASE("abelian invariants agree with the prime-power merge on random products") {
  std::mt19937 rng(7);
  const std::vector<std::uint64_t> pool{1, 2, 3, 4, 5, 6, 8, 9, 10, 12};
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::uint64_t> orders;
    FiniteGroup g = build_cyclic(1);
    while (true) {
      const std::uint64_t o = pool[rng() % pool.size()];
      if (g.order() * o > 800) break;
      orders.push_back(o);
      g = direct_product(g, build_cyclic(o));
    }
    CHECK(abelian_invariants(g) == invariant_factors_of(orders));
  }
}

TEST_CASE("isomorphism examples") {
  const auto g72 = build_semidirect(7, 3, 2);
  const auto g74 = build_semidirect(7, 3, 4);
  const auto iso = find_isomorphism(g72, g74);
  REQUIRE(iso.has_value());
  CHECK(is_isomorphism_map(g72, g74, iso->mapping));
  CHECK_FALSE(is_isomorphic(build_cyclic(9), elementary_abelian_3(2)));
  CHECK_FALSE(is_isomorphic(build_heisenberg(3), build_semidirect(9, 3, 4)));
  CHECK_FALSE(is_isomorphic(build_cyclic(21), g72));
}

TEST_CASE("the two balanced classes on 91 give non-isomorphic groups") {
  const auto classes = semidirect::isomorphism_classes_of_balanced(91);
  REQUIRE(classes.size() == 2);
  const auto g1 = build_semidirect(91, 3, classes[0]);
  const auto g2 = build_semidirect(91, 3, classes[1]);
  CHECK_FALSE(is_isomorphic(g1, g2));
  // Independent invariant: the conjugation exponents on the normal mu_91.
  CHECK(conjugation_exponents(g1, 91) != conjugation_exponents(g2, 91));
  for (std::uint64_t d : classes) {
    const auto a = build_semidirect(91, 3, d);
    const auto b = build_semidirect(91, 3, d * d % 91);
    const auto iso = find_isomorphism(a, b);
    REQUIRE(iso.has_value());
    CHECK(is_isomorphism_map(a, b, iso->mapping));
  }
}

TEST_CASE("canonical classes match isomorphism classes for every admissible n <= 2000") {
  std::size_t moduli = 0;
  for (std::uint64_t n = 1; n <= 2000; n += 2) {
    bool admissible = true;
    for (const auto& f : nt::factorize(n).factors) admissible = admissible && f.prime % 3 == 1;
    if (!admissible) continue;
    ++moduli;
    std::vector<FiniteGroup> reps;
    for (const auto& chi : semidirect::all_balanced_characters(n)) {
      const auto g = build_semidirect(n, 3, chi.d());
      if (chi.d() == chi.canonical_d()) {
        reps.push_back(g);
      } else {
        const auto rep = build_semidirect(n, 3, chi.canonical_d());
        REQUIRE_MESSAGE(is_isomorphic(g, rep), "n=" << n << " d=" << chi.d());
      }
    }
    std::size_t k = nt::factorize(n).factors.size();
    CHECK(reps.size() == (k == 0 ? 1 : std::size_t{1} << (k - 1)));
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        REQUIRE_MESSAGE(!is_isomorphic(reps[i], reps[j]), "n=" << n);
      }
    }
  }
  CHECK(moduli > 100);
}

TEST_CASE("isomorphism is an equivalence relation on the corpus") {
  const auto corpus = testing::group_corpus();
  std::vector<std::vector<bool>> rel(corpus.size(), std::vector<bool>(corpus.size()));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      if (corpus[i].group.order() != corpus[j].group.order()) continue;
      const auto iso = find_isomorphism(corpus[i].group, corpus[j].group);
      rel[i][j] = iso.has_value();
      if (iso && corpus[i].group.order() <= 300) {
        CHECK(is_isomorphism_map(corpus[i].group, corpus[j].group, iso->mapping));
      }
    }
    CHECK(rel[i][i]);
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      CHECK(rel[i][j] == rel[j][i]);
      for (std::size_t k = 0; k < corpus.size(); ++k) {
        if (rel[i][j] && rel[j][k]) CHECK(rel[i][k]);
      }
    }
  }
}

TEST_CASE("isomorphism search finds relabelled copies") {
  std::mt19937 rng(99);
  for (const auto& [name, g] : testing::group_corpus()) {
    if (g.order() > 200) continue;
    // Random relabelling fixing the identity.
    std::vector<Element> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    std::vector<Element> inv(g.order());
    for (Element a = 0; a < g.order(); ++a) inv[perm[a]] = a;
    std::vector<std::vector<Element>> rows(g.order(), std::vector<Element>(g.order()));
    for (Element a = 0; a < g.order(); ++a) {
      for (Element b = 0; b < g.order(); ++b) rows[a][b] = perm[g.mul(inv[a], inv[b])];
    }
    const auto h = FiniteGroup::from_table(rows);
    const auto iso = find_isomorphism(g, h);
    REQUIRE_MESSAGE(iso.has_value(), name);
    CHECK(is_isomorphism_map(g, h, iso->mapping));
  }
}

TEST_CASE("normal abelian index-3 subgroups") {
  const auto g = build_semidirect(7, 3, 2);
  const auto subs = normal_abelian_index3_subgroups(g);
  REQUIRE(subs.size() == 1);
  CHECK(subs[0].size() == 7);
  CHECK(normal_abelian_index3_subgroups(elementary_abelian_3(2)).size() == 4);
  CHECK(normal_abelian_index3_subgroups(build_cyclic(7)).empty());
  CHECK(normal_abelian_index3_subgroups(build_heisenberg(3)).size() == 4);
}

TEST_CASE("normal abelian index-3 subgroups agree with a subgroup scan") {
  for (const auto& [name, g] : testing::group_corpus()) {
    if (g.order() % 3 != 0 || g.order() > 81) continue;
    std::set<Subgroup> expected;
    for (const auto& s : two_generated_subgroups_of_order(g, g.order() / 3)) {
      bool abelian = true;
      for (Element a : s) {
        for (Element b : s) abelian = abelian && g.mul(a, b) == g.mul(b, a);
      }
      if (abelian && is_normal(g, s)) expected.insert(s);
    }
    const auto found = normal_abelian_index3_subgroups(g);
    CHECK_MESSAGE(std::set<Subgroup>(found.begin(), found.end()) == expected, name);
  }
}

TEST_CASE("split_over") {
  const auto g = build_semidirect(7, 3, 2);
  const auto h = generated_subgroup(g, {semidirect_x(7)});
  const auto c = split_over(g, h);
  CHECK(c.generator == semidirect_y(7));
  CHECK(c.subgroup.size() == 3);
  const auto c9 = build_cyclic(9);
  CHECK(kind_of([&] { split_over(c9, generated_subgroup(c9, {3})); }) == ErrorKind::NoSplit);
  const auto e = elementary_abelian_3(2);
  const auto first = generated_subgroup(e, {3});
  const auto comp = split_over(e, first);
  CHECK(comp.subgroup == generated_subgroup(e, {1}));
}

TEST_CASE("every corpus group without elements of order 9 splits over each normal index-3 subgroup") {
  std::size_t splits = 0;
  for (const auto& [name, g] : testing::group_corpus()) {
    const auto orders = element_orders(g);
    const bool has_order_9 = std::any_of(orders.begin(), orders.end(), [](auto& kv) { return kv.first % 9 == 0; });
    for (const auto& h : normal_abelian_index3_subgroups(g)) {
      if (has_order_9) continue;
      const auto c = split_over(g, h);
      std::vector<Element> meet;
      std::set_intersection(c.subgroup.begin(), c.subgroup.end(), h.begin(), h.end(), std::back_inserter(meet));
      CHECK(c.subgroup.size() == 3);
      CHECK(meet == std::vector<Element>{0});
      ++splits;
    }
  }
  CHECK(splits > 10);
}

TEST_CASE("derived subgroup") {
  CHECK(derived_subgroup(build_semidirect(7, 3, 2)).size() == 7);
  CHECK(derived_subgroup(build_heisenberg(3)).size() == 3);
  CHECK(derived_subgroup(build_cyclic(12)).size() == 1);
}
