#include <numeric>
#include <random>

#include "doctest.h"
#include "sbgroups/error.hpp"
#include "sbgroups/residue_arith.hpp"

using namespace sbg;
using namespace sbg::nt;

namespace {

std::vector<std::pair<u64, unsigned>> trial_division(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

u64 phi_by_counting(u64 n) {
  u64 count = 0;
  for (u64 k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

std::vector<u64> values(const std::vector<Residue>& rs) {
  std::vector<u64> out;
  for (const auto& r : rs) out.push_back(r.value());
  return out;
}

}  // namespace

TEST_CASE("factorize agrees with trial division") {
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(91).factors == std::vector<PrimePower>{{7, 1}, {13, 1}});
  CHECK(factorize(63).factors == std::vector<PrimePower>{{3, 2}, {7, 1}});
  for (u64 n = 1; n <= 20000; ++n) {
    const auto f = factorize(n);
    const auto expected = trial_division(n);
    REQUIRE(f.factors.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(f.factors[i].prime == expected[i].first);
      CHECK(f.factors[i].exponent == expected[i].second);
    }
  }
}

TEST_CASE("factorize handles large 64-bit inputs") {
  const u64 p = 4294967291ULL;  // largest prime below 2^32
  const u64 q = 4294967279ULL;
  const auto f = factorize(p * q);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].prime == q);
  CHECK(f.factors[1].prime == p);
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(18446744073709551615ULL));
  const auto g = factorize(18446744073709551615ULL);
  u64 product = 1;
  for (const auto& pp : g.factors) {
    CHECK(is_prime(pp.prime));
    product *= pp.value();
  }
  CHECK(product == 18446744073709551615ULL);
}

TEST_CASE("unit group structure") {
  CHECK(unit_group_structure(7).local_components == std::vector<LocalUnitGroup>{{7, 6}});
  CHECK(unit_group_structure(1).local_components.empty());
  CHECK(unit_group_structure(49).local_components == std::vector<LocalUnitGroup>{{49, 42}});
  try {
    unit_group_structure(14);
    FAIL("expected EvenModulus");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EvenModulus);
  }
  for (u64 n = 1; n <= 3001; n += 2) {
    CHECK(unit_group_structure(n).order() == phi_by_counting(n));
    CHECK(euler_phi(n) == phi_by_counting(n));
  }
}

TEST_CASE("cube roots of unity") {
  CHECK(values(cube_roots_of_unity(7)) == std::vector<u64>{1, 2, 4});
  CHECK(values(cube_roots_of_unity(5)) == std::vector<u64>{1});
  CHECK(values(cube_roots_of_unity(1)) == std::vector<u64>{0});
  CHECK(cube_roots_of_unity(91).size() == 9);
}

TEST_CASE("cube roots: CRT path agrees with brute force and the local count formula") {
  for (u64 n = 1; n <= 10001; n += 2) {
    const auto brute = cube_roots_of_unity_brute_force(n);
    REQUIRE(values(cube_roots_of_unity_crt(n)) == values(brute));
    u64 expected = 1;
    for (const auto& [p, e] : trial_division(n)) {
      if (p % 3 == 1 || (p == 3 && e >= 2)) expected *= 3;
    }
    CHECK(brute.size() == expected);
  }
}

TEST_CASE("cube roots: membership is decided locally") {
  for (u64 n : {91ULL, 273ULL, 819ULL, 1729ULL, 4459ULL}) {
    const auto fac = trial_division(n);
    const auto roots = values(cube_roots_of_unity(n));
    for (u64 d = 1; d < n; ++d) {
      bool local = std::gcd(d, n) == 1;
      for (const auto& [p, e] : fac) {
        u64 q = 1;
        for (unsigned i = 0; i < e; ++i) q *= p;
        local = local && pow_mod(d, 3, q) == 1;
      }
      CHECK(local == std::binary_search(roots.begin(), roots.end(), d));
    }
  }
}

TEST_CASE("cube roots above the brute-force limit use CRT") {
  const u64 n = 7ULL * 13 * 19 * 31 * 37 * 43;  // > 10^6
  const auto roots = cube_roots_of_unity(n);
  CHECK(roots.size() == 729);
  for (const auto& r : roots) CHECK(mul_mod(mul_mod(r.value(), r.value(), n), r.value(), n) == 1);
}

TEST_CASE("multiplicative order") {
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(3, 7) == 6);
  CHECK(multiplicative_order(1, 91) == 1);
  CHECK_THROWS_AS(multiplicative_order(7, 91), Error);
  for (u64 n = 2; n <= 400; ++n) {
    for (u64 d = 1; d < n; ++d) {
      if (std::gcd(d, n) != 1) continue;
      u64 k = 1, x = d % n;
      while (x != 1) {
        x = x * d % n;
        ++k;
      }
      REQUIRE(multiplicative_order(d, n) == k);
    }
  }
}

TEST_CASE("fixed subgroup of a character") {
  CHECK(values(fixed_subgroup_of_character(7, 2)) == std::vector<u64>{0});
  // d = 1 mod 7 with order 3 mod 13: the fixed part is 13 * Z/91.
  u64 d = 0;
  for (u64 c = 2; c < 91; ++c) {
    if (c % 7 == 1 && pow_mod(c, 3, 91) == 1) d = c;
  }
  REQUIRE(d != 0);
  const auto fixed = values(fixed_subgroup_of_character(91, d));
  CHECK(fixed.size() == 7);
  for (u64 t : fixed) CHECK(t % 13 == 0);
  CHECK(fixed_subgroup_of_character(12, 1).size() == 12);
  try {
    fixed_subgroup_of_character(7, 3);
    FAIL("expected NotACubeRoot");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotACubeRoot);
  }
}

TEST_CASE("fixed subgroup is a subgroup containing zero") {
  for (u64 n = 1; n <= 1500; n += 2) {
    for (const auto& r : cube_roots_of_unity(n)) {
      const auto fixed = values(fixed_subgroup_of_character(n, r.value()));
      REQUIRE(!fixed.empty());
      CHECK(fixed.front() == 0);
      CHECK(n % fixed.size() == 0);
      for (u64 a : fixed) {
        CHECK(std::binary_search(fixed.begin(), fixed.end(), (a + fixed[fixed.size() > 1 ? 1 : 0]) % n));
      }
    }
  }
}

TEST_CASE("fixed subgroup above the brute-force limit") {
  const u64 n = 7ULL * 13 * 19 * 31 * 37 * 43;
  const auto roots = cube_roots_of_unity(n);
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    const u64 d = roots[rng() % roots.size()].value();
    const auto fixed = fixed_subgroup_of_character(n, d);
    u64 expected = 1;
    for (u64 p : {7ULL, 13ULL, 19ULL, 31ULL, 37ULL, 43ULL}) {
      if (d % p == 1) expected *= p;
    }
    CHECK(fixed.size() == expected);
    for (const auto& t : fixed) CHECK(mul_mod(t.value(), d, n) == t.value());
  }
}

TEST_CASE("inverse and CRT") {
  CHECK(inverse_mod(3, 7) == 5);
  CHECK_THROWS_AS(inverse_mod(7, 91), Error);
  for (u64 a = 0; a < 7; ++a) {
    for (u64 b = 0; b < 13; ++b) {
      const u64 x = crt({{a, 7}, {b, 13}});
      CHECK(x < 91);
      CHECK(x % 7 == a);
      CHECK(x % 13 == b);
    }
  }
}
