#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "sbgroups/error.hpp"
#include "sbgroups/semidirect.hpp"

using namespace sbg;
using namespace sbg::semidirect;
using nt::u64;

namespace {

bool admissible_modulus(u64 n) {
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      if (p % 3 != 1) return false;
      while (n % p == 0) n /= p;
    }
  }
  return n == 1 || n % 3 == 1;
}

u64 distinct_prime_count(u64 n) {
  u64 k = 0;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ++k;
      while (n % p == 0) n /= p;
    }
  }
  return k + (n > 1);
}

std::vector<u64> brute_cube_roots(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d < n; ++d) {
    if (d * d % n * d % n == 1) out.push_back(d);
  }
  return out;
}

// d with d = 1 mod 7 and d of order 3 mod 13.
u64 example_non_balanced_91() {
  for (u64 d : brute_cube_roots(91)) {
    if (d % 7 == 1 && d % 13 != 1) return d;
  }
  return 0;
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

TEST_CASE("is_balanced examples") {
  CHECK(is_balanced(7, 2));
  CHECK(is_balanced(1, 0));
  CHECK_FALSE(is_balanced(91, example_non_balanced_91()));
  CHECK_FALSE(is_balanced(7, 1));
  CHECK(kind_of([] { is_balanced(35, 1); }) == ErrorKind::BadPrimeDivisor);
  CHECK(kind_of([] { is_balanced(21, 1); }) == ErrorKind::BadPrimeDivisor);
  CHECK(kind_of([] { is_balanced(7, 3); }) == ErrorKind::NotACubeRoot);
}

TEST_CASE("all balanced characters") {
  auto ds = [](u64 n) {
    std::vector<u64> out;
    for (const auto& c : all_balanced_characters(n)) out.push_back(c.d());
    return out;
  };
  CHECK(ds(7) == std::vector<u64>{2, 4});
  CHECK(ds(1) == std::vector<u64>{0});
  CHECK(ds(91).size() == 4);
  for (u64 n = 1; n <= 3000; n += 2) {
    if (!admissible_modulus(n)) continue;
    CHECK(all_balanced_characters(n).size() == (u64{1} << distinct_prime_count(n)));
  }
}

TEST_CASE("canonical character") {
  CHECK(canonical_character(7, 4) == 2);
  CHECK(canonical_character(7, 2) == 2);
  for (u64 n = 1; n <= 2000; n += 2) {
    if (!admissible_modulus(n)) continue;
    for (const auto& r : nt::cube_roots_of_unity(n)) {
      const u64 d = r.value();
      const u64 d2 = n == 1 ? 0 : d * d % n;
      const u64 c = canonical_character(n, d);
      CHECK(c == canonical_character(n, d2));
      CHECK(canonical_character(n, c) == c);
    }
  }
}

TEST_CASE("decompose_non_balanced") {
  const u64 d = example_non_balanced_91();
  auto dec = decompose_non_balanced(91, d);
  CHECK(dec.n1 == 13);
  CHECK(dec.n2 == 7);
  CHECK(is_balanced(dec.n1, dec.d1));
  dec = decompose_non_balanced(7, 2);
  CHECK(dec.n1 == 7);
  CHECK(dec.n2 == 1);
  for (const auto& c : all_balanced_characters(91)) {
    CHECK(decompose_non_balanced(91, c.d()).n1 == 91);
  }
  dec = decompose_non_balanced(91, 1);
  CHECK(dec.n1 == 1);
  CHECK(dec.d1 == 0);
  CHECK(dec.n2 == 91);
}

TEST_CASE("decomposition reassembles and its first part is balanced") {
  for (u64 n = 1; n <= 3000; n += 2) {
    if (!admissible_modulus(n)) continue;
    for (const auto& r : nt::cube_roots_of_unity(n)) {
      const u64 d = r.value();
      const auto dec = decompose_non_balanced(n, d);
      REQUIRE(dec.n1 * dec.n2 == n);
      CHECK(std::gcd(dec.n1, dec.n2) == 1);
      CHECK(is_balanced(dec.n1, dec.d1));
      // The character is trivial on the n2 part, so CRT of (d1, 1) recovers d.
      if (n > 1) CHECK(nt::crt({{dec.d1, dec.n1}, {1 % dec.n2, dec.n2}}) == d);
    }
  }
}

TEST_CASE("balanced iff the fixed subgroup is trivial, for every admissible n <= 5000") {
  std::size_t checked = 0;
  for (u64 n = 1; n <= 5000; ++n) {
    if (!admissible_modulus(n)) continue;
    for (const auto& r : nt::cube_roots_of_unity(n)) {
      // Independent oracle: t*d = t has only t = 0.
      bool only_zero = true;
      for (u64 t = 1; t < n && only_zero; ++t) only_zero = t * r.value() % n != t;
      REQUIRE(is_balanced(n, r.value()) == only_zero);
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("isomorphism class representatives") {
  CHECK(isomorphism_classes_of_balanced(7) == std::vector<u64>{2});
  CHECK(isomorphism_classes_of_balanced(91).size() == 2);
  CHECK(isomorphism_classes_of_balanced(1) == std::vector<u64>{0});
  CHECK(kind_of([] { isomorphism_classes_of_balanced(9); }) == ErrorKind::BadPrimeDivisor);
}

TEST_CASE("ResidueCharacter validates and compares by canonical form") {
  CHECK(ResidueCharacter(7, 2) == ResidueCharacter(7, 4));
  CHECK_FALSE(ResidueCharacter(7, 2) == ResidueCharacter(7, 1));
  CHECK(kind_of([] { ResidueCharacter(7, 3); }) == ErrorKind::NotACubeRoot);
  CHECK(kind_of([] { ResidueCharacter(91, 7); }) == ErrorKind::NotAUnit);
  CHECK(ResidueCharacter(1, 0).is_trivial());
}
