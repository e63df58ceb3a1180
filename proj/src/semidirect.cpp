#include "sbgroups/semidirect.hpp"

#include <algorithm>
#include <string>

#include "sbgroups/error.hpp"

namespace sbg::semidirect {

using nt::mul_mod;

void require_admissible_modulus(u64 n) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  for (const auto& f : nt::factorize(n).factors) {
    if (f.prime % 3 != 1) {
      throw Error(ErrorKind::BadPrimeDivisor,
                  "prime " + std::to_string(f.prime) + " divides " + std::to_string(n) + " and is not 1 mod 3");
    }
  }
}

void require_character(u64 n, u64 d) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  if (n == 1) {
    if (d != 0) throw Error(ErrorKind::NotACubeRoot, "the only residue mod 1 is 0");
    return;
  }
  if (d >= n) throw Error(ErrorKind::NotACubeRoot, "residue " + std::to_string(d) + " not reduced mod " + std::to_string(n));
  if (nt::gcd(d, n) != 1) throw Error(ErrorKind::NotAUnit, std::to_string(d) + " is not a unit mod " + std::to_string(n));
  if (mul_mod(mul_mod(d, d, n), d, n) != 1) {
    throw Error(ErrorKind::NotACubeRoot, std::to_string(d) + "^3 != 1 mod " + std::to_string(n));
  }
}

ResidueCharacter::ResidueCharacter(u64 n, u64 d) : n_(n), d_(d) {
  require_admissible_modulus(n);
  require_character(n, d);
}

u64 ResidueCharacter::canonical_d() const { return canonical_character(n_, d_); }

bool is_balanced(u64 n, u64 d) {
  require_admissible_modulus(n);
  require_character(n, d);
  // The image of chi is mu_3, so each local composition is injective iff it is nontrivial.
  for (const auto& f : nt::factorize(n).factors) {
    if (d % f.value() == 1) return false;
  }
  return true;
}

SemidirectDescriptor describe(u64 n, u64 d) {
  return {n, d, is_balanced(n, d), canonical_character(n, d)};
}

std::vector<ResidueCharacter> all_balanced_characters(u64 n) {
  require_admissible_modulus(n);
  std::vector<ResidueCharacter> out;
  for (const auto& r : nt::cube_roots_of_unity(n)) {
    if (is_balanced(n, r.value())) out.emplace_back(n, r.value());
  }
  return out;
}

u64 canonical_character(u64 n, u64 d) {
  require_character(n, d);
  if (n == 1) return 0;
  return std::min(d, mul_mod(d, d, n));
}

NonBalancedDecomposition decompose_non_balanced(u64 n, u64 d) {
  require_admissible_modulus(n);
  require_character(n, d);
  u64 n2 = 1;
  for (const auto& f : nt::factorize(n).factors) {
    const u64 q = f.value();
    if (d % q == 1) n2 *= q;
  }
  const u64 n1 = n / n2;
  return {n1, n1 == 1 ? 0 : d % n1, n2};
}

std::vector<u64> isomorphism_classes_of_balanced(u64 n) {
  std::vector<u64> classes;
  for (const auto& chi : all_balanced_characters(n)) classes.push_back(chi.canonical_d());
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

}  // namespace sbg::semidirect
