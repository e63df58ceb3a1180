#pragma once

// Exact arithmetic in Z/n and its unit group: factorization, CRT, cube roots
// of unity and the fixed subgroup of a residue character.

#include <cstdint>
#include <utility>
#include <vector>

namespace sbg::nt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct PrimePower {
  u64 prime;
  unsigned exponent;

  u64 value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod p_i^{r_i}, primes strictly increasing, every r_i >= 1.
struct Factorization {
  u64 n = 1;
  std::vector<PrimePower> factors;

  std::vector<u64> primes() const;
};

/// A local component (p^r, p^{r-1}(p-1)) of the unit group of Z/n.
struct LocalUnitGroup {
  u64 prime_power;
  u64 cyclic_order;
  friend bool operator==(const LocalUnitGroup&, const LocalUnitGroup&) = default;
};

struct UnitGroupStructure {
  u64 n = 1;
  std::vector<LocalUnitGroup> local_components;

  u64 order() const;
};

/// A canonical representative 0 <= value < modulus.
class Residue {
 public:
  Residue(u64 value, u64 modulus);

  u64 value() const { return value_; }
  u64 modulus() const { return modulus_; }

  friend bool operator==(const Residue&, const Residue&) = default;
  friend auto operator<=>(const Residue&, const Residue&) = default;

 private:
  u64 value_;
  u64 modulus_;
};

// Sweeps below this bound enumerate residues directly; above it they compose
// local answers through the Chinese remainder theorem.
inline constexpr u64 kBruteForceLimit = 1'000'000;

u64 gcd(u64 a, u64 b);
u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
/// Inverse of a modulo m; throws NotAUnit when gcd(a, m) != 1.
u64 inverse_mod(u64 a, u64 m);
/// Smallest x with x = r_i mod m_i for pairwise coprime moduli.
u64 crt(const std::vector<std::pair<u64, u64>>& residues_and_moduli);

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(u64 n);
Factorization factorize(u64 n);
u64 euler_phi(u64 n);
u64 carmichael_lambda(u64 n);

UnitGroupStructure unit_group_structure(u64 n);

std::vector<Residue> cube_roots_of_unity(u64 n);
std::vector<Residue> cube_roots_of_unity_brute_force(u64 n);
std::vector<Residue> cube_roots_of_unity_crt(u64 n);

/// Least k >= 1 with d^k = 1 mod n.
u64 multiplicative_order(u64 d, u64 n);

/// All t in [0, n) with t*d = t mod n. Requires d^3 = 1 mod n.
std::vector<Residue> fixed_subgroup_of_character(u64 n, u64 d);

}  // namespace sbg::nt
