#pragma once

// Homomorphisms mu_3 -> (Z/n)^* and the semidirect products mu_n x| mu_3 they
// define. A character is stored through the image d of a fixed generator.

#include <compare>
#include <cstdint>
#include <vector>

#include "sbgroups/residue_arith.hpp"

namespace sbg::semidirect {

using nt::u64;

/// chi: mu_3 -> (Z/n)^*, generator |-> d. Invariants: d^3 = 1 mod n, gcd(d, n) = 1,
/// every prime divisor of n is 1 mod 3. For n = 1 the only character is d = 0.
class ResidueCharacter {
 public:
  ResidueCharacter(u64 n, u64 d);

  u64 n() const { return n_; }
  u64 d() const { return d_; }
  /// min(d, d^2 mod n): the same subgroup of (Z/n)^* under the other generator of mu_3.
  u64 canonical_d() const;
  bool is_trivial() const { return n_ == 1 || d_ == 1; }

  friend bool operator==(const ResidueCharacter& a, const ResidueCharacter& b) {
    return a.n_ == b.n_ && a.canonical_d() == b.canonical_d();
  }

 private:
  u64 n_;
  u64 d_;
};

struct SemidirectDescriptor {
  u64 n;
  u64 d;
  bool balanced;
  u64 canonical_d;
};

/// G = (mu_{n1} x| mu_3) x mu_{n2} with the first factor balanced.
struct NonBalancedDecomposition {
  u64 n1;
  u64 d1;
  u64 n2;
};

/// Throws BadPrimeDivisor unless every prime divisor of n is 1 mod 3.
void require_admissible_modulus(u64 n);
/// Throws NotACubeRoot / NotAUnit when d does not define a character mod n.
void require_character(u64 n, u64 d);

bool is_balanced(u64 n, u64 d);
SemidirectDescriptor describe(u64 n, u64 d);
std::vector<ResidueCharacter> all_balanced_characters(u64 n);
u64 canonical_character(u64 n, u64 d);
NonBalancedDecomposition decompose_non_balanced(u64 n, u64 d);
/// Sorted canonical representatives of the balanced characters on n.
std::vector<u64> isomorphism_classes_of_balanced(u64 n);

}  // namespace sbg::semidirect
