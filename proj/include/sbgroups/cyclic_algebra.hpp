#pragma once

// Degree-3 cyclic algebras A = L + alpha L + alpha^2 L over the fixed field K of
// sigma, with alpha^3 = a and lambda alpha = alpha sigma(lambda), and finite
// subgroups of A* and A*/K* computed by closure.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sbgroups/closure.hpp"
#include "sbgroups/exact_fields.hpp"

namespace sbg::algebra {

using field::GaloisAction;
using field::Rational;
using field::TowerElement;
using field::TowerPtr;
using u64 = std::uint64_t;

class AlgebraElement;

class CyclicAlgebra {
 public:
  /// Throws BadCharacter unless sigma has order 3 on L, and when a is zero or not sigma-fixed.
  static std::shared_ptr<const CyclicAlgebra> make(TowerPtr l, GaloisAction sigma, TowerElement a);

  const TowerPtr& field() const { return l_; }
  const GaloisAction& sigma() const { return sigma_; }
  const TowerElement& a() const { return a_; }
  TowerElement sigma_power(const TowerElement& x, unsigned k) const;
  bool in_fixed_field(const TowerElement& x) const;
  /// Coordinates of x over K in the basis 1, beta, beta^2 for a fixed generator beta of L/K.
  std::vector<TowerElement> fixed_field_coordinates(const TowerElement& x) const;

 private:
  CyclicAlgebra(TowerPtr l, GaloisAction sigma, TowerElement a);

  TowerPtr l_;
  GaloisAction sigma_;
  TowerElement a_;
  std::vector<std::vector<TowerElement>> vandermonde_inverse_;
};

using AlgebraPtr = std::shared_ptr<const CyclicAlgebra>;

/// alpha^0 l_0 + alpha^1 l_1 + alpha^2 l_2. Coefficients sit to the right of the
/// powers of alpha, so lambda * alpha has l_1 = sigma(lambda).
class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr algebra, std::vector<TowerElement> components);
  /// The scalar lambda in L.
  AlgebraElement(AlgebraPtr algebra, const TowerElement& lambda);
  static AlgebraElement one(AlgebraPtr algebra);
  static AlgebraElement alpha(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<TowerElement>& components() const { return c_; }
  bool is_zero() const;
  /// True for elements of K: l_1 = l_2 = 0 and l_0 sigma-fixed.
  bool is_scalar() const;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  /// Throws DivisionByZero for zero and ZeroDivisor when left multiplication is singular.
  AlgebraElement inverse() const;
  AlgebraElement pow(long long k) const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  /// Exact serialization of every rational coordinate; equal elements give equal keys.
  std::string key() const;
  std::string to_string() const;

 private:
  AlgebraPtr algebra_;
  std::vector<TowerElement> c_;
};

/// The representative of x K* whose first nonzero coordinate over K equals 1.
AlgebraElement normalize(const AlgebraElement& x);
/// x y^{-1} lies in K.
bool same_class(const AlgebraElement& x, const AlgebraElement& y);
/// Least k >= 1 with x^k in K, or nullopt when none exists up to cap.
std::optional<u64> order_mod_scalars(const AlgebraElement& x, u64 cap = 10'000);

using GeneratedGroup = group::GeneratedGroup<AlgebraElement>;

/// Closure of the classes of gens in A*/K*. Throws CapExceeded past cap elements.
GeneratedGroup generated_group_mod_scalars(const std::vector<AlgebraElement>& gens, std::size_t cap = 5000);
/// Closure of gens in A* itself.
GeneratedGroup generated_group(const std::vector<AlgebraElement>& gens, std::size_t cap = 5000);

/// A Q-basis of the elements commuting with every element of gens.
std::vector<AlgebraElement> centralizer_over_Q(const std::vector<AlgebraElement>& gens);

struct Relation {
  std::string name;
  bool holds;
};

/// xi, alpha in the algebra over Q(zeta_n) with sigma: zeta -> zeta^d, and for the
/// mu_3 extension also tau = cube root of 2 with tau alpha = omega alpha tau.
struct Witness {
  AlgebraPtr algebra;
  u64 n;
  u64 d;
  AlgebraElement xi;
  AlgebraElement alpha;
  std::optional<AlgebraElement> tau;
  std::vector<Relation> relations;

  std::vector<AlgebraElement> generators() const;
};

/// Classes of xi and alpha generate mu_n x| mu_3 for a balanced character d.
/// For n = 1 the algebra is built over Q(omega)(cube root of 2) with sigma: t -> omega t.
/// Throws BadCharacter when d is not a nontrivial cube root of unity mod n (n > 1).
Witness semidirect_witness(u64 n, u64 d, const Rational& a = Rational(2));
/// Adds tau; the classes generate mu_3 x (mu_n x| mu_3).
Witness semidirect_times_mu3_witness(u64 n, u64 d, const Rational& a = Rational(2));

/// u = alpha and v = t over K = Q(omega), L = K(cube root of b), so u^3 = a, v^3 = b, uv = omega vu.
struct HeisenbergWitness {
  AlgebraPtr algebra;
  AlgebraElement u;
  AlgebraElement v;
  std::vector<Relation> relations;
};

HeisenbergWitness heisenberg_witness(const Rational& a = Rational(2), const Rational& b = Rational(3));

}  // namespace sbg::algebra
