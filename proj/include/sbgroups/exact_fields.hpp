#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m), radical towers
// L = Q(zeta_m)[t]/(t^3 - c), and the automorphisms zeta -> zeta^d, t -> omega^e t.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sbg::field {

using Rational = mpq_class;
using u64 = std::uint64_t;

/// Q(zeta_m) as Q[x]/(Phi_m). Instances are shared and immutable.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(u64 conductor);

  u64 conductor() const { return m_; }
  std::size_t degree() const { return phi_.size() - 1; }
  /// Coefficients of Phi_m, lowest degree first, monic.
  const std::vector<Rational>& cyclotomic_polynomial() const { return phi_; }
  /// Reduced coordinates of zeta^k.
  const std::vector<Rational>& zeta_power(u64 k) const { return powers_[k % m_]; }
  bool has_omega() const { return m_ % 3 == 0; }

 private:
  explicit CyclotomicField(u64 conductor);

  u64 m_;
  std::vector<Rational> phi_;
  std::vector<std::vector<Rational>> powers_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// An element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
class Cyclotomic {
 public:
  Cyclotomic(FieldPtr field, const Rational& value);
  Cyclotomic(FieldPtr field, std::vector<Rational> coeffs);
  static Cyclotomic zeta(FieldPtr field, u64 k = 1);
  /// zeta_m^{m/3}; throws MissingOmega when 3 does not divide m.
  static Cyclotomic omega(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(const Rational& r) const;
  /// Throws DivisionByZero for zero.
  Cyclotomic inverse() const;
  Cyclotomic pow(long long k) const;
  /// zeta -> zeta^d; d must be coprime to m.
  Cyclotomic galois(u64 d) const;
  /// Image under Q(zeta_m) -> Q(zeta_M), zeta_m -> zeta_M^{M/m}; m must divide M.
  Cyclotomic embed(FieldPtr target) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string to_string(const std::string& var = "z") const;

 private:
  FieldPtr field_;
  std::vector<Rational> c_;
};

bool is_zero(const Cyclotomic& x);
Cyclotomic inverse(const Cyclotomic& x);

/// L = base[t]/(t^3 - c), or the base itself when no radicand is given.
class TowerField {
 public:
  static std::shared_ptr<const TowerField> make(FieldPtr base, std::optional<Rational> radicand = std::nullopt);

  const FieldPtr& base() const { return base_; }
  const std::optional<Rational>& radicand() const { return radicand_; }
  /// Degree over the base: 1 or 3.
  std::size_t degree() const { return radicand_ ? 3 : 1; }

 private:
  TowerField(FieldPtr base, std::optional<Rational> radicand) : base_(std::move(base)), radicand_(std::move(radicand)) {}

  FieldPtr base_;
  std::optional<Rational> radicand_;
};

using TowerPtr = std::shared_ptr<const TowerField>;

/// sigma: zeta -> zeta^d, t -> omega^twist t.
struct GaloisAction {
  u64 d;
  unsigned twist = 0;
};

/// a_0 + a_1 t + a_2 t^2 with a_i in the base field.
class TowerElement {
 public:
  TowerElement(TowerPtr field, const Rational& value);
  TowerElement(TowerPtr field, const Cyclotomic& value);
  TowerElement(TowerPtr field, std::vector<Cyclotomic> coeffs);
  /// The generator t; throws FieldMismatch when the tower has no radical layer.
  static TowerElement t(TowerPtr field);

  const TowerPtr& field() const { return field_; }
  const std::vector<Cyclotomic>& coeffs() const { return c_; }
  bool is_zero() const;
  /// True when the element lies in the base field.
  bool in_base() const;

  TowerElement operator+(const TowerElement& o) const;
  TowerElement operator-(const TowerElement& o) const;
  TowerElement operator-() const;
  TowerElement operator*(const TowerElement& o) const;
  /// Throws DivisionByZero for zero and ZeroDivisor when t^3 - c is reducible.
  TowerElement inverse() const;
  TowerElement pow(long long k) const;

  friend bool operator==(const TowerElement& a, const TowerElement& b);
  friend bool operator!=(const TowerElement& a, const TowerElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  TowerPtr field_;
  std::vector<Cyclotomic> c_;
};

bool is_zero(const TowerElement& x);
TowerElement inverse(const TowerElement& x);

/// Throws MissingOmega when twist != 0 and the base has no cube root of unity,
/// NotAUnit when d is not coprime to the conductor.
TowerElement apply_sigma(const TowerElement& x, const GaloisAction& sigma);
bool fixed_field_test(const TowerElement& x, const GaloisAction& sigma);
/// sigma^3 = id on the tower generators and sigma != id.
bool has_order_three(const TowerPtr& field, const GaloisAction& sigma);

/// A prime l = 1 mod lcm(3, m) such that c is not a cube mod l. Since l splits
/// completely in Q(zeta_m), such an l proves c is not a cube in Q(zeta_m), hence
/// t^3 - c is irreducible and 1, t, t^2 are independent over the base.
std::optional<u64> irreducibility_certificate(u64 conductor, const Rational& c, u64 search_limit = 1'000'000);

}  // namespace sbg::field
