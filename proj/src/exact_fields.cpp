#include "sbgroups/exact_fields.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "sbgroups/error.hpp"
#include "sbgroups/residue_arith.hpp"

namespace sbg::field {

namespace {

using Poly = std::vector<Rational>;  // lowest degree first

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Quotient and remainder of a by a nonzero b.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (sgn(a[i]) == 0) continue;
    const Rational f = a[i] / lead;
    const std::size_t shift = i + 1 - b.size();
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
  }
  trim(a);
  return {q, a};
}

Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Poly subtract(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
Poly compute_cyclotomic_polynomial(u64 m) {
  Poly num(m + 1, Rational(0));
  num[0] = -1;
  num[m] = 1;
  for (u64 d = 1; d < m; ++d) {
    if (m % d == 0) num = divmod(num, compute_cyclotomic_polynomial(d)).first;
  }
  return num;
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a != b && a->conductor() != b->conductor()) {
    throw Error(ErrorKind::FieldMismatch, "conductors " + std::to_string(a->conductor()) + " and " +
                                              std::to_string(b->conductor()) + " differ");
  }
}

void require_same_tower(const TowerPtr& a, const TowerPtr& b) {
  if (a == b) return;
  require_same_field(a->base(), b->base());
  if (a->radicand() != b->radicand()) throw Error(ErrorKind::FieldMismatch, "towers have different radicands");
}

std::string rational_string(const Rational& r) { return r.get_str(); }

}  // namespace

CyclotomicField::CyclotomicField(u64 conductor) : m_(conductor), phi_(compute_cyclotomic_polynomial(conductor)) {
  const std::size_t deg = degree();
  powers_.reserve(m_);
  Poly p(deg, Rational(0));
  p[0] = 1;
  for (u64 k = 0; k < m_; ++k) {
    powers_.push_back(p);
    // p <- x * p mod Phi_m
    const Rational top = p[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) p[i] = p[i - 1];
    p[0] = 0;
    if (sgn(top) != 0) {
      for (std::size_t i = 0; i < deg; ++i) p[i] -= top * phi_[i];
    }
  }
}

FieldPtr CyclotomicField::get(u64 conductor) {
  if (conductor == 0) throw std::invalid_argument("conductor must be positive");
  static std::mutex mutex;
  static std::map<u64, FieldPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[conductor];
  if (!slot) slot = FieldPtr(new CyclotomicField(conductor));
  return slot;
}

Cyclotomic::Cyclotomic(FieldPtr field, const Rational& value)
    : field_(std::move(field)), c_(field_->degree(), Rational(0)) {
  c_[0] = value;
}

Cyclotomic::Cyclotomic(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  const std::size_t deg = field_->degree();
  if (c_.size() > deg) {
    // Reduce a longer polynomial in zeta.
    std::vector<Rational> reduced(deg, Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (sgn(c_[k]) == 0) continue;
      const auto& zk = field_->zeta_power(k);
      for (std::size_t i = 0; i < deg; ++i) reduced[i] += c_[k] * zk[i];
    }
    c_ = std::move(reduced);
  }
  c_.resize(deg, Rational(0));
}

Cyclotomic Cyclotomic::zeta(FieldPtr field, u64 k) {
  auto coeffs = field->zeta_power(k);
  return Cyclotomic(std::move(field), std::move(coeffs));
}

Cyclotomic Cyclotomic::omega(FieldPtr field) {
  if (!field->has_omega()) {
    throw Error(ErrorKind::MissingOmega, "Q(zeta_" + std::to_string(field->conductor()) + ") has no primitive cube root of unity");
  }
  const u64 k = field->conductor() / 3;
  return zeta(std::move(field), k);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0) return false;
  }
  return true;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  require_same_field(field_, o.field_);
  auto out = c_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.c_[i];
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  require_same_field(field_, o.field_);
  auto out = c_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= o.c_[i];
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::operator-() const {
  auto out = c_;
  for (auto& c : out) c = -c;
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  require_same_field(field_, o.field_);
  const std::size_t deg = c_.size();
  std::vector<Rational> prod(2 * deg - 1, Rational(0));
  bool any = false;
  for (std::size_t i = 0; i < deg; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (sgn(o.c_[j]) == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
      any = true;
    }
  }
  if (!any) return Cyclotomic(field_, Rational(0));
  return Cyclotomic(field_, std::move(prod));
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
  auto out = c_;
  for (auto& c : out) c *= r;
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const {
  std::size_t nonzero = 0, at = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0) {
      ++nonzero;
      at = i;
    }
  }
  if (nonzero == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(field_->conductor()) + ")");
  const u64 m = field_->conductor();
  if (nonzero == 1) return zeta(field_, (m - at % m) % m) * (1 / c_[at]);
  // Extended Euclid: track s with s * a = r mod Phi_m.
  Poly r0 = field_->cyclotomic_polynomial(), r1 = c_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly next = subtract(s0, multiply(q, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  // Phi_m is irreducible, so the gcd r0 is a nonzero constant.
  const Rational g = r0[0];
  for (auto& c : s0) c /= g;
  return Cyclotomic(field_, divmod(s0, field_->cyclotomic_polynomial()).second);
}

Cyclotomic Cyclotomic::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  Cyclotomic result(field_, Rational(1)), base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Cyclotomic Cyclotomic::galois(u64 d) const {
  const u64 m = field_->conductor();
  if (nt::gcd(d % m, m) != 1 && m != 1) {
    throw Error(ErrorKind::NotAUnit, std::to_string(d) + " is not coprime to the conductor " + std::to_string(m));
  }
  std::vector<Rational> out(c_.size(), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    const auto& z = field_->zeta_power(nt::mul_mod(i, d, m));
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += c_[i] * z[j];
  }
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::embed(FieldPtr target) const {
  const u64 m = field_->conductor(), big = target->conductor();
  if (big % m != 0) {
    throw Error(ErrorKind::FieldMismatch, std::to_string(m) + " does not divide " + std::to_string(big));
  }
  std::vector<Rational> out(target->degree(), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    const auto& z = target->zeta_power(i * (big / m));
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += c_[i] * z[j];
  }
  return Cyclotomic(std::move(target), std::move(out));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  require_same_field(a.field_, b.field_);
  return a.c_ == b.c_;
}

std::string Cyclotomic::to_string(const std::string& var) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    Rational c = c_[i];
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    c = abs(c);
    first = false;
    if (i == 0) {
      out << rational_string(c);
      continue;
    }
    if (c != 1) out << rational_string(c) << "*";
    out << var;
    if (i > 1) out << "^" << i;
  }
  return first ? "0" : out.str();
}

bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
Cyclotomic inverse(const Cyclotomic& x) { return x.inverse(); }

TowerPtr TowerField::make(FieldPtr base, std::optional<Rational> radicand) {
  if (radicand && sgn(*radicand) == 0) throw std::invalid_argument("radicand must be nonzero");
  if (radicand && *radicand == 1) throw std::invalid_argument("radicand 1 gives a reducible t^3 - 1");
  return TowerPtr(new TowerField(std::move(base), std::move(radicand)));
}

TowerElement::TowerElement(TowerPtr field, const Rational& value)
    : TowerElement(field, Cyclotomic(field->base(), value)) {}

TowerElement::TowerElement(TowerPtr field, const Cyclotomic& value) : field_(std::move(field)) {
  require_same_field(field_->base(), value.field());
  c_.assign(field_->degree(), Cyclotomic(field_->base(), Rational(0)));
  c_[0] = value;
}

TowerElement::TowerElement(TowerPtr field, std::vector<Cyclotomic> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  if (c_.size() != field_->degree()) throw std::invalid_argument("tower element needs one coefficient per power of t");
  for (const auto& c : c_) require_same_field(field_->base(), c.field());
}

TowerElement TowerElement::t(TowerPtr field) {
  if (field->degree() != 3) throw Error(ErrorKind::FieldMismatch, "tower has no radical generator");
  const auto& base = field->base();
  return TowerElement(field, {Cyclotomic(base, Rational(0)), Cyclotomic(base, Rational(1)), Cyclotomic(base, Rational(0))});
}

bool TowerElement::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool TowerElement::in_base() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

TowerElement TowerElement::operator+(const TowerElement& o) const {
  require_same_tower(field_, o.field_);
  auto out = c_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + o.c_[i];
  return TowerElement(field_, std::move(out));
}

TowerElement TowerElement::operator-(const TowerElement& o) const {
  require_same_tower(field_, o.field_);
  auto out = c_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] - o.c_[i];
  return TowerElement(field_, std::move(out));
}

TowerElement TowerElement::operator-() const {
  auto out = c_;
  for (auto& c : out) c = -c;
  return TowerElement(field_, std::move(out));
}

TowerElement TowerElement::operator*(const TowerElement& o) const {
  require_same_tower(field_, o.field_);
  if (c_.size() == 1) return TowerElement(field_, std::vector<Cyclotomic>{c_[0] * o.c_[0]});
  const Rational& r = *field_->radicand();
  const auto zero = Cyclotomic(field_->base(), Rational(0));
  // sums[k] collects a_i b_j with i + j = k, for k = 0..4; t^3 = r.
  std::array<Cyclotomic, 5> sums{zero, zero, zero, zero, zero};
  for (std::size_t i = 0; i < 3; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < 3; ++j) {
      if (!o.c_[j].is_zero()) sums[i + j] = sums[i + j] + c_[i] * o.c_[j];
    }
  }
  return TowerElement(field_, {sums[0] + sums[3] * r, sums[1] + sums[4] * r, sums[2]});
}

TowerElement TowerElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in the tower");
  if (c_.size() == 1) return TowerElement(field_, std::vector<Cyclotomic>{c_[0].inverse()});
  const Rational& r = *field_->radicand();
  const auto& a = c_[0];
  const auto& b = c_[1];
  const auto& c = c_[2];
  // Adjugate of multiplication by a + b t + c t^2 applied to 1, over its norm.
  const Cyclotomic u0 = a * a - b * c * r;
  const Cyclotomic u1 = c * c * r - a * b;
  const Cyclotomic u2 = b * b - a * c;
  const Cyclotomic norm = a * u0 + (b * u2 + c * u1) * r;
  if (norm.is_zero()) throw Error(ErrorKind::ZeroDivisor, "t^3 - c is reducible over the base");
  const Cyclotomic inv = norm.inverse();
  return TowerElement(field_, {u0 * inv, u1 * inv, u2 * inv});
}

TowerElement TowerElement::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  TowerElement result(field_, Rational(1)), base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool operator==(const TowerElement& a, const TowerElement& b) {
  require_same_tower(a.field_, b.field_);
  return a.c_ == b.c_;
}

std::string TowerElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string coeff = c_[i].to_string();
    if (i == 0) {
      out += "(" + coeff + ")";
    } else {
      out += "(" + coeff + ")*t" + (i > 1 ? "^" + std::to_string(i) : "");
    }
  }
  return out.empty() ? "0" : out;
}

bool is_zero(const TowerElement& x) { return x.is_zero(); }
TowerElement inverse(const TowerElement& x) { return x.inverse(); }

TowerElement apply_sigma(const TowerElement& x, const GaloisAction& sigma) {
  const auto& base = x.field()->base();
  const unsigned e = sigma.twist % 3;
  if (e != 0 && !base->has_omega()) {
    throw Error(ErrorKind::MissingOmega, "twisting t needs a cube root of unity in Q(zeta_" + std::to_string(base->conductor()) + ")");
  }
  std::vector<Cyclotomic> out;
  out.reserve(x.coeffs().size());
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    Cyclotomic c = x.coeffs()[i].galois(sigma.d);
    const u64 k = (e * i) % 3;
    if (k != 0 && !c.is_zero()) c = c * Cyclotomic::zeta(base, k * (base->conductor() / 3));
    out.push_back(std::move(c));
  }
  return TowerElement(x.field(), std::move(out));
}

bool fixed_field_test(const TowerElement& x, const GaloisAction& sigma) { return apply_sigma(x, sigma) == x; }

bool has_order_three(const TowerPtr& field, const GaloisAction& sigma) {
  std::vector<TowerElement> gens{TowerElement(field, Cyclotomic::zeta(field->base()))};
  if (field->degree() == 3) gens.push_back(TowerElement::t(field));
  bool identity = true;
  for (const auto& g : gens) {
    const auto s = apply_sigma(g, sigma);
    if (apply_sigma(apply_sigma(s, sigma), sigma) != g) return false;
    identity = identity && s == g;
  }
  return !identity;
}

std::optional<u64> irreducibility_certificate(u64 conductor, const Rational& c, u64 search_limit) {
  const u64 step = std::lcm<u64>(3, conductor);
  for (u64 l = step + 1; l <= search_limit; l += step) {
    if (!nt::is_prime(l)) continue;
    const u64 num = mpz_fdiv_ui(c.get_num_mpz_t(), l);
    const u64 den = mpz_fdiv_ui(c.get_den_mpz_t(), l);
    if (num == 0 || den == 0) continue;
    const u64 residue = nt::mul_mod(num, nt::inverse_mod(den, l), l);
    if (nt::pow_mod(residue, (l - 1) / 3, l) != 1) return l;
  }
  return std::nullopt;
}

}  // namespace sbg::field
