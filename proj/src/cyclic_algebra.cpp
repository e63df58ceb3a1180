#include "sbgroups/cyclic_algebra.hpp"

#include <sstream>

#include "sbgroups/error.hpp"
#include "sbgroups/linear_solve.hpp"
#include "sbgroups/residue_arith.hpp"
#include "sbgroups/semidirect.hpp"

namespace sbg::algebra {

using field::Cyclotomic;
using field::CyclotomicField;
using field::TowerField;

namespace {

TowerElement zero_of(const TowerPtr& l) { return TowerElement(l, Rational(0)); }

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a != b) throw Error(ErrorKind::FieldMismatch, "elements of different algebras");
}

// Generators of L as a field: zeta and, when present, t.
std::vector<TowerElement> field_generators(const TowerPtr& l) {
  std::vector<TowerElement> gens{TowerElement(l, Cyclotomic::zeta(l->base()))};
  if (l->degree() == 3) gens.push_back(TowerElement::t(l));
  return gens;
}

}  // namespace

CyclicAlgebra::CyclicAlgebra(TowerPtr l, GaloisAction sigma, TowerElement a)
    : l_(std::move(l)), sigma_(sigma), a_(std::move(a)) {}

AlgebraPtr CyclicAlgebra::make(TowerPtr l, GaloisAction sigma, TowerElement a) {
  if (!field::has_order_three(l, sigma)) throw Error(ErrorKind::BadCharacter, "sigma does not have order 3 on L");
  if (a.is_zero()) throw Error(ErrorKind::BadCharacter, "a must be nonzero");
  if (!field::fixed_field_test(a, sigma)) throw Error(ErrorKind::BadCharacter, "a is not fixed by sigma");
  std::shared_ptr<CyclicAlgebra> alg(new CyclicAlgebra(std::move(l), sigma, std::move(a)));

  // Any beta outside K generates L over K, since [L : K] = 3 is prime.
  auto candidates = field_generators(alg->l_);
  if (candidates.size() == 2) candidates.push_back(candidates[0] + candidates[1]);
  for (const auto& beta : candidates) {
    if (alg->in_fixed_field(beta)) continue;
    linalg::Matrix<TowerElement> v;
    for (unsigned r = 0; r < 3; ++r) {
      const auto b = alg->sigma_power(beta, r);
      v.push_back({TowerElement(alg->l_, Rational(1)), b, b * b});
    }
    linalg::Matrix<TowerElement> inv(3, std::vector<TowerElement>(3, zero_of(alg->l_)));
    bool ok = true;
    for (unsigned col = 0; col < 3 && ok; ++col) {
      std::vector<TowerElement> e(3, zero_of(alg->l_));
      e[col] = TowerElement(alg->l_, Rational(1));
      const auto x = linalg::solve(v, e);
      if (!x) {
        ok = false;
        break;
      }
      for (unsigned row = 0; row < 3; ++row) inv[row][col] = (*x)[row];
    }
    if (ok) {
      alg->vandermonde_inverse_ = std::move(inv);
      return alg;
    }
  }
  throw Error(ErrorKind::ZeroDivisor, "no generator of L over K with invertible conjugate matrix");
}

TowerElement CyclicAlgebra::sigma_power(const TowerElement& x, unsigned k) const {
  TowerElement out = x;
  for (unsigned i = 0; i < k % 3; ++i) out = field::apply_sigma(out, sigma_);
  return out;
}

bool CyclicAlgebra::in_fixed_field(const TowerElement& x) const { return field::fixed_field_test(x, sigma_); }

std::vector<TowerElement> CyclicAlgebra::fixed_field_coordinates(const TowerElement& x) const {
  // sigma^r(x) = sum_j k_j sigma^r(beta)^j, so k = V^{-1} (x, sigma x, sigma^2 x).
  const std::vector<TowerElement> conj{x, sigma_power(x, 1), sigma_power(x, 2)};
  std::vector<TowerElement> k(3, zero_of(l_));
  for (unsigned j = 0; j < 3; ++j) {
    for (unsigned r = 0; r < 3; ++r) {
      if (!vandermonde_inverse_[j][r].is_zero() && !conj[r].is_zero()) k[j] = k[j] + vandermonde_inverse_[j][r] * conj[r];
    }
  }
  return k;
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, std::vector<TowerElement> components)
    : algebra_(std::move(algebra)), c_(std::move(components)) {
  if (c_.size() != 3) throw std::invalid_argument("algebra element needs three components");
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, const TowerElement& lambda)
    : algebra_(std::move(algebra)), c_{lambda, zero_of(lambda.field()), zero_of(lambda.field())} {}

AlgebraElement AlgebraElement::one(AlgebraPtr algebra) {
  const auto l = algebra->field();
  return AlgebraElement(std::move(algebra), TowerElement(l, Rational(1)));
}

AlgebraElement AlgebraElement::alpha(AlgebraPtr algebra) {
  const auto l = algebra->field();
  return AlgebraElement(std::move(algebra), {zero_of(l), TowerElement(l, Rational(1)), zero_of(l)});
}

bool AlgebraElement::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool AlgebraElement::is_scalar() const {
  return c_[1].is_zero() && c_[2].is_zero() && algebra_->in_fixed_field(c_[0]);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  require_same_algebra(algebra_, o.algebra_);
  return AlgebraElement(algebra_, {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2]});
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  require_same_algebra(algebra_, o.algebra_);
  return AlgebraElement(algebra_, {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2]});
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  require_same_algebra(algebra_, o.algebra_);
  // (alpha^i l)(alpha^j m) = alpha^{i+j} sigma^j(l) m, and alpha^3 = a is central.
  std::vector<TowerElement> out(3, zero_of(algebra_->field()));
  for (unsigned i = 0; i < 3; ++i) {
    if (c_[i].is_zero()) continue;
    TowerElement conj = c_[i];
    for (unsigned j = 0; j < 3; ++j) {
      if (j > 0) conj = field::apply_sigma(conj, algebra_->sigma());
      if (o.c_[j].is_zero()) continue;
      TowerElement term = conj * o.c_[j];
      if (i + j >= 3) term = term * algebra_->a();
      out[(i + j) % 3] = out[(i + j) % 3] + term;
    }
  }
  return AlgebraElement(algebra_, std::move(out));
}

AlgebraElement AlgebraElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in the algebra");
  // Column j of left multiplication by this element is its product with alpha^j.
  const auto& l = algebra_->field();
  linalg::Matrix<TowerElement> m(3, std::vector<TowerElement>(3, zero_of(l)));
  for (unsigned i = 0; i < 3; ++i) {
    TowerElement conj = c_[i];
    for (unsigned j = 0; j < 3; ++j) {
      if (j > 0) conj = algebra_->sigma_power(conj, 1);
      m[(i + j) % 3][j] = i + j >= 3 ? conj * algebra_->a() : conj;
    }
  }
  std::vector<TowerElement> rhs(3, zero_of(l));
  rhs[0] = TowerElement(l, Rational(1));
  auto y = linalg::solve(m, rhs);
  if (!y) throw Error(ErrorKind::ZeroDivisor, "element is a zero divisor: " + to_string());
  return AlgebraElement(algebra_, std::move(*y));
}

AlgebraElement AlgebraElement::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  AlgebraElement result = one(algebra_), base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a.algebra_, b.algebra_);
  return a.c_ == b.c_;
}

std::string AlgebraElement::key() const {
  std::string out;
  for (const auto& comp : c_) {
    for (const auto& cyc : comp.coeffs()) {
      for (const auto& q : cyc.coeffs()) {
        out += q.get_str();
        out += ',';
      }
    }
    out += ';';
  }
  return out;
}

std::string AlgebraElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i < 3; ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[i].to_string();
    } else {
      os << (i == 1 ? "alpha" : "alpha^2") << "*(" << c_[i].to_string() << ")";
    }
  }
  if (first) os << "0";
  return os.str();
}

AlgebraElement normalize(const AlgebraElement& x) {
  const auto& alg = *x.algebra();
  for (const auto& comp : x.components()) {
    if (comp.is_zero()) continue;
    for (const auto& k : alg.fixed_field_coordinates(comp)) {
      if (k.is_zero()) continue;
      const TowerElement s = k.inverse();
      std::vector<TowerElement> out;
      for (const auto& c : x.components()) out.push_back(c * s);
      return AlgebraElement(x.algebra(), std::move(out));
    }
  }
  throw Error(ErrorKind::DivisionByZero, "zero has no projective class");
}

bool same_class(const AlgebraElement& x, const AlgebraElement& y) { return (x * y.inverse()).is_scalar(); }

std::optional<u64> order_mod_scalars(const AlgebraElement& x, u64 cap) {
  x.inverse();  // surfaces ZeroDivisor for non-units
  AlgebraElement p = x;
  for (u64 k = 1; k <= cap; ++k, p = p * x) {
    if (p.is_scalar()) return k;
  }
  return std::nullopt;
}

namespace {

GeneratedGroup closure(const std::vector<AlgebraElement>& gens, std::size_t cap, bool projective) {
  if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
  const auto alg = gens.front().algebra();
  for (const auto& g : gens) {
    require_same_algebra(alg, g.algebra());
    g.inverse();  // surfaces ZeroDivisor before any closure work
  }
  return group::close_under_products(
      AlgebraElement::one(alg), gens, [](const AlgebraElement& x, const AlgebraElement& y) { return x * y; },
      [projective](const AlgebraElement& x) { return projective ? normalize(x) : x; },
      [](const AlgebraElement& x) { return x.key(); }, cap);
}

std::vector<Rational> flatten(const AlgebraElement& x) {
  std::vector<Rational> out;
  for (const auto& comp : x.components()) {
    for (const auto& cyc : comp.coeffs()) out.insert(out.end(), cyc.coeffs().begin(), cyc.coeffs().end());
  }
  return out;
}

AlgebraElement unflatten(const AlgebraPtr& alg, const std::vector<Rational>& v) {
  const auto& l = alg->field();
  const std::size_t phi = l->base()->degree();
  std::size_t at = 0;
  std::vector<TowerElement> comps;
  for (unsigned i = 0; i < 3; ++i) {
    std::vector<Cyclotomic> coeffs;
    for (std::size_t r = 0; r < l->degree(); ++r, at += phi) {
      coeffs.emplace_back(l->base(), std::vector<Rational>(v.begin() + at, v.begin() + at + phi));
    }
    comps.emplace_back(l, std::move(coeffs));
  }
  return AlgebraElement(alg, std::move(comps));
}

Relation relation(std::string name, bool holds) { return Relation{std::move(name), holds}; }

void check_relations(Witness& w) {
  const auto& alg = w.algebra;
  const auto& l = alg->field();
  const AlgebraElement a(alg, alg->a());
  w.relations.push_back(relation("alpha^3 = a", w.alpha.pow(3) == a));
  w.relations.push_back(relation("xi^n = 1", w.xi.pow(static_cast<long long>(w.n)) == AlgebraElement::one(alg)));
  w.relations.push_back(relation("xi alpha = alpha xi^d", w.xi * w.alpha == w.alpha * w.xi.pow(static_cast<long long>(w.d))));
  bool commutation = true;
  for (const auto& lambda : field_generators(l)) {
    const auto shifted = lambda + TowerElement(l, Rational(2));
    for (const auto& x : {lambda, shifted}) {
      const AlgebraElement lx(alg, x);
      commutation = commutation && lx * w.alpha == w.alpha * AlgebraElement(alg, alg->sigma_power(x, 1));
    }
  }
  w.relations.push_back(relation("lambda alpha = alpha sigma(lambda)", commutation));
  if (w.tau) {
    const auto& tau = *w.tau;
    const AlgebraElement omega(alg, TowerElement(l, Cyclotomic::omega(l->base())));
    w.relations.push_back(relation("tau^3 = 2", tau.pow(3) == AlgebraElement(alg, TowerElement(l, Rational(2)))));
    w.relations.push_back(relation("tau alpha = omega alpha tau", tau * w.alpha == omega * w.alpha * tau));
    w.relations.push_back(relation("tau xi = xi tau", tau * w.xi == w.xi * tau));
  }
}

}  // namespace

GeneratedGroup generated_group_mod_scalars(const std::vector<AlgebraElement>& gens, std::size_t cap) {
  return closure(gens, cap, true);
}

GeneratedGroup generated_group(const std::vector<AlgebraElement>& gens, std::size_t cap) {
  return closure(gens, cap, false);
}

std::vector<AlgebraElement> centralizer_over_Q(const std::vector<AlgebraElement>& gens) {
  if (gens.empty()) throw std::invalid_argument("centralizer needs at least one element");
  const auto alg = gens.front().algebra();
  const std::size_t dim = flatten(gens.front()).size();
  // Column c holds e_c g - g e_c for every g, stacked.
  linalg::Matrix<Rational> m(dim * gens.size(), std::vector<Rational>(dim, Rational(0)));
  for (std::size_t c = 0; c < dim; ++c) {
    std::vector<Rational> unit(dim, Rational(0));
    unit[c] = 1;
    const auto e = unflatten(alg, unit);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const auto diff = flatten(e * gens[g] - gens[g] * e);
      for (std::size_t r = 0; r < dim; ++r) m[g * dim + r][c] = diff[r];
    }
  }
  std::vector<AlgebraElement> out;
  for (const auto& v : linalg::nullspace(std::move(m), Rational(0), Rational(1))) out.push_back(unflatten(alg, v));
  return out;
}

std::vector<AlgebraElement> Witness::generators() const {
  std::vector<AlgebraElement> g{xi, alpha};
  if (tau) g.push_back(*tau);
  return g;
}

Witness semidirect_witness(u64 n, u64 d, const Rational& a) {
  if (n == 0) throw Error(ErrorKind::BadCharacter, "n must be positive");
  if (n == 1) {
    if (d != 0) throw Error(ErrorKind::BadCharacter, "the only character mod 1 is d = 0");
    // sigma must still have order 3, so it moves a cube root of 2 instead of a root of unity.
    const auto l = TowerField::make(CyclotomicField::get(3), Rational(2));
    const auto alg = CyclicAlgebra::make(l, GaloisAction{1, 1}, TowerElement(l, a));
    Witness w{alg, 1, 0, AlgebraElement::one(alg), AlgebraElement::alpha(alg), std::nullopt, {}};
    check_relations(w);
    return w;
  }
  semidirect::require_character(n, d);
  if (d % n == 1) throw Error(ErrorKind::BadCharacter, "the trivial character gives no cyclic algebra");
  const auto base = CyclotomicField::get(n);
  const auto l = TowerField::make(base);
  const auto alg = CyclicAlgebra::make(l, GaloisAction{d, 0}, TowerElement(l, a));
  Witness w{alg, n, d, AlgebraElement(alg, TowerElement(l, Cyclotomic::zeta(base))), AlgebraElement::alpha(alg),
            std::nullopt, {}};
  check_relations(w);
  return w;
}

Witness semidirect_times_mu3_witness(u64 n, u64 d, const Rational& a) {
  if (n == 0) throw Error(ErrorKind::BadCharacter, "n must be positive");
  if (n == 1) {
    if (d != 0) throw Error(ErrorKind::BadCharacter, "the only character mod 1 is d = 0");
  } else {
    semidirect::require_character(n, d);
  }
  // L = Q(zeta_{3n})(cube root of 2); xi = zeta^3 has order n and omega = zeta^n.
  const u64 conductor = 3 * n;
  const u64 big_d = n == 1 ? 1 : nt::crt({{1, 3}, {d, n}});
  const auto base = CyclotomicField::get(conductor);
  const auto l = TowerField::make(base, Rational(2));
  const auto alg = CyclicAlgebra::make(l, GaloisAction{big_d, 1}, TowerElement(l, a));
  Witness w{alg,
            n,
            d,
            AlgebraElement(alg, TowerElement(l, Cyclotomic::zeta(base, 3))),
            AlgebraElement::alpha(alg),
            AlgebraElement(alg, TowerElement::t(l)),
            {}};
  check_relations(w);
  return w;
}

HeisenbergWitness heisenberg_witness(const Rational& a, const Rational& b) {
  const auto base = CyclotomicField::get(3);
  const auto l = TowerField::make(base, b);
  // t alpha = alpha omega^2 t, which is uv = omega vu for u = alpha, v = t.
  const auto alg = CyclicAlgebra::make(l, GaloisAction{1, 2}, TowerElement(l, a));
  HeisenbergWitness w{alg, AlgebraElement::alpha(alg), AlgebraElement(alg, TowerElement::t(l)), {}};
  const AlgebraElement omega(alg, TowerElement(l, Cyclotomic::omega(base)));
  w.relations.push_back(relation("u^3 = a", w.u.pow(3) == AlgebraElement(alg, TowerElement(l, a))));
  w.relations.push_back(relation("v^3 = b", w.v.pow(3) == AlgebraElement(alg, TowerElement(l, b))));
  w.relations.push_back(relation("uv = omega vu", w.u * w.v == omega * w.v * w.u));
  return w;
}

}  // namespace sbg::algebra
