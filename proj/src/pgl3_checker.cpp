#include "sbgroups/pgl3_checker.hpp"

#include <sstream>

#include "sbgroups/error.hpp"
#include "sbgroups/group_kernel.hpp"
#include "sbgroups/linear_solve.hpp"
#include "sbgroups/residue_arith.hpp"
#include "sbgroups/semidirect.hpp"

namespace sbg::pgl3 {

namespace {

template <class F>
ExactMatrix3::Rows make_rows(F f) {
  return {{{f(0, 0), f(0, 1), f(0, 2)}, {f(1, 0), f(1, 1), f(1, 2)}, {f(2, 0), f(2, 1), f(2, 2)}}};
}

using Vec = std::array<Cyclotomic, 3>;

Vec cross(const Vec& u, const Vec& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

bool is_zero_vec(const Vec& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

std::vector<Rational> flatten(const ExactMatrix3& m) {
  std::vector<Rational> out;
  for (const auto& row : m.rows()) {
    for (const auto& x : row) out.insert(out.end(), x.coeffs().begin(), x.coeffs().end());
  }
  return out;
}

bool congruent27(int x, int y) { return ((x - y) % 27 + 27) % 27 == 0; }

void require_prime(u64 p) {
  if (!nt::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::string exponent_string(u64 a, u64 b, u64 c) {
  return "diag(z^" + std::to_string(a) + ", z^" + std::to_string(b) + ", z^" + std::to_string(c) + ")";
}

}  // namespace

ExactMatrix3::ExactMatrix3(Rows rows) : rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    for (const auto& x : row) {
      if (x.field() != field() && x.field()->conductor() != field()->conductor()) {
        throw Error(ErrorKind::FieldMismatch, "matrix entries from different fields");
      }
    }
  }
}

ExactMatrix3 ExactMatrix3::identity(const FieldPtr& f) {
  return ExactMatrix3(make_rows([&](int i, int j) { return Cyclotomic(f, Rational(i == j ? 1 : 0)); }));
}

ExactMatrix3 ExactMatrix3::diagonal(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c) {
  const std::array<const Cyclotomic*, 3> d{&a, &b, &c};
  return ExactMatrix3(make_rows([&](int i, int j) { return i == j ? *d[i] : Cyclotomic(a.field(), Rational(0)); }));
}

ExactMatrix3 ExactMatrix3::from_rationals(const FieldPtr& f, const std::array<std::array<Rational, 3>, 3>& q) {
  return ExactMatrix3(make_rows([&](int i, int j) { return Cyclotomic(f, q[i][j]); }));
}

ExactMatrix3 ExactMatrix3::operator*(const ExactMatrix3& o) const {
  return ExactMatrix3(make_rows([&](int i, int j) {
    Cyclotomic s(field(), Rational(0));
    for (int k = 0; k < 3; ++k) {
      if (!rows_[i][k].is_zero() && !o.rows_[k][j].is_zero()) s = s + rows_[i][k] * o.rows_[k][j];
    }
    return s;
  }));
}

ExactMatrix3 ExactMatrix3::operator*(const Cyclotomic& s) const {
  return ExactMatrix3(make_rows([&](int i, int j) { return rows_[i][j] * s; }));
}

Vec ExactMatrix3::apply(const Vec& v) const {
  auto row = [&](int i) { return rows_[i][0] * v[0] + rows_[i][1] * v[1] + rows_[i][2] * v[2]; };
  return {row(0), row(1), row(2)};
}

Cyclotomic ExactMatrix3::determinant() const {
  const auto& m = rows_;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

ExactMatrix3 ExactMatrix3::inverse() const {
  const Cyclotomic inv_det = determinant().inverse();
  const auto& m = rows_;
  // Adjugate: entry (i, j) is the cofactor of (j, i).
  return ExactMatrix3(make_rows([&](int i, int j) {
    const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
    return (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) * inv_det;
  }));
}

ExactMatrix3 ExactMatrix3::pow(u64 k) const {
  ExactMatrix3 result = identity(field()), base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool ExactMatrix3::is_scalar() const {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j && !rows_[i][j].is_zero()) return false;
    }
  }
  return rows_[0][0] == rows_[1][1] && rows_[1][1] == rows_[2][2];
}

ProjectiveMatrix::ProjectiveMatrix(const ExactMatrix3& m) : rep_(m) {
  for (const auto& row : m.rows()) {
    for (const auto& x : row) {
      if (x.is_zero()) continue;
      rep_ = m * x.inverse();
      return;
    }
  }
  throw Error(ErrorKind::DivisionByZero, "the zero matrix has no projective class");
}

std::string ProjectiveMatrix::key() const {
  std::string out;
  for (const auto& q : flatten(rep_)) {
    out += q.get_str();
    out += ',';
  }
  return out;
}

bool proportional(const ExactMatrix3& a, const ExactMatrix3& b) {
  bool any = false;
  for (int i = 0; i < 9; ++i) {
    const auto& ai = a.at(i / 3, i % 3);
    const auto& bi = b.at(i / 3, i % 3);
    if (ai.is_zero() != bi.is_zero()) return false;
    any = any || !ai.is_zero();
    for (int j = i + 1; j < 9; ++j) {
      if (ai * b.at(j / 3, j % 3) != a.at(j / 3, j % 3) * bi) return false;
    }
  }
  return any;
}

std::string to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::ThreePoints: return "ThreePoints";
    case ProfileKind::PointAndLine: return "PointAndLine";
    case ProfileKind::Identity: return "Identity";
    case ProfileKind::Degenerate: return "Degenerate";
  }
  return "?";
}

FixedPointProfile fixed_point_profile(const ProjectiveMatrix& m, u64 order_hint) {
  const auto& rep = m.representative();
  if (rep.determinant().is_zero()) return {ProfileKind::Degenerate, "singular representative"};
  if (order_hint == 0 || !m.pow(order_hint).is_identity()) {
    throw Error(ErrorKind::NotFiniteOrder, "m^" + std::to_string(order_hint) + " is not scalar");
  }
  if (m.is_identity()) return {ProfileKind::Identity, "scalar"};
  const auto id = ExactMatrix3::identity(rep.field());
  // Rank over Q(zeta) of I, M, M^2 as 9-vectors is the minimal polynomial degree.
  auto entries = [](const ExactMatrix3& x) {
    std::vector<Cyclotomic> v;
    for (const auto& row : x.rows()) v.insert(v.end(), row.begin(), row.end());
    return v;
  };
  const std::size_t deg = linalg::rank(linalg::Matrix<Cyclotomic>{entries(id), entries(rep), entries(rep * rep)});
  if (deg == 2) return {ProfileKind::PointAndLine, "two distinct eigenvalues, one repeated"};
  return {ProfileKind::ThreePoints, "three distinct eigenvalues"};
}

bool fixes_point(const ExactMatrix3& m, const Vec& v) { return is_zero_vec(cross(m.apply(v), v)); }

SplitRepresentation split_representation(u64 n, u64 d, const Rational& a) {
  if (n == 0) throw Error(ErrorKind::BadCharacter, "n must be positive");
  if (n == 1) {
    if (d != 0) throw Error(ErrorKind::BadCharacter, "the only character mod 1 is d = 0");
  } else {
    semidirect::require_character(n, d);
  }
  if (sgn(a) == 0) throw Error(ErrorKind::DivisionByZero, "a must be nonzero");
  const auto f = field::CyclotomicField::get(n);
  const u64 d2 = n == 1 ? 0 : nt::mul_mod(d, d, n);
  const auto xi = ExactMatrix3::diagonal(Cyclotomic::zeta(f), Cyclotomic::zeta(f, d), Cyclotomic::zeta(f, d2));
  const Cyclotomic zero(f, Rational(0)), one(f, Rational(1)), ca(f, a);
  const ExactMatrix3 p(ExactMatrix3::Rows{{{zero, zero, ca}, {one, zero, zero}, {zero, one, zero}}});
  SplitRepresentation out{ProjectiveMatrix(xi), ProjectiveMatrix(p), false};
  out.relations_hold = out.xi * out.alpha == out.alpha * out.xi.pow(n == 1 ? 1 : d) && out.alpha.pow(3).is_identity() &&
                       out.xi.pow(n).is_identity();
  return out;
}

ProjectiveGroup generated_projective_group(const std::vector<ProjectiveMatrix>& gens, std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
  const auto f = gens.front().representative().field();
  return group::close_under_products(
      ProjectiveMatrix(ExactMatrix3::identity(f)), gens,
      [](const ProjectiveMatrix& x, const ProjectiveMatrix& y) { return x * y; },
      [](const ProjectiveMatrix& x) { return x; }, [](const ProjectiveMatrix& x) { return x.key(); }, cap);
}

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : cases) n += c.passed ? 0 : 1;
  return n;
}

Report check_order3_units(u64 p_max) {
  Report report{"order3_units", {}};
  for (u64 p = 2; p <= p_max; ++p) {
    if (!nt::is_prime(p)) continue;
    std::vector<u64> order3;
    for (u64 x = 2; x < p; ++x) {
      if (nt::mul_mod(nt::mul_mod(x, x, p), x, p) == 1) order3.push_back(x);
    }
    std::string witness = "none";
    if (!order3.empty()) {
      witness.clear();
      for (std::size_t i = 0; i < order3.size(); ++i) witness += (i ? "," : "") + std::to_string(order3[i]);
    }
    report.cases.push_back({"p=" + std::to_string(p), order3.empty() == (p % 3 != 1), witness});
  }
  return report;
}

bool order9_triple_excluded(unsigned e1, unsigned e2, unsigned e3) {
  const unsigned c1 = 3 * e1 % 27, c2 = 3 * e2 % 27, c3 = 3 * e3 % 27;
  return c1 == c2 || c1 == c3 || c2 == c3;
}

Report check_order9_exclusion() {
  // xi_i = zeta_27^{e_i}, upsilon = zeta_27^u with u in {0, 9, 18}. Tangent eigenvalues:
  // xi_1' = xi_2/xi_1, xi_2' = xi_3/xi_2, xi_3' = xi_1/xi_3, xi_2'' = xi_1/xi_2, xi_3'' = xi_2/xi_3.
  struct Coincidence {
    std::string name;
    bool (*holds)(int e1, int e2, int e3, int u);
  };
  const std::vector<Coincidence> coincidences{
      {"xi1' = u xi2' = u^2 xi3'",
       [](int e1, int e2, int e3, int u) {
         return congruent27(e2 - e1, u + e3 - e2) && congruent27(e2 - e1, 2 * u + e1 - e3);
       }},
      {"xi1' = u xi2''", [](int e1, int e2, int, int u) { return congruent27(e2 - e1, u + e1 - e2); }},
      {"xi1' = u xi3''", [](int e1, int e2, int e3, int u) { return congruent27(e2 - e1, u + e2 - e3); }},
  };
  Report report{"order9_exclusion", {}};
  for (const auto& c : coincidences) {
    for (int u : {0, 9, 18}) {
      std::size_t scanned = 0, attained = 0, counterexamples = 0;
      std::string first_counterexample;
      for (unsigned e1 = 0; e1 < 27; ++e1) {
        for (unsigned e2 = 0; e2 < 27; ++e2) {
          for (unsigned e3 = 0; e3 < 27; ++e3) {
            if (!c.holds(static_cast<int>(e1), static_cast<int>(e2), static_cast<int>(e3), u)) continue;
            ++attained;
            if (order9_triple_excluded(e1, e2, e3)) continue;
            if (counterexamples++ == 0) {
              first_counterexample = "(" + std::to_string(e1) + "," + std::to_string(e2) + "," + std::to_string(e3) + ")";
            }
          }
        }
      }
      for (unsigned e1 = 0; e1 < 27; ++e1) {
        for (unsigned e2 = 0; e2 < 27; ++e2) {
          for (unsigned e3 = 0; e3 < 27; ++e3) scanned += order9_triple_excluded(e1, e2, e3) ? 0 : 1;
        }
      }
      std::ostringstream w;
      w << scanned << " triples with distinct cubes, relation attained by " << attained
        << " triples all sharing a cube, counterexamples " << counterexamples;
      if (counterexamples > 0) w << ", first " << first_counterexample;
      report.cases.push_back({c.name + " (u=zeta27^" + std::to_string(u) + ")", counterexamples == 0 && attained > 0, w.str()});
    }
  }
  return report;
}

Report check_isolated_point_witness(u64 p) {
  require_prime(p);
  const auto f = field::CyclotomicField::get(p);
  Report report{"isolated_point_p" + std::to_string(p), {}};
  // Diagonal p-th-root matrices form F_p^3 (exponents); scalars are the line through (1,1,1).
  // A subgroup mu_p^2 is a plane a x + b y + c z = 0; it avoids the scalars iff a + b + c != 0.
  for (u64 a = 0; a < p; ++a) {
    for (u64 b = 0; b < p; ++b) {
      for (u64 c = 0; c < p; ++c) {
        const bool leading_one = a == 1 || (a == 0 && b == 1) || (a == 0 && b == 0 && c == 1);
        if (!leading_one || (a + b + c) % p == 0) continue;
        std::vector<std::array<u64, 3>> plane;
        for (u64 x = 0; x < p; ++x) {
          for (u64 y = 0; y < p; ++y) {
            for (u64 z = 0; z < p; ++z) {
              if ((a * x + b * y + c * z) % p == 0) plane.push_back({x, y, z});
            }
          }
        }
        std::string witness;
        for (const auto& e : plane) {
          const ProjectiveMatrix m(ExactMatrix3::diagonal(Cyclotomic::zeta(f, e[0]), Cyclotomic::zeta(f, e[1]),
                                                          Cyclotomic::zeta(f, e[2])));
          if (fixed_point_profile(m, p).kind == ProfileKind::PointAndLine) {
            witness = exponent_string(e[0], e[1], e[2]);
            break;
          }
        }
        const std::string name = "plane " + std::to_string(a) + "x+" + std::to_string(b) + "y+" + std::to_string(c) + "z=0";
        report.cases.push_back({name, plane.size() == p * p && !witness.empty(), witness.empty() ? "none" : witness});
      }
    }
  }
  return report;
}

Report check_four_fixed_points(u64 p) {
  require_prime(p);
  if (p <= 3) throw std::invalid_argument("the four-point check needs p > 3");
  const auto f = field::CyclotomicField::get(p);
  const auto c = ExactMatrix3::from_rationals(f, {{{1, 1, 0}, {0, 1, 1}, {1, 0, 2}}});
  const auto c_inv = c.inverse();
  // The 13 points of P^2 with coordinates in {-1, 0, 1}, moved by c.
  std::vector<Vec> points;
  for (int x = -1; x <= 1; ++x) {
    for (int y = -1; y <= 1; ++y) {
      for (int z = -1; z <= 1; ++z) {
        const int lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead != 1) continue;
        points.push_back(c.apply({Cyclotomic(f, Rational(x)), Cyclotomic(f, Rational(y)), Cyclotomic(f, Rational(z))}));
      }
    }
  }
  Report report{"four_fixed_points_p" + std::to_string(p), {}};
  for (u64 a = 0; a < p; ++a) {
    for (u64 b = 0; b < p; ++b) {
      if (a == 0 && b == 0) continue;
      const auto d = ExactMatrix3::diagonal(Cyclotomic(f, Rational(1)), Cyclotomic::zeta(f, a), Cyclotomic::zeta(f, b));
      const auto m = c * d * c_inv;
      const auto profile = fixed_point_profile(ProjectiveMatrix(m), p);
      std::size_t fixed = 0;
      for (const auto& v : points) fixed += fixes_point(m, v) ? 1 : 0;
      const bool three = profile.kind == ProfileKind::ThreePoints;
      const bool ok = three ? fixed == 3 : (profile.kind == ProfileKind::PointAndLine && fixed >= 4);
      report.cases.push_back(
          {exponent_string(0, a, b) + " conjugated", ok, to_string(profile.kind) + ", " + std::to_string(fixed) + " fixed test points"});
    }
  }
  return report;
}

Report check_split_representations(u64 bound) {
  Report report{"split_representation", {}};
  for (u64 n = 2; n <= bound; ++n) {
    bool admissible = n % 3 != 0;
    for (const auto& pp : nt::factorize(n).factors) admissible = admissible && pp.prime % 3 == 1;
    if (!admissible) continue;
    for (const auto& chi : semidirect::all_balanced_characters(n)) {
      const u64 d = chi.d();
      const auto rep = split_representation(n, d);
      const auto g = generated_projective_group({rep.xi, rep.alpha});
      const bool iso = group::is_isomorphic(g.group, group::build_semidirect(n, 3, d));
      report.cases.push_back({"G(" + std::to_string(n) + "," + std::to_string(d) + ")", rep.relations_hold && iso,
                              "order " + std::to_string(g.group.order())});
    }
  }
  return report;
}

}  // namespace sbg::pgl3
