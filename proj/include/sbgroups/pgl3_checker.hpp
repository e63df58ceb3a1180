#pragma once

// Exact 3x3 matrices over Q(zeta_m), their classes in PGL_3, fixed-point profiles
// of finite-order elements, and exhaustive checks of the fixed-point arguments.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sbgroups/closure.hpp"
#include "sbgroups/exact_fields.hpp"

namespace sbg::pgl3 {

using field::Cyclotomic;
using field::FieldPtr;
using field::Rational;
using u64 = std::uint64_t;

class ExactMatrix3 {
 public:
  using Rows = std::array<std::array<Cyclotomic, 3>, 3>;

  explicit ExactMatrix3(Rows rows);
  static ExactMatrix3 identity(const FieldPtr& f);
  static ExactMatrix3 diagonal(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c);
  /// Entries given as rationals, embedded in f.
  static ExactMatrix3 from_rationals(const FieldPtr& f, const std::array<std::array<Rational, 3>, 3>& q);

  const FieldPtr& field() const { return rows_[0][0].field(); }
  const Cyclotomic& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const Rows& rows() const { return rows_; }

  ExactMatrix3 operator*(const ExactMatrix3& o) const;
  ExactMatrix3 operator*(const Cyclotomic& s) const;
  std::array<Cyclotomic, 3> apply(const std::array<Cyclotomic, 3>& v) const;
  Cyclotomic determinant() const;
  /// Throws DivisionByZero when singular.
  ExactMatrix3 inverse() const;
  ExactMatrix3 pow(u64 k) const;
  bool is_scalar() const;

  friend bool operator==(const ExactMatrix3& a, const ExactMatrix3& b) { return a.rows_ == b.rows_; }

 private:
  Rows rows_;
};

/// A nonzero matrix up to nonzero scalars; the stored representative has its first
/// nonzero entry (row-major) equal to 1.
class ProjectiveMatrix {
 public:
  explicit ProjectiveMatrix(const ExactMatrix3& m);

  const ExactMatrix3& representative() const { return rep_; }
  ProjectiveMatrix operator*(const ProjectiveMatrix& o) const { return ProjectiveMatrix(rep_ * o.rep_); }
  ProjectiveMatrix pow(u64 k) const { return ProjectiveMatrix(rep_.pow(k)); }
  bool is_identity() const { return rep_.is_scalar(); }
  std::string key() const;

  friend bool operator==(const ProjectiveMatrix& a, const ProjectiveMatrix& b) { return a.rep_ == b.rep_; }

 private:
  ExactMatrix3 rep_;
};

/// a B = b A for all entry pairs: equality up to scalars straight from the definition.
bool proportional(const ExactMatrix3& a, const ExactMatrix3& b);

enum class ProfileKind { ThreePoints, PointAndLine, Identity, Degenerate };

struct FixedPointProfile {
  ProfileKind kind;
  std::string description;
};

std::string to_string(ProfileKind kind);

/// Profile from the eigenvalue multiplicities of a finite-order element. A finite-order
/// matrix is diagonalizable, so the degree of its minimal polynomial (1, 2 or 3) gives
/// the pattern (3), (2,1) or (1,1,1). Throws NotFiniteOrder unless m^order_hint is scalar.
FixedPointProfile fixed_point_profile(const ProjectiveMatrix& m, u64 order_hint);
/// M v is proportional to v.
bool fixes_point(const ExactMatrix3& m, const std::array<Cyclotomic, 3>& v);

struct SplitRepresentation {
  ProjectiveMatrix xi;
  ProjectiveMatrix alpha;
  /// xi alpha = alpha xi^d, alpha^3 scalar, xi^n scalar.
  bool relations_hold;
};

/// xi -> diag(zeta, zeta^d, zeta^{d^2}) and alpha -> P with P e1 = e2, P e2 = e3,
/// P e3 = a e1, over Q(zeta_n). Throws NotACubeRoot / NotAUnit for a bad character.
SplitRepresentation split_representation(u64 n, u64 d, const Rational& a = Rational(1));

using ProjectiveGroup = group::GeneratedGroup<ProjectiveMatrix>;
/// Throws CapExceeded past cap elements.
ProjectiveGroup generated_projective_group(const std::vector<ProjectiveMatrix>& gens, std::size_t cap = 5000);

struct CaseResult {
  std::string name;
  bool passed;
  std::string witness;
};

struct Report {
  std::string suite;
  std::vector<CaseResult> cases;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// For each prime p <= p_max, an element of order 3 in (Z/p)* exists iff p = 1 mod 3.
Report check_order3_units(u64 p_max);
/// Over all triples of 27th roots of unity with distinct cubes, none satisfies the
/// tangent-eigenvalue coincidences that a Galois 3-cycle on the fixed points would force.
Report check_order9_exclusion();
/// True when two of the three 27th roots zeta_27^e share a cube.
bool order9_triple_excluded(unsigned e1, unsigned e2, unsigned e3);
/// Every subgroup mu_p^2 of diagonal p-th-root matrices without nontrivial scalars has
/// an element with an isolated fixed point plus a fixed line.
Report check_isolated_point_witness(u64 p);
/// For diagonal order-p elements (p > 3), conjugated by a fixed exact matrix: an element
/// fixing at least 4 of a test set of points never has the three-point profile.
Report check_four_fixed_points(u64 p);
/// split_representation generates G(n, d) for every balanced character with n <= bound.
Report check_split_representations(u64 bound);

}  // namespace sbg::pgl3
