#include "suites.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "sbgroups/cyclic_algebra.hpp"
#include "sbgroups/error.hpp"
#include "sbgroups/group_kernel.hpp"
#include "sbgroups/residue_arith.hpp"
#include "sbgroups/semidirect.hpp"

namespace sbg::cli {

using pgl3::CaseResult;
using pgl3::Report;
using u64 = std::uint64_t;

namespace {

bool admissible_modulus(u64 n) {
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (const auto& pp : nt::factorize(n).factors) {
    if (pp.prime % 3 != 1) return false;
  }
  return true;
}

std::string pair_name(const char* prefix, u64 n, u64 d) {
  return std::string(prefix) + "(" + std::to_string(n) + "," + std::to_string(d) + ")";
}

bool all_relations(const std::vector<algebra::Relation>& rels) {
  for (const auto& r : rels) {
    if (!r.holds) return false;
  }
  return true;
}

// Runs f and turns an Error into a failed case instead of aborting the suite.
template <class F>
CaseResult guarded(const std::string& name, F f) {
  try {
    return f();
  } catch (const Error& e) {
    return {name, false, e.what()};
  }
}

}  // namespace

std::vector<Report> semidirect_suite(u64 bound) {
  Report fixed{"balanced_iff_trivial_fixed_subgroup", {}};
  for (u64 n = 1; n <= bound; ++n) {
    if (n > 1 && !admissible_modulus(n)) continue;
    std::size_t total = 0, balanced = 0, discrepancies = 0;
    for (const auto& r : nt::cube_roots_of_unity(n)) {
      const bool b = semidirect::is_balanced(n, r.value());
      const bool trivial = nt::fixed_subgroup_of_character(n, r.value()).size() == 1;
      ++total;
      balanced += b ? 1 : 0;
      discrepancies += b == trivial ? 0 : 1;
    }
    fixed.cases.push_back({"n=" + std::to_string(n), discrepancies == 0,
                           std::to_string(total) + " characters, " + std::to_string(balanced) + " balanced"});
  }

  Report presentation{"presentation_law", {}};
  for (u64 n = 1; n <= std::min<u64>(bound, 200); ++n) {
    bool ok = true;
    std::size_t count = 0;
    for (const auto& r : nt::cube_roots_of_unity(n)) {
      const u64 d = n == 1 ? 0 : r.value();
      const auto g = group::build_semidirect(n, 3, d);
      const auto x = group::generated_subgroup(g, {group::semidirect_x(n)});
      const auto y = group::generated_subgroup(g, {group::semidirect_y(n)});
      std::vector<group::Element> common;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
      ok = ok && g.order() == 3 * n && x.size() == n && y.size() == 3 && common.size() == 1;
      ++count;
    }
    presentation.cases.push_back({"n=" + std::to_string(n), ok, std::to_string(count) + " characters"});
  }

  Report n91{"characters_mod_91", {}};
  const auto roots = nt::cube_roots_of_unity(91);
  n91.cases.push_back({"cube roots of unity", roots.size() == 9, std::to_string(roots.size()) + " roots"});
  std::vector<u64> balanced;
  std::string n2s;
  bool decompositions = true;
  for (const auto& r : roots) {
    if (semidirect::is_balanced(91, r.value())) {
      balanced.push_back(r.value());
    } else if (r.value() != 1) {
      const auto dec = semidirect::decompose_non_balanced(91, r.value());
      decompositions = decompositions && (dec.n2 == 7 || dec.n2 == 13) && dec.n1 * dec.n2 == 91;
      n2s += (n2s.empty() ? "" : ",") + std::to_string(dec.n2);
    }
  }
  n91.cases.push_back({"balanced characters", balanced.size() == 4, std::to_string(balanced.size()) + " balanced"});
  n91.cases.push_back({"non-balanced decompositions", decompositions, "n2 = " + n2s});
  const auto classes = semidirect::isomorphism_classes_of_balanced(91);
  bool distinct = classes.size() == 2;
  if (distinct) {
    const auto g1 = group::build_semidirect(91, 3, classes[0]);
    const auto g2 = group::build_semidirect(91, 3, classes[1]);
    distinct = g1.order() == 273 && !group::is_isomorphic(g1, g2);
  }
  n91.cases.push_back({"balanced classes are non-isomorphic", distinct, std::to_string(classes.size()) + " classes"});
  return {fixed, presentation, n91};
}

std::vector<Report> algebra_suite(u64 bound) {
  Report semidirect{"semidirect_witnesses", {}};
  semidirect.cases.push_back(guarded("n=1", [] {
    const auto w = algebra::semidirect_witness(1, 0);
    const auto g = algebra::generated_group_mod_scalars(w.generators());
    return CaseResult{"n=1", all_relations(w.relations) && g.group.order() == 3, "order " + std::to_string(g.group.order())};
  }));
  for (u64 n = 2; n <= bound; ++n) {
    if (!admissible_modulus(n)) continue;
    for (u64 d : semidirect::isomorphism_classes_of_balanced(n)) {
      const auto name = pair_name("G", n, d);
      semidirect.cases.push_back(guarded(name, [&] {
        const auto w = algebra::semidirect_witness(n, d);
        const auto g = algebra::generated_group_mod_scalars(w.generators());
        const bool ok = all_relations(w.relations) && algebra::order_mod_scalars(w.xi) == n &&
                        algebra::order_mod_scalars(w.alpha) == 3u &&
                        group::is_isomorphic(g.group, group::build_semidirect(n, 3, d));
        return CaseResult{name, ok, "order " + std::to_string(g.group.order())};
      }));
    }
  }

  Report tau{"mu3_extension", {}};
  for (const auto& [n, d] : std::vector<std::pair<u64, u64>>{{1, 0}, {7, 2}}) {
    const auto name = pair_name("C3xG", n, d);
    tau.cases.push_back(guarded(name, [&] {
      const auto w = algebra::semidirect_times_mu3_witness(n, d);
      const auto g = algebra::generated_group_mod_scalars(w.generators());
      const auto expected = group::direct_product(group::build_cyclic(3), group::build_semidirect(n, 3, d));
      const auto tx = algebra::order_mod_scalars(*w.tau * w.xi);
      const bool ok = all_relations(w.relations) && tx == 3 * n && group::is_isomorphic(g.group, expected);
      return CaseResult{name, ok, "order " + std::to_string(g.group.order()) + ", ord(tau xi) = " + std::to_string(tx.value_or(0))};
    }));
  }

  Report heis{"heisenberg", {}};
  heis.cases.push_back(guarded("u, v", [] {
    const auto w = algebra::heisenberg_witness();
    const auto g = algebra::generated_group_mod_scalars({w.u, w.v});
    const bool ok = all_relations(w.relations) && group::is_isomorphic(g.group, group::elementary_abelian_3(2));
    return CaseResult{"u, v", ok, "order " + std::to_string(g.group.order())};
  }));

  Report collapse{"non_balanced_collapse", {}};
  u64 nb = 0;
  for (const auto& r : nt::cube_roots_of_unity(91)) {
    if (r.value() % 7 == 1 && r.value() != 1) nb = r.value();
  }
  const auto nb_name = pair_name("G", 91, nb);
  collapse.cases.push_back(guarded(nb_name, [&] {
    const auto w = algebra::semidirect_witness(91, nb);
    const auto g = algebra::generated_group_mod_scalars(w.generators());
    const bool ok = group::is_isomorphic(g.group, group::build_semidirect(13, 3, nb % 13));
    return CaseResult{nb_name, ok, "order " + std::to_string(g.group.order())};
  }));

  Report center{"centralizer", {}};
  center.cases.push_back(guarded("G(7,2)", [] {
    const auto w = algebra::semidirect_witness(7, 2);
    const auto c = algebra::centralizer_over_Q({w.xi, w.alpha});
    bool scalar = true;
    for (const auto& x : c) scalar = scalar && x.is_scalar();
    return CaseResult{"G(7,2)", scalar && c.size() == 2, "dimension " + std::to_string(c.size()) + " over Q"};
  }));
  return {semidirect, tau, heis, collapse, center};
}

std::vector<Report> pgl3_suite(u64 bound) {
  std::vector<Report> out{pgl3::check_order3_units(bound), pgl3::check_order9_exclusion()};
  for (u64 p : {2, 3, 5, 7, 11, 13}) out.push_back(pgl3::check_isolated_point_witness(p));
  for (u64 p : {5, 7, 11, 13}) out.push_back(pgl3::check_four_fixed_points(p));
  out.push_back(pgl3::check_split_representations(100));
  return out;
}

std::vector<Report> run_suite(const std::string& name, std::optional<u64> bound, std::ostream* log) {
  auto note = [&](const char* suite) {
    if (log) *log << "running " << suite << " suite\n";
  };
  std::vector<Report> out;
  auto append = [&](std::vector<Report> more) { out.insert(out.end(), more.begin(), more.end()); };
  const bool all = name == "all";
  if (!all && name != "semidirect" && name != "algebra" && name != "pgl3") {
    throw std::invalid_argument("unknown suite " + name);
  }
  if (all || name == "semidirect") {
    note("semidirect");
    append(semidirect_suite(bound.value_or(kSemidirectBound)));
  }
  if (all || name == "algebra") {
    note("algebra");
    append(algebra_suite(bound.value_or(kAlgebraBound)));
  }
  if (all || name == "pgl3") {
    note("pgl3");
    append(pgl3_suite(bound.value_or(kPgl3Bound)));
  }
  return out;
}

}  // namespace sbg::cli
