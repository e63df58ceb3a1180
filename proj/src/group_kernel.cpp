#include "sbgroups/group_kernel.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "sbgroups/error.hpp"
#include "sbgroups/residue_arith.hpp"

namespace sbg::group {

namespace {

constexpr Element kUnset = std::numeric_limits<Element>::max();

void require_order(std::uint64_t order) {
  if (order == 0) throw std::invalid_argument("group order must be positive");
  if (order > kMaxOrder) {
    throw Error(ErrorKind::TooLarge,
                "order " + std::to_string(order) + " exceeds the table cap " + std::to_string(kMaxOrder));
  }
}

std::vector<bool> membership(std::size_t order, const Subgroup& h) {
  std::vector<bool> in(order, false);
  for (Element e : h) in[e] = true;
  return in;
}

// Greedy generators of a subgroup given by its elements.
std::vector<Element> subgroup_generators(const FiniteGroup& g, const Subgroup& h) {
  std::vector<Element> gens;
  std::vector<bool> span = membership(g.order(), {0});
  std::size_t span_size = 1;
  std::vector<Element> by_order(h.begin(), h.end());
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return g.element_order(a) > g.element_order(b); });
  for (Element e : by_order) {
    if (span_size == h.size()) break;
    if (span[e]) continue;
    gens.push_back(e);
    const auto s = generated_subgroup(g, gens);
    span = membership(g.order(), s);
    span_size = s.size();
  }
  return gens;
}

bool generators_commute(const FiniteGroup& g, const std::vector<Element>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<std::uint16_t> table)
    : order_(order), table_(std::move(table)), inverse_(order, kUnset), orders_(order, 0) {
  // Walk each cyclic subgroup once; a^j has order k / gcd(j, k) and inverse a^{k-j}.
  std::vector<Element> cycle;
  for (Element a = 0; a < order_; ++a) {
    if (orders_[a] != 0) continue;
    cycle.assign(1, a);
    for (Element x = a; x != 0;) {
      x = mul(x, a);
      cycle.push_back(x);
    }
    const std::size_t k = cycle.size();
    for (std::size_t j = 1; j <= k; ++j) {
      orders_[cycle[j - 1]] = static_cast<std::uint32_t>(k / std::gcd(j, k));
      inverse_[cycle[j - 1]] = j == k ? 0 : cycle[k - j - 1];
    }
  }
}

FiniteGroup FiniteGroup::from_trusted(std::size_t order, std::vector<std::uint16_t> table) {
  require_order(order);
  return FiniteGroup(order, std::move(table));
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Element>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorKind::MalformedTable, "empty table");
  require_order(n);
  std::vector<std::uint16_t> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) throw Error(ErrorKind::MalformedTable, "row " + std::to_string(a) + " has wrong length");
    for (std::size_t b = 0; b < n; ++b) {
      if (rows[a][b] >= n) throw Error(ErrorKind::MalformedTable, "entry out of range in row " + std::to_string(a));
      flat[a * n + b] = static_cast<std::uint16_t>(rows[a][b]);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (flat[a] != a || flat[a * n] != a) throw Error(ErrorKind::MalformedTable, "element 0 is not the identity");
  }
  std::vector<std::size_t> seen_row(n, n), seen_col(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (seen_row[flat[a * n + b]] == a) throw Error(ErrorKind::MalformedTable, "row " + std::to_string(a) + " repeats an entry");
      seen_row[flat[a * n + b]] = a;
      if (seen_col[flat[b * n + a]] == a) throw Error(ErrorKind::MalformedTable, "column " + std::to_string(a) + " repeats an entry");
      seen_col[flat[b * n + a]] = a;
    }
  }
  FiniteGroup g(n, std::move(flat));
  // Light's test: associativity on a generating set implies it everywhere.
  for (Element s : generating_set(g)) {
    for (Element a = 0; a < n; ++a) {
      const Element as = g.mul(a, s);
      for (Element b = 0; b < n; ++b) {
        if (g.mul(as, b) != g.mul(a, g.mul(s, b))) {
          throw Error(ErrorKind::MalformedTable, "table is not associative");
        }
      }
    }
  }
  return g;
}

Element FiniteGroup::power(Element a, long long k) const {
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  k %= static_cast<long long>(orders_[a]);
  Element result = 0;
  while (k > 0) {
    if (k & 1) result = mul(result, a);
    a = mul(a, a);
    k >>= 1;
  }
  return result;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> rows(order_, std::vector<Element>(order_));
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) rows[a][b] = mul(a, b);
  }
  return rows;
}

FiniteGroup build_semidirect(std::uint64_t n, std::uint64_t m, std::uint64_t d) {
  if (n == 0 || m == 0) throw std::invalid_argument("build_semidirect: n and m must be positive");
  if (nt::gcd(d % n, n) != 1 || nt::pow_mod(d, m, n) != 1 % n) {
    throw Error(ErrorKind::BadCharacter,
                std::to_string(d) + "^" + std::to_string(m) + " != 1 mod " + std::to_string(n));
  }
  require_order(n * m);
  std::vector<std::uint64_t> dpow(m);
  for (std::uint64_t r = 0; r < m; ++r) dpow[r] = nt::pow_mod(d, r, n);
  const std::size_t order = n * m;
  std::vector<std::uint16_t> table(order * order);
  for (std::uint64_t r1 = 0; r1 < m; ++r1) {
    for (std::uint64_t s1 = 0; s1 < n; ++s1) {
      std::uint16_t* row = &table[(r1 * n + s1) * order];
      for (std::uint64_t r2 = 0; r2 < m; ++r2) {
        const std::uint64_t r = (r1 + r2) % m;
        const std::uint64_t shifted = s1 * dpow[r2] % n;
        for (std::uint64_t s2 = 0; s2 < n; ++s2) {
          const std::uint64_t s = shifted + s2;
          row[r2 * n + s2] = static_cast<std::uint16_t>(r * n + (s >= n ? s - n : s));
        }
      }
    }
  }
  return FiniteGroup::from_trusted(order, std::move(table));
}

FiniteGroup build_cyclic(std::uint64_t n) { return build_semidirect(n, 1, 1 % n); }

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t a = g.order(), b = h.order();
  require_order(a * b);
  const std::size_t order = a * b;
  std::vector<std::uint16_t> table(order * order);
  for (Element g1 = 0; g1 < a; ++g1) {
    for (Element h1 = 0; h1 < b; ++h1) {
      std::uint16_t* row = &table[(g1 * b + h1) * order];
      for (Element g2 = 0; g2 < a; ++g2) {
        const std::size_t base = g.mul(g1, g2) * b;
        for (Element h2 = 0; h2 < b; ++h2) row[g2 * b + h2] = static_cast<std::uint16_t>(base + h.mul(h1, h2));
      }
    }
  }
  return FiniteGroup::from_trusted(order, std::move(table));
}

FiniteGroup elementary_abelian_3(unsigned k) {
  if (k > 3) throw std::invalid_argument("elementary_abelian_3: k must be at most 3");
  FiniteGroup out = build_cyclic(1);
  for (unsigned i = 0; i < k; ++i) out = direct_product(out, build_cyclic(3));
  return out;
}

FiniteGroup build_heisenberg(std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("build_heisenberg: p must be at least 2");
  require_order(p * p * p);
  const std::size_t order = p * p * p;
  std::vector<std::uint16_t> table(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x / (p * p), b = x / p % p, c = x % p;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t a2 = y / (p * p), b2 = y / p % p, c2 = y % p;
      table[x * order + y] =
          static_cast<std::uint16_t>((a + a2) % p * p * p + (b + b2) % p * p + (c + c2 + a * b2) % p);
    }
  }
  return FiniteGroup::from_trusted(order, std::move(table));
}

bool is_abelian(const FiniteGroup& g) { return generators_commute(g, generating_set(g)); }

std::map<std::size_t, std::size_t> element_orders(const FiniteGroup& g) {
  std::map<std::size_t, std::size_t> out;
  for (auto o : g.orders()) ++out[o];
  return out;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<bool> seen(g.order(), false);
  Subgroup out{0};
  seen[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Element s : gens) {
      const Element next = g.mul(out[i], s);
      if (!seen[next]) {
        seen[next] = true;
        out.push_back(next);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> generating_set(const FiniteGroup& g) {
  Subgroup all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return subgroup_generators(g, all);
}

Subgroup center(const FiniteGroup& g) {
  const auto gens = generating_set(g);
  Subgroup out;
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element s : gens) central = central && g.mul(a, s) == g.mul(s, a);
    if (central) out.push_back(a);
  }
  return out;
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  const auto gens = generating_set(g);
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> conjugates;
  auto add = [&](Element e) {
    if (!seen[e]) {
      seen[e] = true;
      conjugates.push_back(e);
    }
  };
  for (Element a : gens) {
    for (Element b : gens) add(g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b)));
  }
  for (std::size_t i = 0; i < conjugates.size(); ++i) {
    for (Element s : gens) add(g.mul(g.mul(g.inverse(s), conjugates[i]), s));
  }
  return generated_subgroup(g, conjugates);
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  const auto in = membership(g.order(), h);
  for (Element s : generating_set(g)) {
    for (Element e : h) {
      if (!in[g.mul(g.mul(g.inverse(s), e), s)]) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& g) {
  if (!is_abelian(g)) throw Error(ErrorKind::NotAbelian, "abelian_invariants needs an abelian group");
  std::vector<std::uint64_t> factors;  // descending after assembly
  for (const auto& pp : nt::factorize(g.order()).factors) {
    const std::uint64_t p = pp.prime;
    // s_j = log_p #{a : a^{p^j} = 1} = sum_i min(j, e_i).
    std::vector<unsigned> s{0};
    std::uint64_t q = 1;
    while (s.back() < pp.exponent) {
      q *= p;
      std::size_t count = 0;
      for (auto o : g.orders()) count += q % o == 0;
      unsigned log = 0;
      while (count > 1) {
        count /= p;
        ++log;
      }
      s.push_back(log);
    }
    // Number of cyclic factors with exponent >= j is s_j - s_{j-1}.
    std::vector<unsigned> exponents;
    for (std::size_t j = 1; j < s.size(); ++j) {
      const unsigned at_least_j = s[j] - s[j - 1];
      const unsigned at_least_next = j + 1 < s.size() ? s[j + 1] - s[j] : 0;
      for (unsigned c = 0; c < at_least_j - at_least_next; ++c) exponents.push_back(static_cast<unsigned>(j));
    }
    std::sort(exponents.rbegin(), exponents.rend());
    if (factors.size() < exponents.size()) factors.resize(exponents.size(), 1);
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      for (unsigned e = 0; e < exponents[i]; ++e) factors[i] *= p;
    }
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

namespace {

struct Profile {
  std::size_t order;
  bool abelian;
  std::map<std::size_t, std::size_t> orders;
  std::size_t center;
  std::size_t derived;

  friend bool operator==(const Profile&, const Profile&) = default;
};

Profile profile(const FiniteGroup& g) {
  return {g.order(), is_abelian(g), element_orders(g), center(g).size(), derived_subgroup(g).size()};
}

// Extends generator images to a map on all of g, checking every edge of the
// Cayley graph; succeeds iff the images define an injective homomorphism.
std::optional<std::vector<Element>> extend(const FiniteGroup& g, const FiniteGroup& h,
                                           const std::vector<Element>& gens, const std::vector<Element>& images) {
  std::vector<Element> map(g.order(), kUnset);
  std::vector<bool> used(h.order(), false);
  std::vector<Element> queue{0};
  map[0] = 0;
  used[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element w = queue[i];
    for (std::size_t t = 0; t < gens.size(); ++t) {
      const Element u = g.mul(w, gens[t]);
      const Element v = h.mul(map[w], images[t]);
      if (map[u] == kUnset) {
        if (used[v]) return std::nullopt;
        map[u] = v;
        used[v] = true;
        queue.push_back(u);
      } else if (map[u] != v) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != g.order()) return std::nullopt;
  return map;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FiniteGroup& g, const FiniteGroup& h) : g_(g), h_(h), gens_(generating_set(g)) {
    const std::size_t k = gens_.size();
    product_order_.assign(k, std::vector<std::size_t>(k));
    conj_exponent_.assign(k, std::vector<long long>(k, -1));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        product_order_[i][j] = g.element_order(g.mul(gens_[i], gens_[j]));
        const Element conj = g.mul(g.mul(g.inverse(gens_[i]), gens_[j]), gens_[i]);
        Element x = 0;
        for (std::size_t e = 0; e < g.element_order(gens_[j]); ++e, x = g.mul(x, gens_[j])) {
          if (x == conj) {
            conj_exponent_[i][j] = static_cast<long long>(e);
            break;
          }
        }
      }
      std::vector<Element> cands;
      for (Element b = 0; b < h.order(); ++b) {
        if (h.element_order(b) == g.element_order(gens_[i])) cands.push_back(b);
      }
      candidates_.push_back(std::move(cands));
    }
    images_.resize(k);
  }

  std::optional<Isomorphism> run() {
    if (auto map = search(0)) return Isomorphism{gens_, images_, std::move(*map)};
    return std::nullopt;
  }

 private:
  bool consistent(std::size_t i, Element c) const {
    for (std::size_t j = 0; j < i; ++j) {
      const Element hj = images_[j];
      if (conj_exponent_[i][j] >= 0 &&
          h_.mul(h_.mul(h_.inverse(c), hj), c) != h_.power(hj, conj_exponent_[i][j])) {
        return false;
      }
      if (h_.element_order(h_.mul(c, hj)) != product_order_[i][j]) return false;
    }
    return true;
  }

  std::optional<std::vector<Element>> search(std::size_t i) {
    if (i == gens_.size()) return extend(g_, h_, gens_, images_);
    for (Element c : candidates_[i]) {
      if (!consistent(i, c)) continue;
      images_[i] = c;
      if (auto map = search(i + 1)) return map;
    }
    return std::nullopt;
  }

  const FiniteGroup& g_;
  const FiniteGroup& h_;
  std::vector<Element> gens_;
  std::vector<std::vector<std::size_t>> product_order_;
  std::vector<std::vector<long long>> conj_exponent_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> images_;
};

}  // namespace

std::optional<Isomorphism> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (!(profile(g) == profile(h))) return std::nullopt;
  return IsomorphismSearch(g, h).run();
}

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) { return find_isomorphism(g, h).has_value(); }

std::vector<Subgroup> normal_abelian_index3_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  if (g.order() % 3 != 0) return out;
  const auto gens = generating_set(g);
  const std::size_t k = gens.size();
  std::vector<int> value(g.order());
  // Enumerate homomorphisms to Z/3 by generator values; the first nonzero value is
  // fixed to 1 so each kernel is produced once.
  std::vector<int> assignment(k, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 3;
  for (std::size_t code = 1; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < k; ++i, c /= 3) assignment[i] = static_cast<int>(c % 3);
    const auto first = std::find_if(assignment.begin(), assignment.end(), [](int v) { return v != 0; });
    if (*first != 1) continue;
    std::fill(value.begin(), value.end(), -1);
    value[0] = 0;
    std::vector<Element> queue{0};
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q) {
      for (std::size_t t = 0; t < k && ok; ++t) {
        const Element u = g.mul(queue[q], gens[t]);
        const int v = (value[queue[q]] + assignment[t]) % 3;
        if (value[u] < 0) {
          value[u] = v;
          queue.push_back(u);
        } else {
          ok = value[u] == v;
        }
      }
    }
    if (!ok) continue;
    Subgroup kernel;
    for (Element a = 0; a < g.order(); ++a) {
      if (value[a] == 0) kernel.push_back(a);
    }
    if (generators_commute(g, subgroup_generators(g, kernel))) out.push_back(std::move(kernel));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Complement split_over(const FiniteGroup& g, const Subgroup& h) {
  if (h.size() * 3 != g.order()) throw std::invalid_argument("split_over: subgroup must have index 3");
  const auto in = membership(g.order(), h);
  for (Element a = 0; a < g.order(); ++a) {
    if (in[a]) continue;
    const std::size_t o = g.element_order(a);
    // a maps to a generator of G/H, so 3 | o; a^{o/3} avoids H when 3 does not divide o/3.
    if (o % 3 == 0 && (o / 3) % 3 != 0) {
      const Element c = g.power(a, static_cast<long long>(o / 3));
      return {c, generated_subgroup(g, {c})};
    }
  }
  throw Error(ErrorKind::NoSplit, "every element outside the subgroup has order divisible by 9");
}

}  // namespace sbg::group
