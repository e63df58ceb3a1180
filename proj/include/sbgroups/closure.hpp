#pragma once

// Finite groups generated inside some ambient multiplicative structure, found by
// breadth-first closure over canonical representatives.

#include <string>
#include <unordered_map>
#include <vector>

#include "sbgroups/error.hpp"
#include "sbgroups/group_kernel.hpp"

namespace sbg::group {

template <class T>
struct GeneratedGroup {
  FiniteGroup group;
  /// Canonical representative of each element; element 0 is the identity.
  std::vector<T> elements;
  /// Group element of each generator.
  std::vector<Element> generator_ids;
};

/// `canon` maps a value to its class representative and `key` serializes a
/// representative exactly. Throws CapExceeded once more than cap classes appear.
template <class T, class Mul, class Canon, class Key>
GeneratedGroup<T> close_under_products(const T& identity, const std::vector<T>& gens, Mul mul, Canon canon, Key key,
                                       std::size_t cap) {
  std::vector<T> reps;
  for (const auto& g : gens) reps.push_back(canon(g));
  std::vector<T> elements{canon(identity)};
  std::unordered_map<std::string, Element> index{{key(elements[0]), 0}};
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  std::vector<std::vector<Element>> right;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    right.emplace_back(reps.size());
    for (std::size_t g = 0; g < reps.size(); ++g) {
      T p = canon(mul(elements[e], reps[g]));
      std::string k = key(p);
      auto it = index.find(k);
      if (it == index.end()) {
        if (elements.size() >= cap) throw Error(ErrorKind::CapExceeded, "closure exceeds " + std::to_string(cap) + " elements");
        it = index.emplace(std::move(k), static_cast<Element>(elements.size())).first;
        elements.push_back(std::move(p));
        parent.push_back(static_cast<Element>(e));
        via.push_back(g);
      }
      right[e][g] = it->second;
    }
  }
  // Every f > 0 is parent(f) * gen(f), so e f = (e parent(f)) gen(f).
  const std::size_t n = elements.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t e = 0; e < n; ++e) {
    table[e][0] = static_cast<Element>(e);
    for (std::size_t f = 1; f < n; ++f) table[e][f] = right[table[e][parent[f]]][via[f]];
  }
  std::vector<Element> ids;
  for (const auto& r : reps) ids.push_back(index.at(key(r)));
  return GeneratedGroup<T>{FiniteGroup::from_table(table), std::move(elements), std::move(ids)};
}

}  // namespace sbg::group
