#include "zdg/analysis.hpp"

#include <algorithm>
#include <set>

namespace zdg {

RingAnalysis analyze_ring(const FiniteRing& r) {
  const int n = r.order;
  RingAnalysis a;
  a.nilpotent_index.assign(n, 0);
  a.additive_orders.reserve(n);

  std::vector<char> is_unit(n, 0), is_zd(n, 0);
  for (int x = 0; x < n; ++x) {
    ElementClass c = classify_element(r, x);
    if (c.nilpotent_index) {
      a.nilpotent_index[x] = *c.nilpotent_index;
      a.nilradical.push_back(x);
    }
    switch (c.kind) {
      case ElementKind::Unit: is_unit[x] = 1; a.units.push_back(x); break;
      case ElementKind::ZeroDivisor: is_zd[x] = 1; a.zero_divisors_star.push_back(x); break;
      case ElementKind::Zero: break;
    }
    a.additive_orders.push_back(additive_order(r, x));
  }
  a.characteristic = a.additive_orders[r.one];
  a.is_field = a.zero_divisors_star.empty();
  a.is_reduced = a.nilradical.size() == 1;  // just 0

  // local iff Z(R) = Z(R)* U {0} is closed under addition
  std::vector<int> zset = a.zero_divisors_star;
  zset.insert(zset.begin(), r.zero);
  std::sort(zset.begin(), zset.end());
  std::vector<char> in_z(n, 0);
  for (int x : zset) in_z[x] = 1;
  a.is_local = true;
  for (std::size_t i = 0; i < zset.size() && a.is_local; ++i)
    for (std::size_t j = i; j < zset.size(); ++j)
      if (!in_z[r.add(zset[i], zset[j])]) { a.is_local = false; break; }
  if (a.is_local) a.maximal_ideal = zset;

  // co-local: unique minimal member among nonzero principal ideals.
  // Fields have no nontrivial proper ideals at all, so the condition is
  // vacuous; core stays absent.
  if (a.is_field) {
    a.is_colocal = true;
  } else {
    std::set<std::vector<int>> ideals;
    for (int x = 0; x < n; ++x) {
      if (x == r.zero) continue;
      std::set<int> gen;
      for (int u = 0; u < n; ++u) gen.insert(r.mul(u, x));
      ideals.emplace(gen.begin(), gen.end());
    }
    std::vector<std::vector<int>> distinct(ideals.begin(), ideals.end());
    auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
      return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    std::vector<const std::vector<int>*> minimal;
    for (const auto& i : distinct) {
      bool is_min = true;
      for (const auto& j : distinct)
        if (&j != &i && contains(i, j)) { is_min = false; break; }
      if (is_min) minimal.push_back(&i);
    }
    if (minimal.size() == 1) {
      a.is_colocal = true;
      a.colocal_core = *minimal[0];
    }
  }

  // X*: vertices annihilated by exactly the whole of Z(R)
  for (int x : a.zero_divisors_star) {
    std::vector<int> ann = annihilator(r, x);
    if (ann == zset) a.full_annihilator_set.push_back(x);
  }
  return a;
}

}  // namespace zdg
