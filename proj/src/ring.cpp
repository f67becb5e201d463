#include "zdg/ring.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace zdg {

namespace {

void require_cap(int64_t size, int cap, const std::string& what) {
  if (size > cap)
    throw Error(ErrorKind::OrderCapExceeded,
                what + " has size " + std::to_string(size) + ", above the cap of " +
                    std::to_string(cap));
}

FiniteRing build_zn(int n, const RingDescriptor& d, int cap) {
  require_cap(n, cap, "Z" + std::to_string(n));
  FiniteRing r;
  r.order = n;
  r.zero = 0;
  r.one = 1;
  r.descriptor = d;
  r.add_table.resize(static_cast<std::size_t>(n) * n);
  r.mul_table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      r.add_table[a * n + b] = static_cast<uint16_t>((a + b) % n);
      r.mul_table[a * n + b] = static_cast<uint16_t>((a * b) % n);
    }
  r.labels.reserve(n);
  for (int a = 0; a < n; ++a) r.labels.push_back(std::to_string(a));
  return r;
}

// --- polynomial carrier shared by GF(q) and both quotient kinds -------------
//
// Carrier elements are coefficient grids over monomials x^i y^j with i < dx,
// j < dy (univariate: dy = 1). Products are reduced with the degree-bounding
// rewrite rules x^dx -> rule_x, y^dy -> rule_y until every exponent is in
// range; the rewrite loop is capped so a non-terminating generator set is
// reported instead of hanging.
struct Carrier {
  int m = 0;
  int dx = 1, dy = 1;
  Poly rule_x, rule_y;  // right-hand sides
  bool has_rule_y = false;

  int slots() const { return dx * dy; }

  int64_t size() const {
    int64_t s = 1;
    for (int i = 0; i < slots(); ++i) s *= m;
    return s;
  }

  int encode(const Poly& p) const {
    int64_t idx = 0;
    for (int s = slots() - 1; s >= 0; --s) {
      int i = s % dx, j = s / dx;
      idx = idx * m + p.coeff(i, j);
    }
    return static_cast<int>(idx);
  }

  Poly decode(int idx) const {
    Poly p;
    for (int s = 0; s < slots(); ++s) {
      int c = idx % m;
      idx /= m;
      if (c) p.add_term(s % dx, s / dx, c, m);
    }
    return p;
  }

  Poly reduce(Poly p) const {
    int steps = 0;
    while (true) {
      auto dirty = p.terms.end();
      for (auto it = p.terms.begin(); it != p.terms.end(); ++it) {
        if (it->first.ex >= dx || it->first.ey >= dy) { dirty = it; break; }
      }
      if (dirty == p.terms.end()) return p;
      if (++steps > 100000)
        throw Error(ErrorKind::MalformedDescriptor,
                    "generator rewriting does not terminate");
      Monomial mo = dirty->first;
      int c = dirty->second;
      p.terms.erase(dirty);
      const Poly& rule = mo.ex >= dx ? rule_x : rule_y;
      int sx = mo.ex >= dx ? mo.ex - dx : mo.ex;
      int sy = mo.ex >= dx ? mo.ey : mo.ey - dy;
      for (auto& [rm, rc] : rule.terms)
        p.add_term(rm.ex + sx, rm.ey + sy, c * rc, m);
    }
  }

  Poly mul(const Poly& a, const Poly& b) const { return reduce(poly_mul(a, b, m)); }
  Poly add(const Poly& a, const Poly& b) const { return poly_add(a, b, m); }
};

int mod_inverse(int a, int m) {
  a %= m;
  if (a < 0) a += m;
  for (int x = 1; x < m; ++x)
    if ((a * x) % m == 1) return x;
  return 0;
}

// Picks the lowest-degree generator with a unit leading coefficient in the
// given variable and turns it into a rewrite rule top_monomial -> lower terms.
// Returns the bounding degree, or 0 if none usable.
int extract_rule(const std::vector<Poly>& gens, int m, bool in_y, Poly& rule_out) {
  int best_deg = 0, best_idx = -1, best_inv = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Poly& g = gens[i];
    int d = in_y ? g.degree_y() : g.degree_x();
    if (d < 1) continue;
    // the top monomial must be pure in this variable and every other term
    // strictly lower in it
    int lead = in_y ? g.coeff(0, d) : g.coeff(d, 0);
    if (lead == 0) continue;
    bool pure = true;
    for (auto& [mo, c] : g.terms) {
      int e = in_y ? mo.ey : mo.ex;
      if (e > d || (e == d && !(in_y ? (mo.ex == 0) : (mo.ey == 0)))) pure = false;
      if (e == d && (in_y ? mo.ex : mo.ey) == 0 && c != lead) pure = false;
    }
    if (!pure) continue;
    int inv = mod_inverse(lead, m);
    if (inv == 0) continue;
    if (best_idx < 0 || d < best_deg) { best_deg = d; best_idx = static_cast<int>(i); best_inv = inv; }
  }
  if (best_idx < 0) return 0;
  // x^d = -inv * (g - lead x^d)
  Poly rhs;
  for (auto& [mo, c] : gens[best_idx].terms) {
    int e = in_y ? mo.ey : mo.ex;
    if (e == best_deg && (in_y ? mo.ex : mo.ey) == 0) continue;
    rhs.add_term(mo.ex, mo.ey, -c * best_inv, m);
  }
  rule_out = rhs;
  return best_deg;
}

FiniteRing build_from_carrier(const Carrier& car, const std::vector<Poly>& gens,
                              const RingDescriptor& d, int cap) {
  require_cap(car.size(), cap, "polynomial carrier for " + canonical_string(d));
  int n = static_cast<int>(car.size());

  // ideal: additive closure of every monomial multiple of every generator
  std::vector<char> in_ideal(n, 0);
  std::vector<int> multiples;
  for (const Poly& g : gens) {
    for (int i = 0; i < car.dx; ++i)
      for (int j = 0; j < car.dy; ++j) {
        Poly mono;
        mono.add_term(i, j, 1, car.m);
        multiples.push_back(car.encode(car.mul(mono, g)));
      }
  }
  std::vector<int> work{car.encode(Poly{})};
  in_ideal[work[0]] = 1;
  while (!work.empty()) {
    int a = work.back();
    work.pop_back();
    Poly pa = car.decode(a);
    for (int v : multiples) {
      int b = car.encode(car.add(pa, car.decode(v)));
      if (!in_ideal[b]) { in_ideal[b] = 1; work.push_back(b); }
    }
  }

  // cosets: canonical representative is the smallest member
  std::vector<int> ideal_elems;
  for (int i = 0; i < n; ++i)
    if (in_ideal[i]) ideal_elems.push_back(i);
  std::vector<int> rep_of(n, -1);
  std::vector<int> reps;
  for (int e = 0; e < n; ++e) {
    if (rep_of[e] != -1) continue;
    Poly pe = car.decode(e);
    for (int j : ideal_elems) {
      int member = car.encode(car.add(pe, car.decode(j)));
      rep_of[member] = e;
    }
    reps.push_back(e);
  }

  int q = static_cast<int>(reps.size());
  if (q < 2)
    throw Error(ErrorKind::NotUnital,
                "quotient " + canonical_string(d) + " collapses to the zero ring");

  std::vector<int> qindex(n, -1);
  for (int i = 0; i < q; ++i) qindex[reps[i]] = i;

  FiniteRing r;
  r.order = q;
  r.descriptor = d;
  r.add_table.resize(static_cast<std::size_t>(q) * q);
  r.mul_table.resize(static_cast<std::size_t>(q) * q);
  std::vector<Poly> rep_polys(q);
  for (int i = 0; i < q; ++i) rep_polys[i] = car.decode(reps[i]);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      int s = car.encode(car.add(rep_polys[i], rep_polys[j]));
      int p = car.encode(car.mul(rep_polys[i], rep_polys[j]));
      r.add_table[i * q + j] = static_cast<uint16_t>(qindex[rep_of[s]]);
      r.mul_table[i * q + j] = static_cast<uint16_t>(qindex[rep_of[p]]);
    }

  r.zero = qindex[rep_of[car.encode(Poly{})]];
  Poly one_poly;
  one_poly.add_term(0, 0, 1, car.m);
  int one_candidate = qindex[rep_of[car.encode(car.reduce(one_poly))]];
  auto is_identity = [&](int e) {
    for (int x = 0; x < q; ++x)
      if (r.mul(e, x) != x) return false;
    return true;
  };
  if (is_identity(one_candidate)) {
    r.one = one_candidate;
  } else {
    int found = -1;
    for (int e = 0; e < q && found < 0; ++e)
      if (is_identity(e)) found = e;
    if (found < 0)
      throw Error(ErrorKind::NotUnital,
                  "quotient " + canonical_string(d) + " has no multiplicative identity");
    r.one = found;
  }
  if (r.one == r.zero)
    throw Error(ErrorKind::NotUnital,
                "quotient " + canonical_string(d) + " collapses to the zero ring");

  r.labels.reserve(q);
  for (int i = 0; i < q; ++i) r.labels.push_back(poly_to_string(rep_polys[i]));
  return r;
}

FiniteRing build_gf(const RingDescriptor& d, int cap) {
  Carrier car;
  car.m = d.p;
  car.dx = d.k;
  car.dy = 1;
  Poly rhs;
  for (int i = 0; i < d.k; ++i)
    rhs.add_term(i, 0, -d.irreducible[i], d.p);  // monic: x^k = -(lower part)
  car.rule_x = rhs;
  car.rule_y = Poly{};
  return build_from_carrier(car, {}, d, cap);
}

FiniteRing build_quotient(const RingDescriptor& d, int cap) {
  bool bi = d.kind == RingDescriptor::Kind::QuotientBi;
  Carrier car;
  car.m = d.modulus;
  car.dx = extract_rule(d.generators, d.modulus, false, car.rule_x);
  if (car.dx == 0)
    throw Error(ErrorKind::MalformedDescriptor,
                canonical_string(d) +
                    ": no generator bounds the degree in x (unit leading coefficient needed)");
  if (bi) {
    car.dy = extract_rule(d.generators, d.modulus, true, car.rule_y);
    if (car.dy == 0)
      throw Error(ErrorKind::MalformedDescriptor,
                  canonical_string(d) +
                      ": no generator bounds the degree in y (unit leading coefficient needed)");
    car.has_rule_y = true;
  }
  require_cap(car.size(), cap, "polynomial carrier for " + canonical_string(d));
  std::vector<Poly> reduced;
  for (const Poly& g : d.generators) {
    Poly rg = car.reduce(g);
    if (!rg.is_zero()) reduced.push_back(rg);
  }
  return build_from_carrier(car, reduced, d, cap);
}

FiniteRing build_product(const RingDescriptor& d, int cap) {
  std::vector<FiniteRing> parts;
  int64_t total = 1;
  for (const auto& f : d.factors) {
    parts.push_back(build_ring(f, cap));
    total *= parts.back().order;
    require_cap(total, cap, "product " + canonical_string(d));
  }
  int n = static_cast<int>(total);
  int nf = static_cast<int>(parts.size());

  // mixed-radix, leftmost factor most significant
  auto decode = [&](int idx, std::vector<int>& comps) {
    for (int i = nf - 1; i >= 0; --i) {
      comps[i] = idx % parts[i].order;
      idx /= parts[i].order;
    }
  };
  auto encode = [&](const std::vector<int>& comps) {
    int idx = 0;
    for (int i = 0; i < nf; ++i) idx = idx * parts[i].order + comps[i];
    return idx;
  };

  FiniteRing r;
  r.order = n;
  r.descriptor = d;
  r.add_table.resize(static_cast<std::size_t>(n) * n);
  r.mul_table.resize(static_cast<std::size_t>(n) * n);
  std::vector<std::vector<int>> comp(n, std::vector<int>(nf));
  for (int a = 0; a < n; ++a) decode(a, comp[a]);
  std::vector<int> tmp(nf);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < nf; ++i) tmp[i] = parts[i].add(comp[a][i], comp[b][i]);
      r.add_table[a * n + b] = static_cast<uint16_t>(encode(tmp));
      for (int i = 0; i < nf; ++i) tmp[i] = parts[i].mul(comp[a][i], comp[b][i]);
      r.mul_table[a * n + b] = static_cast<uint16_t>(encode(tmp));
    }
  for (int i = 0; i < nf; ++i) tmp[i] = parts[i].zero;
  r.zero = encode(tmp);
  for (int i = 0; i < nf; ++i) tmp[i] = parts[i].one;
  r.one = encode(tmp);
  r.labels.reserve(n);
  for (int a = 0; a < n; ++a) {
    std::string l = "(";
    for (int i = 0; i < nf; ++i) {
      if (i) l += ",";
      l += parts[i].labels[comp[a][i]];
    }
    l += ")";
    r.labels.push_back(l);
  }
  return r;
}

}  // namespace

FiniteRing build_ring(const RingDescriptor& d, int order_cap) {
  FiniteRing r;
  switch (d.kind) {
    case RingDescriptor::Kind::Zn: r = build_zn(d.modulus, d, order_cap); break;
    case RingDescriptor::Kind::GFq: r = build_gf(d, order_cap); break;
    case RingDescriptor::Kind::QuotientUni:
    case RingDescriptor::Kind::QuotientBi: r = build_quotient(d, order_cap); break;
    case RingDescriptor::Kind::Product: r = build_product(d, order_cap); break;
  }
  r.descriptor_string = canonical_string(d);
  return r;
}

FiniteRing build_ring(const std::string& descriptor_text, int order_cap) {
  return build_ring(parse_descriptor(descriptor_text), order_cap);
}

void check_ring_axioms(const FiniteRing& r) {
  const int n = r.order;
  auto fail = [&](const std::string& law) {
    throw Error(ErrorKind::MalformedDescriptor,
                r.descriptor_string + ": ring axiom violated (" + law + ")");
  };
  if (n < 2) fail("order >= 2");
  if (r.zero == r.one) fail("0 != 1");
  for (int a = 0; a < n; ++a) {
    if (r.add(a, r.zero) != a) fail("additive identity");
    if (r.mul(a, r.one) != a) fail("multiplicative identity");
    bool has_neg = false;
    for (int b = 0; b < n && !has_neg; ++b)
      if (r.add(a, b) == r.zero) has_neg = true;
    if (!has_neg) fail("additive inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) fail("commutativity of +");
      if (r.mul(a, b) != r.mul(b, a)) fail("commutativity of *");
    }
  auto check_triple = [&](int a, int b, int c) {
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) fail("associativity of +");
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) fail("associativity of *");
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) fail("distributivity");
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937 rng(0xC0FFEE);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 20000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
  }
}

std::vector<int> annihilator(const FiniteRing& r, int x) {
  std::vector<int> out;
  for (int u = 0; u < r.order; ++u)
    if (r.mul(u, x) == r.zero) out.push_back(u);
  return out;
}

ElementClass classify_element(const FiniteRing& r, int x) {
  ElementClass c{ElementKind::ZeroDivisor, std::nullopt};
  // nilpotent index by iterated powers (cycle-free: either hits zero or loops)
  int pow = x, k = 1;
  for (; k <= r.order; ++k) {
    if (pow == r.zero) break;
    pow = r.mul(pow, x);
  }
  if (pow == r.zero) c.nilpotent_index = k;
  if (x == r.zero) {
    c.kind = ElementKind::Zero;
    return c;
  }
  for (int u = 0; u < r.order; ++u)
    if (r.mul(x, u) == r.one) {
      c.kind = ElementKind::Unit;
      return c;
    }
  c.kind = ElementKind::ZeroDivisor;
  return c;
}

int additive_order(const FiniteRing& r, int x) {
  int acc = x, t = 1;
  while (acc != r.zero) {
    acc = r.add(acc, x);
    ++t;
  }
  return t;
}

}  // namespace zdg
