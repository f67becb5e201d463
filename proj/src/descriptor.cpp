#include "zdg/descriptor.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

namespace zdg {

// ---------------------------------------------------------------------------
// polynomial arithmetic over Z_m

void Poly::add_term(int ex, int ey, int c, int m) {
  c %= m;
  if (c < 0) c += m;
  Monomial mo{ex, ey};
  auto it = terms.find(mo);
  int v = (it == terms.end() ? 0 : it->second) + c;
  v %= m;
  if (v == 0) {
    if (it != terms.end()) terms.erase(it);
  } else if (it == terms.end()) {
    terms.emplace(mo, v);
  } else {
    it->second = v;
  }
}

int Poly::degree_x() const {
  int d = -1;
  for (auto& [mo, c] : terms) d = std::max(d, mo.ex);
  return d;
}

int Poly::degree_y() const {
  int d = -1;
  for (auto& [mo, c] : terms) d = std::max(d, mo.ey);
  return d;
}

Poly poly_add(const Poly& a, const Poly& b, int m) {
  Poly r = a;
  for (auto& [mo, c] : b.terms) r.add_term(mo.ex, mo.ey, c, m);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, int m) {
  Poly r;
  for (auto& [ma, ca] : a.terms)
    for (auto& [mb, cb] : b.terms)
      r.add_term(ma.ex + mb.ex, ma.ey + mb.ey, ca * cb, m);
  return r;
}

Poly poly_scale(const Poly& a, int c, int m) {
  Poly r;
  for (auto& [mo, co] : a.terms) r.add_term(mo.ex, mo.ey, co * c, m);
  return r;
}

std::string poly_to_string(const Poly& p) {
  if (p.terms.empty()) return "0";
  std::vector<std::pair<Monomial, int>> ts(p.terms.begin(), p.terms.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int ta = a.first.ex + a.first.ey, tb = b.first.ex + b.first.ey;
    if (ta != tb) return ta > tb;
    return a.first.ex > b.first.ex;
  });
  std::string out;
  for (auto& [mo, c] : ts) {
    if (!out.empty()) out += "+";
    bool has_var = mo.ex > 0 || mo.ey > 0;
    if (c != 1 || !has_var) out += std::to_string(c);
    if (mo.ex > 0) {
      out += "x";
      if (mo.ex > 1) out += "^" + std::to_string(mo.ex);
    }
    if (mo.ey > 0) {
      out += "y";
      if (mo.ey > 1) out += "^" + std::to_string(mo.ey);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// primality and irreducible search

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<int, int> prime_power_split(int n) {
  if (n < 2) return {0, 0};
  int p = 0;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) { p = d; break; }
  if (p == 0) return {n, 1};
  int k = 0, m = n;
  while (m % p == 0) { m /= p; ++k; }
  if (m != 1) return {0, 0};
  return {p, k};
}

namespace {

// Dense univariate coefficient vectors over Z_p, ascending degree, used only
// for the irreducible search.
using Vec = std::vector<int>;

Vec vec_mod(Vec a, const Vec& b, int p) {
  int db = static_cast<int>(b.size()) - 1;  // b monic
  while (static_cast<int>(a.size()) - 1 >= db) {
    int da = static_cast<int>(a.size()) - 1;
    int lead = a[da];
    if (lead != 0) {
      int shift = da - db;
      for (int i = 0; i <= db; ++i) {
        a[i + shift] = ((a[i + shift] - lead * b[i]) % p + p * p) % p;
      }
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

bool divides(const Vec& d, const Vec& f, int p) { return vec_mod(f, d, p).empty(); }

}  // namespace

std::vector<int> find_irreducible(int p, int k) {
  if (k == 1) return {0, 1};  // x; Z_p[x]/(x) = Z_p
  // Enumerate lower coefficients (c_0,...,c_{k-1}) as a base-p counter.
  int64_t total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  for (int64_t v = 0; v < total; ++v) {
    Vec f(k + 1, 0);
    f[k] = 1;
    int64_t t = v;
    for (int i = 0; i < k; ++i) { f[i] = static_cast<int>(t % p); t /= p; }
    if (f[0] == 0) continue;  // divisible by x
    bool reducible = false;
    for (int d = 1; !reducible && 2 * d <= k; ++d) {
      int64_t nd = 1;
      for (int i = 0; i < d; ++i) nd *= p;
      for (int64_t w = 0; w < nd && !reducible; ++w) {
        Vec g(d + 1, 0);
        g[d] = 1;
        int64_t u = w;
        for (int i = 0; i < d; ++i) { g[i] = static_cast<int>(u % p); u /= p; }
        if (divides(g, f, p)) reducible = true;
      }
    }
    if (!reducible) return f;
  }
  throw Error(ErrorKind::MalformedDescriptor,
              "no irreducible polynomial found (non-prime base?)");
}

// ---------------------------------------------------------------------------
// parser

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  char peek_lower() { return std::tolower(static_cast<unsigned char>(peek())); }

  void advance() { ++pos_; }

  std::size_t pos() const { return pos_; }

  void expect(char c, const char* what) {
    if (peek() != c)
      throw Error(ErrorKind::ParseError,
                  std::string("expected '") + c + "' (" + what + ") at offset " +
                      std::to_string(pos_),
                  pos_);
    advance();
  }

  bool try_consume(char c) {
    if (peek() == c) { advance(); return true; }
    return false;
  }

  int parse_int(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000'000) throw Error(ErrorKind::ParseError, "integer too large", start);
      ++pos_;
    }
    if (pos_ == start)
      throw Error(ErrorKind::ParseError,
                  std::string("expected integer (") + what + ") at offset " +
                      std::to_string(start),
                  start);
    return static_cast<int>(v);
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(const std::string& s) : cur_(s) {}

  RingDescriptor parse() {
    RingDescriptor d = parse_product();
    if (!cur_.at_end())
      throw Error(ErrorKind::ParseError,
                  "unexpected trailing input at offset " + std::to_string(cur_.pos()),
                  cur_.pos());
    return d;
  }

 private:
  Cursor cur_;

  RingDescriptor parse_product() {
    std::vector<RingDescriptor> factors;
    factors.push_back(parse_atom());
    while (cur_.peek_lower() == 'x') {
      cur_.advance();
      factors.push_back(parse_atom());
    }
    if (factors.size() == 1) return factors[0];
    RingDescriptor d;
    d.kind = RingDescriptor::Kind::Product;
    for (auto& f : factors) {
      if (f.kind == RingDescriptor::Kind::Product)
        for (auto& g : f.factors) d.factors.push_back(std::move(g));
      else
        d.factors.push_back(std::move(f));
    }
    return d;
  }

  RingDescriptor parse_atom() {
    char c = cur_.peek_lower();
    if (c == 'g') return parse_gf();
    if (c == 'z') return parse_z();
    throw Error(ErrorKind::ParseError,
                "expected ring atom (Z<n>, GF(<q>), quotient, or product) at offset " +
                    std::to_string(cur_.pos()),
                cur_.pos());
  }

  RingDescriptor parse_gf() {
    cur_.advance();  // g
    if (cur_.peek_lower() != 'f')
      throw Error(ErrorKind::ParseError, "expected 'GF' at offset " + std::to_string(cur_.pos()),
                  cur_.pos());
    cur_.advance();
    cur_.expect('(', "GF order");
    std::size_t qpos = cur_.pos();
    int q = cur_.parse_int("field order");
    cur_.expect(')', "GF order");
    auto [p, k] = prime_power_split(q);
    if (p == 0 || !is_prime(p))
      throw Error(ErrorKind::MalformedDescriptor,
                  "GF(" + std::to_string(q) + "): order is not a prime power", qpos);
    RingDescriptor d;
    d.kind = RingDescriptor::Kind::GFq;
    d.p = p;
    d.k = k;
    d.irreducible = find_irreducible(p, k);
    return d;
  }

  RingDescriptor parse_z() {
    cur_.advance();  // z
    std::size_t npos_ = cur_.pos();
    int n = cur_.parse_int("modulus");
    if (n < 2)
      throw Error(ErrorKind::MalformedDescriptor,
                  "Z" + std::to_string(n) + ": modulus must be at least 2", npos_);
    if (cur_.peek() != '[') {
      RingDescriptor d;
      d.kind = RingDescriptor::Kind::Zn;
      d.modulus = n;
      return d;
    }
    cur_.advance();  // [
    bool bivariate = false;
    if (cur_.peek_lower() != 'x')
      throw Error(ErrorKind::ParseError,
                  "expected indeterminate 'x' at offset " + std::to_string(cur_.pos()),
                  cur_.pos());
    cur_.advance();
    if (cur_.try_consume(',')) {
      if (cur_.peek_lower() != 'y')
        throw Error(ErrorKind::ParseError,
                    "expected indeterminate 'y' at offset " + std::to_string(cur_.pos()),
                    cur_.pos());
      cur_.advance();
      bivariate = true;
    }
    cur_.expect(']', "indeterminate list");
    cur_.expect('/', "quotient");
    cur_.expect('(', "generator list");
    std::vector<Poly> gens = parse_generators(n, bivariate);
    cur_.expect(')', "generator list");
    if (gens.empty())
      throw Error(ErrorKind::MalformedDescriptor,
                  "quotient has no nonzero generators");
    RingDescriptor d;
    d.kind = bivariate ? RingDescriptor::Kind::QuotientBi : RingDescriptor::Kind::QuotientUni;
    d.modulus = n;
    d.generators = std::move(gens);
    return d;
  }

  std::vector<Poly> parse_generators(int m, bool bivariate) {
    std::vector<Poly> gens;
    while (true) {
      if (cur_.peek() == '(') {
        // ideal power: (g1,...,gk)^e expands to all e-fold products
        cur_.advance();
        std::vector<Poly> base;
        base.push_back(parse_poly(m, bivariate));
        while (cur_.try_consume(',')) base.push_back(parse_poly(m, bivariate));
        cur_.expect(')', "ideal power");
        cur_.expect('^', "ideal power");
        std::size_t epos = cur_.pos();
        int e = cur_.parse_int("ideal power exponent");
        if (e < 1 || e > 8)
          throw Error(ErrorKind::MalformedDescriptor, "ideal power exponent out of range", epos);
        std::vector<Poly> prods{Poly{}};
        prods[0].add_term(0, 0, 1, m);  // start from 1
        std::vector<Poly> result;
        expand_power(base, e, 0, prods[0], m, result);
        for (auto& g : result)
          if (!g.is_zero() && std::find(gens.begin(), gens.end(), g) == gens.end())
            gens.push_back(g);
      } else {
        Poly g = parse_poly(m, bivariate);
        if (!g.is_zero() && std::find(gens.begin(), gens.end(), g) == gens.end())
          gens.push_back(g);
      }
      if (!cur_.try_consume(',')) break;
    }
    return gens;
  }

  // products of exactly e factors drawn from base with repetition (i <= j <= ...)
  void expand_power(const std::vector<Poly>& base, int remaining, std::size_t from,
                    const Poly& acc, int m, std::vector<Poly>& out) {
    if (remaining == 0) {
      out.push_back(acc);
      return;
    }
    for (std::size_t i = from; i < base.size(); ++i)
      expand_power(base, remaining - 1, i, poly_mul(acc, base[i], m), m, out);
  }

  Poly parse_poly(int m, bool bivariate) {
    Poly p;
    int sign = 1;
    if (cur_.try_consume('-')) sign = -1;
    parse_term(p, m, sign, bivariate);
    while (true) {
      if (cur_.try_consume('+')) {
        parse_term(p, m, 1, bivariate);
      } else if (cur_.try_consume('-')) {
        parse_term(p, m, -1, bivariate);
      } else {
        break;
      }
    }
    return p;
  }

  void parse_term(Poly& p, int m, int sign, bool bivariate) {
    cur_.skip_ws();
    std::size_t start = cur_.pos();
    int coeff = 1;
    bool saw_any = false;
    if (std::isdigit(static_cast<unsigned char>(cur_.peek()))) {
      coeff = cur_.parse_int("coefficient");
      saw_any = true;
    }
    int ex = 0, ey = 0;
    while (true) {
      char c = cur_.peek_lower();
      if (c == 'x' || c == 'y') {
        cur_.advance();
        int e = 1;
        if (cur_.try_consume('^')) e = cur_.parse_int("exponent");
        if (e < 0 || e > 64)
          throw Error(ErrorKind::MalformedDescriptor, "exponent out of range", start);
        if (c == 'x') {
          if (ex > 0) throw Error(ErrorKind::ParseError, "repeated indeterminate x", cur_.pos());
          ex = e;
        } else {
          if (!bivariate)
            throw Error(ErrorKind::ParseError,
                        "indeterminate y in a univariate quotient at offset " +
                            std::to_string(cur_.pos()),
                        cur_.pos());
          if (ey > 0) throw Error(ErrorKind::ParseError, "repeated indeterminate y", cur_.pos());
          ey = e;
        }
        saw_any = true;
      } else {
        break;
      }
    }
    if (!saw_any)
      throw Error(ErrorKind::ParseError,
                  "expected polynomial term at offset " + std::to_string(start), start);
    p.add_term(ex, ey, sign * coeff, m);
  }
};

}  // namespace

RingDescriptor parse_descriptor(const std::string& text) {
  Parser parser(text);
  return parser.parse();
}

std::string canonical_string(const RingDescriptor& d) {
  switch (d.kind) {
    case RingDescriptor::Kind::Zn:
      return "Z" + std::to_string(d.modulus);
    case RingDescriptor::Kind::GFq: {
      int64_t q = 1;
      for (int i = 0; i < d.k; ++i) q *= d.p;
      return "GF(" + std::to_string(q) + ")";
    }
    case RingDescriptor::Kind::QuotientUni:
    case RingDescriptor::Kind::QuotientBi: {
      std::string out = "Z" + std::to_string(d.modulus);
      out += d.kind == RingDescriptor::Kind::QuotientUni ? "[x]/(" : "[x,y]/(";
      for (std::size_t i = 0; i < d.generators.size(); ++i) {
        if (i) out += ",";
        out += poly_to_string(d.generators[i]);
      }
      out += ")";
      return out;
    }
    case RingDescriptor::Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < d.factors.size(); ++i) {
        if (i) out += "x";
        out += canonical_string(d.factors[i]);
      }
      return out;
    }
  }
  throw Error(ErrorKind::MalformedDescriptor, "unknown descriptor kind");
}

}  // namespace zdg
