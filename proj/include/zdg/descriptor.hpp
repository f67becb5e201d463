#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "zdg/errors.hpp"

namespace zdg {

// Exponents of one monomial; univariate polynomials keep ey == 0.
struct Monomial {
  int ex = 0;
  int ey = 0;
  auto operator<=>(const Monomial&) const = default;
};

// Sparse polynomial over Z_m in at most two indeterminates. Coefficients are
// kept normalized to 0..m-1 and zero terms are dropped, so equality of the
// term maps is equality of polynomials.
struct Poly {
  std::map<Monomial, int> terms;

  bool is_zero() const { return terms.empty(); }
  int coeff(int ex, int ey = 0) const {
    auto it = terms.find(Monomial{ex, ey});
    return it == terms.end() ? 0 : it->second;
  }
  void add_term(int ex, int ey, int c, int m);
  int degree_x() const;
  int degree_y() const;
  bool operator==(const Poly&) const = default;
};

Poly poly_add(const Poly& a, const Poly& b, int m);
Poly poly_mul(const Poly& a, const Poly& b, int m);
Poly poly_scale(const Poly& a, int c, int m);

// Renders with terms in descending (total degree, x-degree) order, residue
// coefficients joined by '+': "x^2+2", "2x", "xy", "0".
std::string poly_to_string(const Poly& p);

// Constructor expression tree for a finite commutative ring. Immutable by
// convention: built once by the parser or the catalog, then only read.
struct RingDescriptor {
  enum class Kind { Zn, GFq, QuotientUni, QuotientBi, Product };

  Kind kind = Kind::Zn;
  int modulus = 0;                    // Zn: n; quotients: base modulus m
  int p = 0, k = 0;                   // GFq: q = p^k
  std::vector<int> irreducible;       // GFq: monic, ascending degree, size k+1
  std::vector<Poly> generators;       // quotients: ideal generators over Z_m
  std::vector<RingDescriptor> factors;  // Product: flattened, length >= 2

  bool operator==(const RingDescriptor&) const = default;
};

// Grammar (whitespace-insensitive, indeterminates case-insensitive):
//   descriptor := atom ('x' atom)*
//   atom       := 'Z'<int> | 'GF(' <int> ')'
//              | 'Z'<int> '[x]/(' gens ')' | 'Z'<int> '[x,y]/(' gens ')'
//   gens       := gen (',' gen)*
//   gen        := poly | '(' poly (',' poly)* ')' '^' <int>   (ideal power, expanded)
//   poly       := ['-'] term (('+'|'-') term)*
//   term       := <int> | [<int>] var ['^'<int>] [var ['^'<int>]]
// Throws Error(ParseError, ..., byte offset) on syntax errors and
// Error(MalformedDescriptor, ...) on semantic ones (e.g. GF(6)).
RingDescriptor parse_descriptor(const std::string& text);

// Unique rendering per tree; parse_descriptor(canonical_string(d)) == d.
std::string canonical_string(const RingDescriptor& d);

// Smallest monic irreducible of degree k over Z_p, ascending coefficient
// order, found by trial division. Returns coefficients c_0..c_k (c_k = 1).
std::vector<int> find_irreducible(int p, int k);

bool is_prime(int n);
// Returns {p, k} with n = p^k, or {0, 0} if n is not a prime power.
std::pair<int, int> prime_power_split(int n);

}  // namespace zdg
