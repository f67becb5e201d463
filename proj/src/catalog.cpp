#include "zdg/catalog.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "zdg/descriptor.hpp"
#include "zdg/ring.hpp"

namespace zdg {

std::string field_descriptor(int q) {
  return is_prime(q) ? "Z" + std::to_string(q)
                     : "GF(" + std::to_string(q) + ")";
}

namespace {

const char* const kGammaOneSingles[] = {
    "Z4",
    "Z2[x]/(x^2)",
    "Z9",
    "Z3[x]/(x^2)",
    "Z8",
    "Z2[x]/(x^3)",
    "Z4[x]/(2x,x^2-2)",
};

const char* const kGammaTwoSingles[] = {
    "Z2xZ4",
    "Z2xZ2[x]/(x^2)",
    "Z16",
    "Z2[x]/(x^4)",
    "Z4[x]/(2x,x^3-2)",
    "Z4[x]/(x^2-2)",
    "Z4[x]/(x^2+2x+2)",
    "Z2[x,y]/(x^2+x+1,y^2)",  // GF(4) with a square-zero generator adjoined
    "Z4[x]/(x^2+x+1)",
    "Z2[x,y]/((x,y)^2)",
    "Z4[x]/((2,x)^2)",
    "Z27",
    "Z3[x]/(x^3)",
    "Z9[x]/(x^2-3,3x)",
    "Z9[x]/(x^2-6,3x)",
    "Z25",
    "Z5[x]/(x^2)",
};

std::string canon(const std::string& text) {
  return canonical_string(parse_descriptor(text));
}

}  // namespace

std::vector<std::string> gamma_one_rings() {
  std::vector<std::string> out;
  for (const char* s : kGammaOneSingles) out.push_back(canon(s));
  for (int q : kSmallFieldOrders) out.push_back(canon("Z2x" + field_descriptor(q)));
  return out;
}

std::vector<std::string> gamma_two_rings() {
  std::vector<std::string> out;
  for (int q : kSmallFieldOrders)
    if (q >= 3) out.push_back(canon("Z3x" + field_descriptor(q)));
  for (const char* s : kGammaTwoSingles) out.push_back(canon(s));
  return out;
}

std::vector<CatalogEntry> catalog(int max_order) {
  if (max_order < 4)
    throw std::invalid_argument("catalog: max_order must be at least 4");

  std::vector<std::string> candidates;
  for (int n = 2; n <= std::min(max_order, 100); ++n)
    candidates.push_back("Z" + std::to_string(n));
  for (int q : {4, 8, 9}) candidates.push_back("GF(" + std::to_string(q) + ")");

  for (int q1 : kSmallFieldOrders)
    for (int q2 : kSmallFieldOrders)
      if (q1 <= q2 && q1 * q2 <= max_order)
        candidates.push_back(field_descriptor(q1) + "x" + field_descriptor(q2));

  // Triples are kept only while the graph stays small enough for the exact
  // solver: a product of fields of orders a,b,c has abc - (a-1)(b-1)(c-1) - 1
  // proper zero divisors.
  for (int a : kSmallFieldOrders)
    for (int b : kSmallFieldOrders)
      for (int c : kSmallFieldOrders) {
        if (!(a <= b && b <= c)) continue;
        int order = a * b * c;
        int zd = order - (a - 1) * (b - 1) * (c - 1) - 1;
        if (order <= max_order && zd <= 40)
          candidates.push_back(field_descriptor(a) + "x" + field_descriptor(b) +
                               "x" + field_descriptor(c));
      }

  for (const char* s : kGammaOneSingles) candidates.push_back(s);
  for (const char* s : kGammaTwoSingles) candidates.push_back(s);

  const char* const firsts[] = {"Z2", "Z3", "GF(4)", "Z5", "Z7"};
  const char* const seconds[] = {
      "Z4",          "Z2[x]/(x^2)", "Z6",    "Z8",    "Z2[x]/(x^3)",
      "Z4[x]/(2x,x^2-2)", "Z9",     "Z3[x]/(x^2)", "Z10", "Z12",
      "Z16",         "Z25",         "GF(4)", "GF(8)", "GF(9)",
      "Z2[x,y]/(x^2+x+1,y^2)",      "Z2xZ2",
  };
  for (const char* f : firsts)
    for (const char* s : seconds)
      candidates.push_back(std::string(f) + "x" + s);

  std::set<std::string> named;
  for (const auto& s : gamma_one_rings()) named.insert(s);
  for (const auto& s : gamma_two_rings()) named.insert(s);

  std::set<std::string> seen;
  std::vector<CatalogEntry> out;
  for (const auto& text : candidates) {
    RingDescriptor d = parse_descriptor(text);
    std::string c = canonical_string(d);
    if (!seen.insert(c).second) continue;
    FiniteRing r = build_ring(d);
    if (r.order > max_order) continue;
    out.push_back({c, c, r.order, named.count(c) ? "named" : "generated"});
  }
  return out;
}

}  // namespace zdg
