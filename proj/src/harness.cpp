#include "zdg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "zdg/analysis.hpp"
#include "zdg/bitset.hpp"
#include "zdg/cache.hpp"
#include "zdg/descriptor.hpp"
#include "zdg/errors.hpp"
#include "zdg/fingerprint.hpp"
#include "zdg/graph.hpp"
#include "zdg/version.hpp"

namespace zdg {

namespace {

using ordered_json = nlohmann::ordered_json;

// Vertex cap for checks that enumerate every minimum alliance of Z2 x R.
// Rings above the cap produce skip rows, never silent omissions.
constexpr int kMembershipGraphCap = 30;

// Floor division; the closed forms below need it for negative numerators.
long long floordiv(long long a, long long b) {
  long long q = a / b, r = a % b;
  return r != 0 && ((r < 0) != (b < 0)) ? q - 1 : q;
}

// Memoizing store for everything derived from a descriptor. Alliance numbers
// and the r statistic go through the persistent cache when one is attached;
// cache problems never change results, only cost.
class RingStore {
 public:
  explicit RingStore(Cache* cache) : cache_(cache) {}

  const FiniteRing& ring(const std::string& desc) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return ring_locked(desc);
  }

  const RingAnalysis& analysis(const std::string& desc) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    Slot& s = slots_[desc];
    if (!s.analysis) s.analysis = analyze_ring(ring_locked(desc));
    return *s.analysis;
  }

  const ZeroDivisorGraph& graph(const std::string& desc) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    Slot& s = slots_[desc];
    if (!s.graph) s.graph = build_zdg(ring_locked(desc));
    return *s.graph;
  }

  const Fingerprint& fp(const std::string& desc) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    Slot& s = slots_[desc];
    if (!s.fp) s.fp = fingerprint(ring_locked(desc));
    return *s.fp;
  }

  int gamma(const std::string& desc, AllianceKind kind) {
    {
      std::lock_guard<std::recursive_mutex> lock(mu_);
      Slot& s = slots_[desc];
      auto& memo = kind == AllianceKind::Offensive ? s.gamma_off : s.gamma_def;
      if (memo) return *memo;
    }
    if (cache_) {
      if (auto rec = cache_->get(desc)) {
        const auto& hit = kind == AllianceKind::Offensive ? rec->gamma_offensive
                                                          : rec->gamma_defensive;
        if (hit) {
          std::lock_guard<std::recursive_mutex> lock(mu_);
          Slot& s = slots_[desc];
          (kind == AllianceKind::Offensive ? s.gamma_off : s.gamma_def) = *hit;
          return *hit;
        }
      }
    }
    const ZeroDivisorGraph& g = graph(desc);
    AllianceResult res = solve_min_alliance(g, kind);
    {
      std::lock_guard<std::recursive_mutex> lock(mu_);
      Slot& s = slots_[desc];
      (kind == AllianceKind::Offensive ? s.gamma_off : s.gamma_def) = res.number;
    }
    persist(desc, [&](CacheRecord& rec) {
      if (kind == AllianceKind::Offensive) rec.gamma_offensive = res.number;
      else rec.gamma_defensive = res.number;
    });
    return res.number;
  }

  int r_stat(const std::string& desc, int cap) {
    {
      std::lock_guard<std::recursive_mutex> lock(mu_);
      Slot& s = slots_[desc];
      if (s.r_stat) return *s.r_stat;
    }
    if (cache_) {
      if (auto rec = cache_->get(desc); rec && rec->r_statistic) {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        slots_[desc].r_stat = *rec->r_statistic;
        return *rec->r_statistic;
      }
    }
    int val = compute_r(ring(desc), cap);
    {
      std::lock_guard<std::recursive_mutex> lock(mu_);
      slots_[desc].r_stat = val;
    }
    persist(desc, [&](CacheRecord& rec) { rec.r_statistic = val; });
    return val;
  }

 private:
  struct Slot {
    std::optional<FiniteRing> ring;
    std::optional<RingAnalysis> analysis;
    std::optional<ZeroDivisorGraph> graph;
    std::optional<Fingerprint> fp;
    std::optional<int> gamma_off, gamma_def, r_stat;
  };

  FiniteRing& ring_locked(const std::string& desc) {
    Slot& s = slots_[desc];
    if (!s.ring) s.ring = build_ring(desc);
    return *s.ring;
  }

  template <typename Fill>
  void persist(const std::string& desc, Fill&& fill) {
    if (!cache_) return;
    try {
      CacheRecord rec;
      rec.descriptor = desc;
      rec.fingerprint = fp(desc).to_string();
      fill(rec);
      cache_->put(rec);
    } catch (...) {
      // cache is an accelerator; failing to persist must not change results
    }
  }

  std::recursive_mutex mu_;
  std::map<std::string, Slot> slots_;
  Cache* cache_;
};

struct Ctx {
  const std::vector<CatalogEntry>& entries;
  RingStore& store;
  const HarnessOptions& opts;
};

void add_row(CheckOutcome& out, std::string subject, ordered_json values,
             std::string relation, std::string verdict, std::string note = "") {
  CheckInstance inst;
  inst.subject = std::move(subject);
  inst.values = values.is_null() ? ordered_json::object() : std::move(values);
  inst.relation = std::move(relation);
  inst.verdict = std::move(verdict);
  inst.note = std::move(note);
  out.instances.push_back(std::move(inst));
}

// Runs one instance body; resource caps degrade to "inconclusive" rows and
// anything else unexpected becomes an "error" row (which fails the check).
template <typename Fn>
void with_subject(CheckOutcome& out, const std::string& subject, Fn&& body) {
  try {
    body();
  } catch (const Error& e) {
    bool capped = e.kind() == ErrorKind::TooLarge ||
                  e.kind() == ErrorKind::EnumerationTruncated ||
                  e.kind() == ErrorKind::OrderCapExceeded;
    add_row(out, subject, ordered_json::object(), "",
            capped ? "inconclusive" : "error",
            std::string(error_kind_name(e.kind())) + ": " + e.what());
  } catch (const std::exception& e) {
    add_row(out, subject, ordered_json::object(), "", "error", e.what());
  }
}

std::string z2_of(const std::string& desc) {
  return canonical_string(parse_descriptor("Z2x" + desc));
}

int doubled_vertices(const FiniteRing& r, const RingAnalysis& an) {
  return 2 * r.order - static_cast<int>(an.units.size()) - 1;
}

std::string str(long long v) { return std::to_string(v); }

const char kSkipField[] = "field: empty graph";
const char kSkipTooLarge[] = "doubled graph too large";
const char kSkipOrder[] = "order above bound";

// gamma + 2 <= |Z(R)|, reported informationally on single-vertex graphs
// (where the whole vertex set is the only alliance and the bound fails).
void check_bound_zr(const Ctx& c, CheckOutcome& out) {
  std::optional<bool> z9_equal;
  for (const auto& e : c.entries) {
    with_subject(out, e.name, [&] {
      const RingAnalysis& an = c.store.analysis(e.descriptor);
      if (an.is_field) {
        add_row(out, e.name, {}, "", "skip", kSkipField);
        return;
      }
      int z = static_cast<int>(an.zero_divisors_star.size()) + 1;
      int g = c.store.gamma(e.descriptor, AllianceKind::Offensive);
      ordered_json values{{"gamma_offensive", g}, {"zero_divisor_count", z}};
      std::string rel = str(g) + " + 2 <= " + str(z);
      if (z == 2) {
        add_row(out, e.name, std::move(values), rel, "info",
                "single-vertex graph: the whole vertex set is the only "
                "alliance and the inequality fails");
        return;
      }
      bool eq = g + 2 == z;
      if (e.descriptor == "Z9") z9_equal = eq;
      add_row(out, e.name, std::move(values), rel,
              g + 2 <= z ? "pass" : "fail", eq ? "equality" : "");
    });
  }
  with_subject(out, "Z9 (sharpness)", [&] {
    if (!z9_equal) {
      add_row(out, "Z9 (sharpness)", {}, "", "skip", kSkipOrder);
      return;
    }
    add_row(out, "Z9 (sharpness)", {},
            "gamma_offensive + 2 == zero_divisor_count",
            *z9_equal ? "pass" : "fail", "bound attained");
  });
}

// |Z(R)| <= g^2 + g + 1 for the defensive alliance number g.
void check_cor_defensive(const Ctx& c, CheckOutcome& out) {
  std::optional<bool> z9_sharp;
  for (const auto& e : c.entries) {
    with_subject(out, e.name, [&] {
      const RingAnalysis& an = c.store.analysis(e.descriptor);
      if (an.is_field) {
        add_row(out, e.name, {}, "", "skip", kSkipField);
        return;
      }
      int z = static_cast<int>(an.zero_divisors_star.size()) + 1;
      int g = c.store.gamma(e.descriptor, AllianceKind::Defensive);
      int rhs = g * g + g + 1;
      ordered_json values{{"zero_divisor_count", z}, {"gamma_defensive", g}};
      std::string rel = str(z) + " <= " + str(g) + "^2 + " + str(g) + " + 1";
      if (e.descriptor == "Z9") z9_sharp = g == 1 && z == rhs;
      add_row(out, e.name, std::move(values), rel, z <= rhs ? "pass" : "fail",
              z == rhs ? "equality" : "");
    });
  }
  with_subject(out, "Z9 (sharpness)", [&] {
    if (!z9_sharp) {
      add_row(out, "Z9 (sharpness)", {}, "", "skip", kSkipOrder);
      return;
    }
    add_row(out, "Z9 (sharpness)", {},
            "gamma_defensive == 1 and zero_divisor_count == 3",
            *z9_sharp ? "pass" : "fail", "bound attained");
  });
}

// For local rings: gamma <= (|Z*| - gamma) * (gamma - 1) + 1.
void check_local_bound(const Ctx& c, CheckOutcome& out) {
  std::optional<bool> z9_equal;
  for (const auto& e : c.entries) {
    with_subject(out, e.name, [&] {
      const RingAnalysis& an = c.store.analysis(e.descriptor);
      if (an.is_field) {
        add_row(out, e.name, {}, "", "skip", kSkipField);
        return;
      }
      if (!an.is_local) {
        add_row(out, e.name, {}, "", "skip", "not local");
        return;
      }
      int n = static_cast<int>(an.zero_divisors_star.size());
      int g = c.store.gamma(e.descriptor, AllianceKind::Offensive);
      int rhs = (n - g) * (g - 1) + 1;
      ordered_json values{{"gamma_offensive", g}, {"vertex_count", n}};
      std::string rel = str(g) + " <= (" + str(n) + " - " + str(g) + ") * (" +
                        str(g) + " - 1) + 1";
      if (e.descriptor == "Z9") z9_equal = g == rhs;
      add_row(out, e.name, std::move(values), rel, g <= rhs ? "pass" : "fail",
              g == rhs ? "equality" : "");
    });
  }
  with_subject(out, "Z9 (sharpness)", [&] {
    if (!z9_equal) {
      add_row(out, "Z9 (sharpness)", {}, "", "skip", kSkipOrder);
      return;
    }
    add_row(out, "Z9 (sharpness)", {},
            "gamma_offensive == (vertex_count - gamma) * (gamma - 1) + 1",
            *z9_equal ? "pass" : "fail", "bound attained");
  });
}

// gamma(F x K) == min(|F|, |K|) - 1 for fields F, K.
void check_field_prod(const Ctx& c, CheckOutcome& out) {
  for (std::size_t i = 0; i < std::size(kSmallFieldOrders); ++i) {
    for (std::size_t j = i; j < std::size(kSmallFieldOrders); ++j) {
      int q1 = kSmallFieldOrders[i], q2 = kSmallFieldOrders[j];
      std::string subject = field_descriptor(q1) + "x" + field_descriptor(q2);
      if (q1 * q2 > c.opts.max_order) {
        add_row(out, subject, {}, "", "skip", kSkipOrder);
        continue;
      }
      with_subject(out, subject, [&] {
        int expected = std::min(q1, q2) - 1;
        int g = c.store.gamma(subject, AllianceKind::Offensive);
        ordered_json values{{"gamma_offensive", g}, {"expected", expected}};
        add_row(out, subject, std::move(values),
                str(g) + " == min(" + str(q1) + ", " + str(q2) + ") - 1",
                g == expected ? "pass" : "fail");
      });
    }
  }
}

// gamma(Z2 x R) <= |Z(R)|; fields hit it with equality.
void check_z2r_upper(const Ctx& c, CheckOutcome& out) {
  for (const auto& e : c.entries) {
    with_subject(out, e.name, [&] {
      const RingAnalysis& an = c.store.analysis(e.descriptor);
      int bound = static_cast<int>(an.zero_divisors_star.size()) + 1;
      int g2 = c.store.gamma(z2_of(e.descriptor), AllianceKind::Offensive);
      ordered_json values{{"gamma_doubled", g2}, {"zero_divisor_count", bound}};
      add_row(out, e.name, std::move(values), str(g2) + " <= " + str(bound),
              g2 <= bound ? "pass" : "fail", g2 == bound ? "equality" : "");
    });
  }
}

// With at least two units in R, the vertex (1,0) belongs to every minimum
// offensive alliance of the graph of Z2 x R.
void check_z2r_member(const Ctx& c, CheckOutcome& out) {
  for (const auto& e : c.entries) {
    with_subject(out, e.name, [&] {
      const FiniteRing& r = c.store.ring(e.descriptor);
      const RingAnalysis& an = c.store.analysis(e.descriptor);
      if (an.units.size() < 2) {
        add_row(out, e.name, {}, "", "skip", "fewer than two units");
        return;
      }
      int dz = doubled_vertices(r, an);
      if (dz > kMembershipGraphCap) {
        add_row(out, e.name, {}, "", "skip", kSkipTooLarge);
        return;
      }
      std::string d2 = z2_of(e.descriptor);
      const ZeroDivisorGraph& g2 = c.store.graph(d2);
      AllianceResult res = enumerate_min_alliances(g2, AllianceKind::Offensive,
                                                   c.opts.enumeration_cap);
      if (res.enumeration_truncated) {
        add_row(out, e.name, {}, "", "inconclusive",
                "minimum alliance enumeration truncated");
        return;
      }
      int elem = c.store.ring(d2).order / 2;  // (1, 0, ..., 0)
      int v = -1;
      for (int u = 0; u < g2.vertex_count; ++u)
        if (g2.vertex_elements[u] == elem) { v = u; break; }
      bool ok = v >= 0;
      for (const auto& s : *res.all_minimum)
        ok = ok && std::binary_search(s.begin(), s.end(), v);
      ordered_json values{
          {"gamma_doubled", res.number},
          {"minimum_count", static_cast<int>(res.all_minimum->size())}};
      add_row(out, e.name, std::move(values),
              (v >= 0 ? g2.labels[v] : std::string("(1,0)")) +
                  " in every minimum alliance",
              ok ? "pass" : "fail");
    });
  }
}

// The graph of R is complete exactly when gamma(Z2 x R) == |Z(R)*| + 1 and
// exactly one of the two side conditions holds: at most four vertices with
// the one order-nine product pair excluded, or minimum degree at least four.
void check_complete_iff(const Ctx& c, CheckOutcome& out) {
  for (const auto& e : c.entries) {
    with_subject(out, e.name, [&] {
      const RingAnalysis& an = c.store.analysis(e.descriptor);
      if (an.is_field) {
        add_row(out, e.name, {}, "", "skip", kSkipField);
        return;
      }
      const FiniteRing& r = c.store.ring(e.descriptor);
      int dz = doubled_vertices(r, an);
      if (dz > kMembershipGraphCap) {
        add_row(out, e.name, {}, "", "skip", kSkipTooLarge);
        return;
      }
      const ZeroDivisorGraph& g = c.store.graph(e.descriptor);
      StructureReport st = recognize_structure(g);
      int n = g.vertex_count;
      int g2 = c.store.gamma(z2_of(e.descriptor), AllianceKind::Offensive);
      bool excluded_pair =
          r.order == 9 && rings_isomorphic(r, c.store.ring("Z3xZ3"));
      bool small_side = n <= 4 && !excluded_pair;
      bool dense_side = st.min_degree >= 4;
      bool rhs = g2 == n + 1 && (small_side != dense_side);
      ordered_json values{{"complete", st.is_complete},
                          {"gamma_doubled", g2},
                          {"vertex_count", n},
                          {"min_degree", st.min_degree}};
      add_row(out, e.name, std::move(values),
              "complete <-> (gamma_doubled == vertex_count + 1 and exactly "
              "one side condition)",
              st.is_complete == rhs ? "pass" : "fail");
    });
  }
}

// A ring whose nonzero ideals have a least element is local.
void check_colocal_local(const Ctx& c, CheckOutcome& out) {
  for (const auto& e : c.entries) {
    with_subject(out, e.name, [&] {
      const RingAnalysis& an = c.store.analysis(e.descriptor);
      if (!an.is_colocal) {
        add_row(out, e.name, {}, "", "skip", "not co-local");
        return;
      }
      ordered_json values{{"local", an.is_local}};
      add_row(out, e.name, std::move(values), "least nonzero ideal -> local",
              an.is_local ? "pass" : "fail");
    });
  }
}

// With core N the least nonzero ideal: gamma >= ceil(|N*| / 2).
void check_colocal_bound(const Ctx& c, CheckOutcome& out) {
  std::optional<bool> z9_equal;
  for (const auto& e : c.entries) {
    with_subject(out, e.name, [&] {
      const RingAnalysis& an = c.store.analysis(e.descriptor);
      if (an.is_field) {
        add_row(out, e.name, {}, "", "skip", kSkipField);
        return;
      }
      if (!an.is_colocal || !an.colocal_core) {
        add_row(out, e.name, {}, "", "skip", "not co-local");
        return;
      }
      int core_star = static_cast<int>(an.colocal_core->size()) - 1;
      int need = (core_star + 1) / 2;
      int g = c.store.gamma(e.descriptor, AllianceKind::Offensive);
      ordered_json values{{"gamma_offensive", g},
                          {"nonzero_core_size", core_star}};
      std::string rel = str(g) + " >= ceil(" + str(core_star) + " / 2)";
      if (e.descriptor == "Z9") z9_equal = g == need;
      add_row(out, e.name, std::move(values), rel, g >= need ? "pass" : "fail",
              g == need ? "equality" : "");
    });
  }
  with_subject(out, "Z9 (sharpness)", [&] {
    if (!z9_equal) {
      add_row(out, "Z9 (sharpness)", {}, "", "skip", kSkipOrder);
      return;
    }
    add_row(out, "Z9 (sharpness)", {},
            "gamma_offensive == ceil(nonzero_core_size / 2)",
            *z9_equal ? "pass" : "fail", "bound attained");
  });
}

// gamma(Z2 x R) <= 1 + r + 2 gamma(R), r the fewest square-zero vertices a
// minimum alliance of the graph of R leaves outside.
void check_nilp_bound(const Ctx& c, CheckOutcome& out) {
  std::optional<bool> z8_equal;
  for (const auto& e : c.entries) {
    with_subject(out, e.name, [&] {
      const RingAnalysis& an = c.store.analysis(e.descriptor);
      if (an.is_field) {
        add_row(out, e.name, {}, "", "skip", kSkipField);
        return;
      }
      int rs = c.store.r_stat(e.descriptor, c.opts.enumeration_cap);
      int g = c.store.gamma(e.descriptor, AllianceKind::Offensive);
      int g2 = c.store.gamma(z2_of(e.descriptor), AllianceKind::Offensive);
      int bound = 1 + rs + 2 * g;
      ordered_json values{{"gamma_doubled", g2},
                          {"r_statistic", rs},
                          {"gamma_offensive", g}};
      std::string rel =
          str(g2) + " <= 1 + " + str(rs) + " + 2 * " + str(g);
      if (e.descriptor == "Z8") z8_equal = g2 == bound;
      add_row(out, e.name, std::move(values), rel,
              g2 <= bound ? "pass" : "fail", g2 == bound ? "equality" : "");
    });
  }
  with_subject(out, "Z8 (sharpness)", [&] {
    if (!z8_equal) {
      add_row(out, "Z8 (sharpness)", {}, "", "skip", kSkipOrder);
      return;
    }
    add_row(out, "Z8 (sharpness)", {},
            "gamma_doubled == 1 + r_statistic + 2 * gamma_offensive",
            *z8_equal ? "pass" : "fail", "bound attained");
  });
}

// gamma(Z2 x R) >= gamma(R) + 1 always; for reduced R also <= 2 gamma(R) + 1.
void check_z2r_prop(const Ctx& c, CheckOutcome& out) {
  for (const auto& e : c.entries) {
    with_subject(out, e.name, [&] {
      const RingAnalysis& an = c.store.analysis(e.descriptor);
      if (an.is_field) {
        add_row(out, e.name, {}, "", "skip", kSkipField);
        return;
      }
      int g = c.store.gamma(e.descriptor, AllianceKind::Offensive);
      int g2 = c.store.gamma(z2_of(e.descriptor), AllianceKind::Offensive);
      bool ok = g2 >= g + 1 && (!an.is_reduced || g2 <= 2 * g + 1);
      ordered_json values{{"gamma_offensive", g},
                          {"gamma_doubled", g2},
                          {"reduced", an.is_reduced}};
      std::string rel =
          an.is_reduced
              ? str(g) + " + 1 <= " + str(g2) + " <= 2 * " + str(g) + " + 1"
              : str(g2) + " >= " + str(g) + " + 1";
      add_row(out, e.name, std::move(values), rel, ok ? "pass" : "fail");
    });
  }
}

// Closed form for F x R where the graph of R is complete or empty:
// gamma == |Z(R)*| + min(|U(R)|, |F*|, 2 + floor((|U(R)| - |Z(R)*|) / 2)
//                                        + floor(|F*| / 2)).
void check_fxr_formula(const Ctx& c, CheckOutcome& out) {
  std::vector<std::string> targets = {
      "Z4",  "Z2[x]/(x^2)",              "Z9",    "Z3[x]/(x^2)",
      "Z25", "Z2[x,y]/(x^2+x+1,y^2)",    "Z2xZ2",
  };
  for (int q : kSmallFieldOrders) targets.push_back(field_descriptor(q));
  const int field_orders[] = {3, 4, 5, 7};
  for (int f : field_orders) {
    for (const std::string& t : targets) {
      std::string tc = canonical_string(parse_descriptor(t));
      std::string subject = field_descriptor(f) + "x" + tc;
      with_subject(out, subject, [&] {
        const FiniteRing& rr = c.store.ring(tc);
        if (static_cast<long long>(f) * rr.order > c.opts.max_order) {
          add_row(out, subject, {}, "", "skip", kSkipOrder);
          return;
        }
        const RingAnalysis& an = c.store.analysis(tc);
        long long zstar = static_cast<long long>(an.zero_divisors_star.size());
        long long units = static_cast<long long>(an.units.size());
        long long fstar = f - 1;
        long long third = 2 + floordiv(units - zstar, 2) + fstar / 2;
        long long expected = zstar + std::min({units, fstar, third});
        int g = c.store.gamma(subject, AllianceKind::Offensive);
        ordered_json values{{"gamma_offensive", g},
                            {"expected", expected},
                            {"zero_divisors", zstar},
                            {"units", units},
                            {"field_units", fstar}};
        add_row(out, subject, std::move(values),
                str(g) + " == " + str(zstar) + " + min(" + str(units) + ", " +
                    str(fstar) + ", " + str(third) + ")",
                g == expected ? "pass" : "fail");
      });
    }
  }
}

// Closed form for Z2 x K x F with |F| >= 3:
// gamma == 1 + min(2|K*|, 2|F*|, |F*| + floor(|K*|/2) + 1,
//                  |K*| + floor(|F*|/2) + 1).
void check_z2kf_formula(const Ctx& c, CheckOutcome& out) {
  for (std::size_t i = 0; i < std::size(kSmallFieldOrders); ++i) {
    for (std::size_t j = i; j < std::size(kSmallFieldOrders); ++j) {
      int a = kSmallFieldOrders[i], b = kSmallFieldOrders[j];
      std::string subject =
          "Z2x" + field_descriptor(a) + "x" + field_descriptor(b);
      if (b < 3) {
        add_row(out, subject, {}, "", "skip",
                "needs a factor of order at least three");
        continue;
      }
      if (2LL * a * b > c.opts.max_order) {
        add_row(out, subject, {}, "", "skip", kSkipOrder);
        continue;
      }
      with_subject(out, subject, [&] {
        int ks = a - 1, fs = b - 1;
        int expected =
            1 + std::min({2 * ks, 2 * fs, fs + ks / 2 + 1, ks + fs / 2 + 1});
        int g = c.store.gamma(subject, AllianceKind::Offensive);
        ordered_json values{{"gamma_offensive", g}, {"expected", expected}};
        add_row(out, subject, std::move(values),
                str(g) + " == 1 + min(" + str(2 * ks) + ", " + str(2 * fs) +
                    ", " + str(fs + ks / 2 + 1) + ", " + str(ks + fs / 2 + 1) +
                    ")",
                g == expected ? "pass" : "fail");
      });
    }
  }
}

// Every ring on the measure-one list has offensive alliance number one.
void check_gamma1_fwd(const Ctx& c, CheckOutcome& out) {
  for (const std::string& d : gamma_one_rings()) {
    with_subject(out, d, [&] {
      if (c.store.ring(d).order > c.opts.max_order) {
        add_row(out, d, {}, "", "skip", kSkipOrder);
        return;
      }
      int g = c.store.gamma(d, AllianceKind::Offensive);
      add_row(out, d, ordered_json{{"gamma_offensive", g}}, str(g) + " == 1",
              g == 1 ? "pass" : "fail");
    });
  }
}

// Every catalog ring measuring one matches a listed ring by fingerprint.
void check_gamma1_rev(const Ctx& c, CheckOutcome& out) {
  std::vector<std::string> ref_names = gamma_one_rings();
  std::set<std::string> seen(ref_names.begin(), ref_names.end());
  for (int q = 2; 2 * q <= c.opts.max_order; ++q) {
    if (prime_power_split(q).first == 0) continue;
    std::string d = canonical_string(parse_descriptor("Z2x" + field_descriptor(q)));
    if (seen.insert(d).second) ref_names.push_back(d);
  }
  std::vector<std::pair<std::string, const Fingerprint*>> refs;
  refs.reserve(ref_names.size());
  for (const std::string& d : ref_names) refs.emplace_back(d, &c.store.fp(d));
  for (const auto& e : c.entries) {
    with_subject(out, e.name, [&] {
      const RingAnalysis& an = c.store.analysis(e.descriptor);
      if (an.is_field) {
        add_row(out, e.name, {}, "", "skip", kSkipField);
        return;
      }
      if (c.store.gamma(e.descriptor, AllianceKind::Offensive) != 1) return;
      const Fingerprint& f = c.store.fp(e.descriptor);
      const std::string* match = nullptr;
      for (const auto& ref : refs)
        if (*ref.second == f) { match = &ref.first; break; }
      add_row(out, e.name, ordered_json{{"gamma_offensive", 1}},
              "fingerprint matches a listed ring", match ? "pass" : "fail",
              match ? "matches " + *match : "no listed ring matches");
    });
  }
}

// Every ring on the measure-two list has offensive alliance number two. The
// four-book recognizer runs on each graph; its outcome is informational.
void check_gamma2_fwd(const Ctx& c, CheckOutcome& out) {
  for (const std::string& d : gamma_two_rings()) {
    with_subject(out, d, [&] {
      if (c.store.ring(d).order > c.opts.max_order) {
        add_row(out, d, {}, "", "skip", kSkipOrder);
        return;
      }
      int g = c.store.gamma(d, AllianceKind::Offensive);
      StructureReport st = recognize_structure(c.store.graph(d));
      ordered_json values{{"gamma_offensive", g}, {"four_book", st.is_4book}};
      add_row(out, d, std::move(values), str(g) + " == 2",
              g == 2 ? "pass" : "fail",
              st.is_4book ? "four-book shape recognized"
                          : "not a four-book (informational)");
    });
  }
}

// Every catalog ring measuring two matches a listed ring by fingerprint.
void check_gamma2_rev(const Ctx& c, CheckOutcome& out) {
  std::vector<std::string> ref_names = gamma_two_rings();
  std::set<std::string> seen(ref_names.begin(), ref_names.end());
  for (int q = 3; 3 * q <= c.opts.max_order; ++q) {
    if (prime_power_split(q).first == 0) continue;
    std::string d = canonical_string(parse_descriptor("Z3x" + field_descriptor(q)));
    if (seen.insert(d).second) ref_names.push_back(d);
  }
  std::vector<std::pair<std::string, const Fingerprint*>> refs;
  refs.reserve(ref_names.size());
  for (const std::string& d : ref_names) refs.emplace_back(d, &c.store.fp(d));
  for (const auto& e : c.entries) {
    with_subject(out, e.name, [&] {
      const RingAnalysis& an = c.store.analysis(e.descriptor);
      if (an.is_field) {
        add_row(out, e.name, {}, "", "skip", kSkipField);
        return;
      }
      if (c.store.gamma(e.descriptor, AllianceKind::Offensive) != 2) return;
      const Fingerprint& f = c.store.fp(e.descriptor);
      const std::string* match = nullptr;
      for (const auto& ref : refs)
        if (*ref.second == f) { match = &ref.first; break; }
      add_row(out, e.name, ordered_json{{"gamma_offensive", 2}},
              "fingerprint matches a listed ring", match ? "pass" : "fail",
              match ? "matches " + *match : "no listed ring matches");
    });
  }
}

// degree(v) == |Ann(v)| - 1, minus one more when v*v == 0.
void check_deg_ann(const Ctx& c, CheckOutcome& out) {
  const char rel[] = "degree(v) == |Ann(v)| - 1, or - 2 when v*v == 0";
  for (const auto& e : c.entries) {
    with_subject(out, e.name, [&] {
      const FiniteRing& r = c.store.ring(e.descriptor);
      const ZeroDivisorGraph& g = c.store.graph(e.descriptor);
      int bad = -1, want = 0;
      for (int v = 0; v < g.vertex_count; ++v) {
        int ann = static_cast<int>(annihilator(r, g.vertex_elements[v]).size());
        int w = g.self_annihilating[v] ? ann - 2 : ann - 1;
        if (g.degree[v] != w) { bad = v; want = w; break; }
      }
      if (bad < 0) {
        add_row(out, e.name, ordered_json{{"vertex_count", g.vertex_count}},
                rel, "pass", g.vertex_count == 0 ? "no vertices" : "");
      } else {
        add_row(out, e.name,
                ordered_json{{"vertex", g.labels[bad]},
                             {"degree", g.degree[bad]},
                             {"expected", want}},
                rel, "fail");
      }
    });
  }
}

// Local size profile: |R| = p^(l d), |M| = p^((l-1) d), |U| = |R| - |M|.
void check_facts_local(const Ctx& c, CheckOutcome& out) {
  for (const auto& e : c.entries) {
    with_subject(out, e.name, [&] {
      const RingAnalysis& an = c.store.analysis(e.descriptor);
      if (an.is_field) {
        add_row(out, e.name, {}, "", "skip", kSkipField);
        return;
      }
      if (!an.is_local) {
        add_row(out, e.name, {}, "", "skip", "not local");
        return;
      }
      const FiniteRing& r = c.store.ring(e.descriptor);
      auto [p, a] = prime_power_split(r.order);
      int msize = static_cast<int>(an.zero_divisors_star.size()) + 1;
      auto [p2, b] = prime_power_split(msize);
      int units = static_cast<int>(an.units.size());
      bool ok = p > 0 && p2 == p && b >= 1 && a > b;
      int rd = 0, len = 0;
      if (ok) {
        rd = a - b;
        ok = b % rd == 0;
        if (ok) len = b / rd + 1;
      }
      ok = ok && units == r.order - msize && an.maximal_ideal &&
           static_cast<int>(an.maximal_ideal->size()) == msize;
      ordered_json values{{"p", p},
                          {"length", len},
                          {"residue_degree", rd},
                          {"maximal_ideal_size", msize},
                          {"units", units}};
      add_row(out, e.name, std::move(values),
              "|R| = p^(l d), |M| = p^((l-1) d), |U| = |R| - |M|",
              ok ? "pass" : "fail");
    });
  }
}

struct CheckDef {
  const char* id;
  const char* description;
  void (*fn)(const Ctx&, CheckOutcome&);
};

// Kept sorted by id.
const CheckDef kRegistry[] = {
    {"BOUND-ZR",
     "offensive alliance number plus two stays within the zero divisor count",
     check_bound_zr},
    {"COLOCAL-BOUND",
     "least-ideal rings: offensive number at least half the nonzero core",
     check_colocal_bound},
    {"COLOCAL-LOCAL", "rings with a least nonzero ideal are local",
     check_colocal_local},
    {"COMPLETE-IFF",
     "complete graph characterized through the doubled ring's offensive number",
     check_complete_iff},
    {"COR-DEFENSIVE",
     "zero divisor count at most g^2 + g + 1 for the defensive number g",
     check_cor_defensive},
    {"DEG-ANN",
     "vertex degree determined by the annihilator size and v*v == 0",
     check_deg_ann},
    {"FACTS-LOCAL",
     "local rings follow the prime-power size profile for |R|, |M|, |U|",
     check_facts_local},
    {"FIELD-PROD",
     "two fields: offensive alliance number is min(|F|, |K|) - 1",
     check_field_prod},
    {"FXR-FORMULA",
     "closed form for a field times a ring with complete or empty graph",
     check_fxr_formula},
    {"GAMMA1-FWD", "each listed ring measures offensive alliance number one",
     check_gamma1_fwd},
    {"GAMMA1-REV", "each catalog ring measuring one matches the list",
     check_gamma1_rev},
    {"GAMMA2-FWD", "each listed ring measures offensive alliance number two",
     check_gamma2_fwd},
    {"GAMMA2-REV", "each catalog ring measuring two matches the list",
     check_gamma2_rev},
    {"LOCAL-BOUND",
     "local rings obey the quadratic residual bound on the offensive number",
     check_local_bound},
    {"NILP-BOUND",
     "doubled offensive number at most 1 + r + twice the base number",
     check_nilp_bound},
    {"Z2KF-FORMULA",
     "closed form for Z2 x K x F with F of order at least three",
     check_z2kf_formula},
    {"Z2R-MEMBER",
     "(1,0) sits in every minimum alliance when the base has two units",
     check_z2r_member},
    {"Z2R-PROP",
     "doubling raises the offensive number; reduced rings cap the raise",
     check_z2r_prop},
    {"Z2R-UPPER",
     "doubled offensive number within the base ring's zero divisor count",
     check_z2r_upper},
};

ordered_json instance_json(const CheckInstance& i) {
  return ordered_json{{"subject", i.subject},
                      {"values", i.values},
                      {"relation", i.relation},
                      {"verdict", i.verdict},
                      {"note", i.note}};
}

std::string hash_entries(const std::vector<CatalogEntry>& entries) {
  unsigned long long h = 1469598103934665603ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    h ^= 0x1f;
    h *= 1099511628211ULL;
  };
  for (const auto& e : entries) {
    feed(e.name);
    feed(e.descriptor);
    feed(std::to_string(e.order));
    feed(e.provenance);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx", h);
  return buf;
}

}  // namespace

int compute_r(const FiniteRing& ring, int cap) {
  ZeroDivisorGraph g = build_zdg(ring);
  if (g.vertex_count == 0)
    throw Error(ErrorKind::EmptyGraph, "r statistic needs a nonempty graph");
  bool any_sq = false;
  for (char f : g.self_annihilating) any_sq = any_sq || f != 0;
  if (!any_sq) return 0;
  AllianceResult res = enumerate_min_alliances(g, AllianceKind::Offensive, cap);
  if (res.enumeration_truncated)
    throw Error(ErrorKind::EnumerationTruncated,
                "r statistic: minimum alliance list truncated");
  int best = g.vertex_count + 1;
  for (const auto& s : *res.all_minimum) {
    Bits in(g.vertex_count);
    for (int v : s) in.set(v);
    int cnt = 0;
    for (int v = 0; v < g.vertex_count; ++v)
      if (g.self_annihilating[v] && !in.test(v)) ++cnt;
    best = std::min(best, cnt);
    if (best == 0) break;
  }
  return best;
}

const std::vector<std::string>& registry_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& d : kRegistry) v.push_back(d.id);
    return v;
  }();
  return ids;
}

HarnessResult run_checks(const std::vector<CatalogEntry>& entries,
                         const HarnessOptions& options,
                         const std::vector<std::string>& only_ids) {
  std::vector<const CheckDef*> defs;
  {
    std::set<std::string> want(only_ids.begin(), only_ids.end());
    for (const auto& d : kRegistry) {
      if (only_ids.empty() || want.count(d.id)) {
        defs.push_back(&d);
        want.erase(d.id);
      }
    }
    if (!want.empty())
      throw Error(ErrorKind::UnknownCheck, "unknown check id: " + *want.begin());
  }

  Cache cache(options.data_dir);
  RingStore store(&cache);
  Ctx ctx{entries, store, options};

  std::vector<CheckOutcome> outcomes(defs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < defs.size();) {
      auto t0 = std::chrono::steady_clock::now();
      CheckOutcome& out = outcomes[i];
      out.check_id = defs[i]->id;
      out.description = defs[i]->description;
      try {
        defs[i]->fn(ctx, out);
      } catch (const std::exception& ex) {
        add_row(out, "(check)", ordered_json::object(), "", "error", ex.what());
      } catch (...) {
        add_row(out, "(check)", ordered_json::object(), "", "error",
                "unidentified failure");
      }
      std::stable_sort(out.instances.begin(), out.instances.end(),
                       [](const CheckInstance& a, const CheckInstance& b) {
                         return a.subject < b.subject;
                       });
      for (const auto& inst : out.instances)
        if (inst.verdict == "fail" || inst.verdict == "error")
          out.counterexamples.push_back(inst);
      out.passed = out.counterexamples.empty();
      out.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    }
  };
  int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::sort(outcomes.begin(), outcomes.end(),
            [](const CheckOutcome& a, const CheckOutcome& b) {
              return a.check_id < b.check_id;
            });
  HarnessResult res;
  res.outcomes = std::move(outcomes);
  res.all_passed = true;
  for (const auto& o : res.outcomes) res.all_passed = res.all_passed && o.passed;
  res.catalog_hash = hash_entries(entries);
  res.catalog_size = static_cast<int>(entries.size());
  res.max_order = options.max_order;
  res.enumeration_cap = options.enumeration_cap;
  return res;
}

HarnessResult run_all(const HarnessOptions& options) {
  HarnessResult res = run_checks(catalog(options.max_order), options, {});
  if (!options.report_path.empty()) write_report(res, options.report_path);
  return res;
}

nlohmann::ordered_json report_json(const HarnessResult& result) {
  ordered_json checks = ordered_json::array();
  for (const auto& o : result.outcomes) {
    ordered_json insts = ordered_json::array();
    for (const auto& i : o.instances) insts.push_back(instance_json(i));
    ordered_json cexs = ordered_json::array();
    for (const auto& i : o.counterexamples) cexs.push_back(instance_json(i));
    checks.push_back(ordered_json{{"check_id", o.check_id},
                                  {"description", o.description},
                                  {"passed", o.passed},
                                  {"instances", std::move(insts)},
                                  {"counterexamples", std::move(cexs)}});
  }
  return ordered_json{
      {"artifact_version", kArtifactVersion},
      {"max_order", result.max_order},
      {"catalog_size", result.catalog_size},
      {"catalog_hash", result.catalog_hash},
      {"caps",
       ordered_json{{"order_cap", kDefaultOrderCap},
                    {"node_budget", kDefaultNodeBudget},
                    {"enumeration_cap", result.enumeration_cap},
                    {"membership_graph_vertex_cap", kMembershipGraphCap}}},
      {"all_passed", result.all_passed},
      {"checks", std::move(checks)}};
}

void write_report(const HarnessResult& result, const std::string& path) {
  namespace fs = std::filesystem;
  fs::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) fs::create_directories(p.parent_path(), ec);
  {
    std::ofstream out(p, std::ios::trunc);
    out << report_json(result).dump(2) << "\n";
    if (!out)
      throw Error(ErrorKind::IoFailure, "report: cannot write " + p.string());
  }
  fs::path cp = p;
  cp.replace_extension(".csv");
  std::ofstream csv(cp, std::ios::trunc);
  csv << "check_id,pass,fail,skip,info,inconclusive,error,runtime_ms\n";
  for (const auto& o : result.outcomes) {
    int pass = 0, fail = 0, skip = 0, info = 0, inconclusive = 0, error = 0;
    for (const auto& i : o.instances) {
      if (i.verdict == "pass") ++pass;
      else if (i.verdict == "fail") ++fail;
      else if (i.verdict == "skip") ++skip;
      else if (i.verdict == "info") ++info;
      else if (i.verdict == "inconclusive") ++inconclusive;
      else ++error;
    }
    csv << o.check_id << ',' << pass << ',' << fail << ',' << skip << ','
        << info << ',' << inconclusive << ',' << error << ',' << o.runtime_ms
        << "\n";
  }
  if (!csv)
    throw Error(ErrorKind::IoFailure, "report: cannot write " + cp.string());
}

}  // namespace zdg
