#include "finejac/classify.hpp"

#include <algorithm>

namespace finejac {

PicRelElement PicRelElement::operator+(const PicRelElement& o) const {
  PicRelElement r = *this;
  if (r.twists.size() != o.twists.size()) fail(Err::TypeMismatch, "mismatched group elements");
  for (size_t i = 0; i < r.twists.size(); ++i) r.twists[i] += o.twists[i];
  r.omega += o.omega;
  return r;
}

PicRelElement PicRelElement::operator-() const {
  PicRelElement r = *this;
  for (auto& t : r.twists) t = -t;
  r.omega = -r.omega;
  return r;
}

long action_shift(const PicRelElement& L, const Triple& t, const DomainConfig& cfg) {
  bool has1 = t.marks & 1;
  long shift = 0;
  for (size_t i = 0; i < L.twists.size(); ++i) {
    int j = static_cast<int>(i) + 2;
    bool hasj = t.marks & (MSet{1} << (j - 1));
    if (has1 && !hasj) shift += L.twists[i];
    if (!has1 && hasj) shift -= L.twists[i];
  }
  shift += L.omega * (has1 ? (2L * cfg.g - 2 * t.h - t.e) : (-2L * t.h - t.e + 2));
  return shift;
}

UniversalStability act(const PicRelElement& L, const UniversalStability& m) {
  const DomainConfig& cfg = m.cfg();
  if (cfg.g < 2 || cfg.n < 1) fail(Err::UnsupportedMode, "action needs g >= 2 and n >= 1");
  if (static_cast<int>(L.twists.size()) != cfg.n - 1)
    fail(Err::TypeMismatch, "group element of the wrong type");
  std::map<Triple, long> values;
  for (const auto& [t, v] : m.canonical_values()) values[t] = v + action_shift(L, t, cfg);
  return UniversalStability(cfg, std::move(values));
}

std::pair<UniversalStability, PicRelElement> normal_form(const UniversalStability& m) {
  const DomainConfig& cfg = m.cfg();
  if (cfg.g < 2 || cfg.n < 1) fail(Err::UnsupportedMode, "normal form needs g >= 2 and n >= 1");
  PicRelElement L = PicRelElement::identity(cfg.n);
  long sum = 0;
  for (int i = 1; i <= cfg.n; ++i) {
    long v = m.value(Triple{2, 0, MSet{1} << (i - 1)});
    sum += v;
    if (i >= 2) L.twists[i - 2] = v;
  }
  L.omega = -floor_div(sum, 2 * cfg.g - 2);
  UniversalStability nf = act(L, m);
  long head = nf.value(Triple{2, 0, 1});
  if (head < 0 || head > 2 * cfg.g - 3)
    fail(Err::ResourceLimit, "normalization left the head value outside its range");
  for (int i = 2; i <= cfg.n; ++i)
    if (nf.value(Triple{2, 0, MSet{1} << (i - 1)}) != 0)
      fail(Err::ResourceLimit, "normalization left a nonzero singleton");
  return {std::move(nf), std::move(L)};
}

std::optional<PicRelElement> are_translation_equivalent(const UniversalStability& m1,
                                                        const UniversalStability& m2) {
  if (!(m1.cfg() == m2.cfg())) fail(Err::TypeMismatch, "conditions of different type");
  auto [n1, l1] = normal_form(m1);
  auto [n2, l2] = normal_form(m2);
  if (!(n1 == n2)) return std::nullopt;
  PicRelElement delta = l1 + (-l2);
  if (!(act(delta, m1) == m2)) fail(Err::ResourceLimit, "translation recomposition failed");
  return delta;
}

namespace {

// value(t) as +-rep value + constant, through the pair-sum law.
struct ValueExpr {
  int rep = -1;
  int sign = 1;
  long constant = 0;
};

struct CensusSpace {
  DomainConfig cfg;
  std::vector<Triple> reps;
  std::map<Triple, int> rep_index;

  ValueExpr expr(const Triple& t) const {
    Triple r = canonical_rep(t, cfg);
    int idx = rep_index.at(r);
    if (r == t) return {idx, 1, 0};
    return {idx, -1, cfg.d + 1 - t.e};
  }
};

// 0 <= sum coef_i * rep_i + constant <= 1
struct WindowConstraint {
  std::map<int, long> coef;
  long constant = 0;
  friend auto operator<=>(const WindowConstraint&, const WindowConstraint&) = default;
};

struct Bounds {
  std::optional<long> lo, hi;
};

std::vector<WindowConstraint> build_constraints(const CensusSpace& space) {
  std::vector<WindowConstraint> out;
  for (const Triple& t : universal_domain(space.cfg)) {
    for (const auto& [t1, t2] : decompositions(t, space.cfg)) {
      WindowConstraint w;
      auto add = [&](const Triple& tr, int sgn, int hshift) {
        ValueExpr e = space.expr(tr);
        w.coef[e.rep] += sgn * e.sign;
        w.constant += sgn * (e.constant - hshift);
      };
      add(t, +1, t.h);
      add(t1, -1, t1.h);
      add(t2, -1, t2.h);
      std::erase_if(w.coef, [](const auto& kv) { return kv.second == 0; });
      out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// One round of interval tightening; returns false on a wiped-out domain.
bool propagate(const std::vector<WindowConstraint>& cons, std::vector<Bounds>& b) {
  bool changed = true;
  int rounds = 0;
  while (changed) {
    if (++rounds > 10000) fail(Err::ResourceLimit, "propagation did not reach a fixpoint");
    changed = false;
    for (const auto& c : cons) {
      if (c.coef.empty()) {
        if (c.constant < 0 || c.constant > 1) return false;
        continue;
      }
      for (const auto& [var, a] : c.coef) {
        // rest = c.constant + sum over other vars
        std::optional<long> rest_lo = c.constant, rest_hi = c.constant;
        for (const auto& [v2, a2] : c.coef) {
          if (v2 == var) continue;
          std::optional<long> term_lo, term_hi;
          if (a2 > 0) {
            if (b[v2].lo) term_lo = a2 * *b[v2].lo;
            if (b[v2].hi) term_hi = a2 * *b[v2].hi;
          } else {
            if (b[v2].hi) term_lo = a2 * *b[v2].hi;
            if (b[v2].lo) term_hi = a2 * *b[v2].lo;
          }
          rest_lo = (rest_lo && term_lo) ? std::optional<long>(*rest_lo + *term_lo) : std::nullopt;
          rest_hi = (rest_hi && term_hi) ? std::optional<long>(*rest_hi + *term_hi) : std::nullopt;
        }
        // 0 <= a*var + rest <= 1, with rest ranging over [rest_lo, rest_hi]
        std::optional<long> new_lo, new_hi;
        auto ceil_div = [](long p, long q) { return floor_div(p + q - 1, q); };  // q > 0
        if (a > 0) {
          if (rest_hi) new_lo = ceil_div(-*rest_hi, a);
          if (rest_lo) new_hi = floor_div(1 - *rest_lo, a);
        } else {
          long b2 = -a;
          if (rest_hi) new_hi = floor_div(*rest_hi, b2);
          if (rest_lo) new_lo = ceil_div(*rest_lo - 1, b2);
        }
        if (new_lo && (!b[var].lo || *new_lo > *b[var].lo)) {
          b[var].lo = new_lo;
          changed = true;
        }
        if (new_hi && (!b[var].hi || *new_hi < *b[var].hi)) {
          b[var].hi = new_hi;
          changed = true;
        }
        if (b[var].lo && b[var].hi && *b[var].lo > *b[var].hi) return false;
      }
    }
  }
  return true;
}

void census_dfs(const CensusSpace& space, const std::vector<WindowConstraint>& cons,
                std::vector<Bounds> bounds, std::vector<UniversalStability>& out) {
  if (!propagate(cons, bounds)) return;
  int branch_var = -1;
  long best_width = 0;
  for (size_t i = 0; i < bounds.size(); ++i) {
    if (!bounds[i].lo || !bounds[i].hi)
      fail(Err::ResourceLimit, "propagation failed to bound a value");
    long width = *bounds[i].hi - *bounds[i].lo;
    if (width > 0 && (branch_var < 0 || width < best_width)) {
      branch_var = static_cast<int>(i);
      best_width = width;
    }
  }
  if (branch_var < 0) {
    std::map<Triple, long> values;
    for (size_t i = 0; i < space.reps.size(); ++i) values[space.reps[i]] = *bounds[i].lo;
    UniversalStability m(space.cfg, std::move(values));
    if (validate_universal(m).empty()) out.push_back(std::move(m));
    return;
  }
  for (long v = *bounds[branch_var].lo; v <= *bounds[branch_var].hi; ++v) {
    std::vector<Bounds> next = bounds;
    next[branch_var].lo = next[branch_var].hi = v;
    census_dfs(space, cons, std::move(next), out);
  }
}

}  // namespace

CensusReport enumerate_census(const DomainConfig& cfg) {
  cfg.check();
  if (cfg.min_valence != 2)
    fail(Err::UnsupportedMode, "census requires the valence-2 domain");
  bool in_policy = (cfg.g == 2 && cfg.n <= 4) || (cfg.g == 3 && cfg.n <= 2);
  if (!in_policy) fail(Err::ResourceLimit, "census outside the default resource policy");

  CensusSpace space;
  space.cfg = cfg;
  for (const Triple& t : universal_domain(cfg))
    if (canonical_rep(t, cfg) == t && !space.rep_index.count(t)) {
      space.rep_index[t] = static_cast<int>(space.reps.size());
      space.reps.push_back(t);
    }
  std::vector<WindowConstraint> cons = build_constraints(space);

  CensusReport report;
  report.cfg = cfg;
  std::vector<UniversalStability> found;

  std::vector<Bounds> base(space.reps.size());
  bool possible = true;
  for (size_t i = 0; i < space.reps.size(); ++i) {
    const Triple& t = space.reps[i];
    if (complement(t, cfg) == t) {
      long rhs = cfg.d + 1 - t.e;
      if (rhs % 2 != 0) {
        possible = false;
        break;
      }
      base[i].lo = base[i].hi = rhs / 2;
    }
  }

  if (possible && cfg.n >= 1) {
    for (long head = 0; head <= 2 * cfg.g - 3; ++head) {
      std::vector<Bounds> bounds = base;
      for (int i = 1; i <= cfg.n; ++i) {
        int idx = space.rep_index.at(Triple{2, 0, MSet{1} << (i - 1)});
        long v = (i == 1) ? head : 0;
        bounds[idx].lo = bounds[idx].hi = v;
      }
      census_dfs(space, cons, std::move(bounds), found);
    }
  } else if (possible) {
    census_dfs(space, cons, std::move(base), found);
  }

  std::sort(found.begin(), found.end(), [](const UniversalStability& a, const UniversalStability& b) {
    return a.canonical_values() < b.canonical_values();
  });
  for (auto& m : found) report.entries.push_back(CensusEntry{std::move(m), std::nullopt, std::nullopt});
  return report;
}

void classify_report(CensusReport& report, bool with_fibres) {
  for (auto& entry : report.entries) {
    entry.universal = is_universally_classical(entry.condition);
    if (with_fibres) entry.fibres = everywhere_fibre_classical(entry.condition);
  }
}

}  // namespace finejac
