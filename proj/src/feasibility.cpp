#include "finejac/feasibility.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace finejac {

void LinearForm::add_term(const VarId& v, const Rat& c) {
  if (c == 0) return;
  auto it = coeffs.find(v);
  if (it == coeffs.end()) {
    coeffs.emplace(v, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
  constant += other.constant;
  for (const auto& [v, c] : other.coeffs) add_term(v, c);
  return *this;
}

LinearForm& LinearForm::operator*=(const Rat& s) {
  if (s == 0) {
    coeffs.clear();
    constant = 0;
    return *this;
  }
  constant *= s;
  for (auto& [v, c] : coeffs) c *= s;
  return *this;
}

Rat LinearForm::evaluate(const std::map<VarId, Rat>& assignment) const {
  Rat r = constant;
  for (const auto& [v, c] : coeffs) {
    auto it = assignment.find(v);
    if (it == assignment.end()) fail(Err::MissingTriple, "unassigned variable " + v);
    r += c * it->second;
  }
  return r;
}

std::string LinearSystem::describe() const {
  std::ostringstream os;
  for (const auto& row : rows) {
    bool first = true;
    for (const auto& [v, c] : row.form.coeffs) {
      if (!first) os << " + ";
      os << c.get_str() << "*" << v;
      first = false;
    }
    if (first) os << "0";
    if (row.form.constant != 0) os << " + " << row.form.constant.get_str();
    os << (row.rel == Rel::LT ? " < 0" : row.rel == Rel::LE ? " <= 0" : " = 0") << "\n";
  }
  return os.str();
}

namespace {

constexpr size_t kRowBudget = 500000;

// Internal row: dense coefficients over an indexed variable set, strictness
// flag and a sparse multiplier vector over the split input rows.
struct Row {
  std::vector<Rat> coef;
  Rat constant = 0;
  bool strict = false;
  std::map<int, Rat> prov;  // split-row index -> nonnegative multiplier

  bool is_constant() const {
    return std::all_of(coef.begin(), coef.end(), [](const Rat& c) { return c == 0; });
  }
  bool constant_satisfied() const {
    return strict ? constant < 0 : constant <= 0;
  }
};

// Positive scaling bringing the coefficients to integers with content 1.
void normalize(Row& row) {
  mpz_class lcm_den = 1, gcd_num = 0;
  auto fold = [&](const Rat& q) {
    if (q == 0) return;
    mpz_class den = q.get_den(), num = abs(q.get_num());
    mpz_class g;
    mpz_lcm(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    lcm_den = g;
    mpz_gcd(g.get_mpz_t(), gcd_num.get_mpz_t(), num.get_mpz_t());
    gcd_num = g;
  };
  bool any = false;
  for (const Rat& c : row.coef)
    if (c != 0) {
      fold(c);
      any = true;
    }
  if (!any) return;  // constant rows keep their scale
  Rat scale(lcm_den, gcd_num == 0 ? mpz_class(1) : gcd_num);
  scale.canonicalize();
  if (scale == 1) return;
  for (Rat& c : row.coef) c *= scale;
  row.constant *= scale;
  for (auto& [i, m] : row.prov) m *= scale;
}

struct SplitSystem {
  std::vector<Row> rows;                    // split rows, provenance = identity
  std::vector<std::pair<int, int>> origin;  // split index -> (input row, sign)
  std::vector<VarId> vars;
};

SplitSystem split_input(const LinearSystem& system) {
  SplitSystem s;
  std::set<VarId> varset;
  for (const auto& row : system.rows)
    for (const auto& [v, c] : row.form.coeffs) varset.insert(v);
  s.vars.assign(varset.begin(), varset.end());
  std::map<VarId, int> index;
  for (size_t i = 0; i < s.vars.size(); ++i) index[s.vars[i]] = static_cast<int>(i);

  auto push = [&](const LinearForm& f, bool strict, int input_idx, int sign) {
    Row r;
    r.coef.assign(s.vars.size(), Rat(0));
    for (const auto& [v, c] : f.coeffs) r.coef[index.at(v)] = sign * c;
    r.constant = sign * f.constant;
    r.strict = strict;
    r.prov[static_cast<int>(s.origin.size())] = 1;
    s.origin.emplace_back(input_idx, sign);
    s.rows.push_back(std::move(r));
  };
  for (size_t i = 0; i < system.rows.size(); ++i) {
    const Constraint& c = system.rows[i];
    switch (c.rel) {
      case Rel::LT:
        push(c.form, true, static_cast<int>(i), +1);
        break;
      case Rel::LE:
        push(c.form, false, static_cast<int>(i), +1);
        break;
      case Rel::EQ:
        push(c.form, false, static_cast<int>(i), +1);
        push(c.form, false, static_cast<int>(i), -1);
        break;
    }
  }
  return s;
}

// Keep one row per direction: larger constant is tighter for f + c <= 0,
// strict beats non-strict on ties.
void dedup(std::vector<Row>& rows) {
  std::map<std::vector<Rat>, size_t> best;
  std::vector<Row> kept;
  for (auto& r : rows) {
    if (r.is_constant()) {
      kept.push_back(std::move(r));
      continue;
    }
    auto it = best.find(r.coef);
    if (it == best.end()) {
      best[r.coef] = kept.size();
      kept.push_back(std::move(r));
    } else {
      Row& k = kept[it->second];
      if (r.constant > k.constant || (r.constant == k.constant && r.strict && !k.strict))
        k = std::move(r);
    }
  }
  rows = std::move(kept);
}

// rows must not contain `var` afterwards; satisfied constant rows are dropped.
// Returns the index of a violated constant row, or -1.
int eliminate_var(std::vector<Row>& rows, size_t var) {
  std::vector<Row> keep;
  std::vector<size_t> upper, lower;  // positive / negative coefficient
  for (size_t i = 0; i < rows.size(); ++i) {
    const Rat& c = rows[i].coef[var];
    if (c > 0)
      upper.push_back(i);
    else if (c < 0)
      lower.push_back(i);
    else
      keep.push_back(rows[i]);
  }
  for (size_t iu : upper)
    for (size_t il : lower) {
      const Row& u = rows[iu];
      const Row& l = rows[il];
      Rat su = 1 / u.coef[var];        // > 0
      Rat sl = -1 / l.coef[var];       // > 0
      Row combined;
      combined.coef.assign(u.coef.size(), Rat(0));
      for (size_t k = 0; k < u.coef.size(); ++k) combined.coef[k] = su * u.coef[k] + sl * l.coef[k];
      combined.constant = su * u.constant + sl * l.constant;
      combined.strict = u.strict || l.strict;
      combined.prov = u.prov;
      for (auto& [i, m] : combined.prov) m *= su;
      for (const auto& [i, m] : l.prov) {
        auto [it, inserted] = combined.prov.emplace(i, m * sl);
        if (!inserted) it->second += m * sl;
      }
      combined.coef[var] = 0;
      normalize(combined);
      if (combined.is_constant() && combined.constant_satisfied()) continue;
      keep.push_back(std::move(combined));
      if (keep.size() > kRowBudget) fail(Err::ResourceLimit, "row budget exceeded");
    }
  dedup(keep);
  rows = std::move(keep);
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i].is_constant() && !rows[i].constant_satisfied()) return static_cast<int>(i);
  return -1;
}

size_t pick_variable(const std::vector<Row>& rows, const std::vector<char>& done) {
  size_t best = done.size();
  long best_score = -1;
  for (size_t v = 0; v < done.size(); ++v) {
    if (done[v]) continue;
    long pos = 0, neg = 0;
    for (const auto& r : rows) {
      if (r.coef[v] > 0) ++pos;
      if (r.coef[v] < 0) ++neg;
    }
    long score = pos * neg;
    if (best == done.size() || score < best_score) {
      best = v;
      best_score = score;
    }
  }
  return best;
}

Certificate certificate_from_row(const Row& row, const SplitSystem& split) {
  std::map<int, Rat> merged;
  for (const auto& [split_idx, mult] : row.prov) {
    auto [input_idx, sign] = split.origin[split_idx];
    merged[input_idx] += sign * mult;
  }
  Certificate cert;
  for (const auto& [idx, m] : merged)
    if (m != 0) cert.combination.emplace_back(idx, m);
  return cert;
}

}  // namespace

LinearSystem eliminate(const LinearSystem& system, const VarId& var) {
  LinearSystem out;
  std::vector<const Constraint*> upper, lower;
  for (const auto& row : system.rows) {
    auto it = row.form.coeffs.find(var);
    if (it == row.form.coeffs.end()) {
      bool constant_row = row.form.coeffs.empty();
      if (constant_row) {
        const Rat& c = row.form.constant;
        bool ok = row.rel == Rel::LT ? c < 0 : row.rel == Rel::LE ? c <= 0 : c == 0;
        if (ok) continue;
      }
      out.rows.push_back(row);
      continue;
    }
    if (row.rel == Rel::EQ) {
      upper.push_back(&row);
      lower.push_back(&row);
    } else if (it->second > 0) {
      upper.push_back(&row);
    } else {
      lower.push_back(&row);
    }
  }
  for (const Constraint* u : upper)
    for (const Constraint* l : lower) {
      if (u == l) continue;
      Rat cu = u->form.coeffs.at(var);
      Rat cl = l->form.coeffs.at(var);
      // Scale u by 1/|cu| with the sign making var's coefficient +1, and l
      // likewise to -1; for EQ rows the needed sign is always available.
      Rat su = (u->rel == Rel::EQ && cu < 0) ? Rat(-1) / cu : Rat(1) / cu;
      Rat sl = (l->rel == Rel::EQ && cl > 0) ? Rat(1) / cl : Rat(-1) / cl;
      if (su <= 0 || sl <= 0) continue;  // wrong-side non-EQ row
      LinearForm f = u->form;
      f *= su;
      LinearForm g = l->form;
      g *= sl;
      f += g;
      f.coeffs.erase(var);
      bool strict = (u->rel == Rel::LT) || (l->rel == Rel::LT);
      if (f.coeffs.empty()) {
        bool ok = strict ? f.constant < 0 : f.constant <= 0;
        if (ok) continue;
      }
      out.rows.push_back(Constraint{std::move(f), strict ? Rel::LT : Rel::LE});
    }
  return out;
}

Outcome solve(const LinearSystem& system) {
  SplitSystem split = split_input(system);
  if (split.vars.size() > 32) fail(Err::ResourceLimit, "too many variables");
  if (system.rows.size() > 10000) fail(Err::ResourceLimit, "too many constraints");

  std::vector<Row> rows = split.rows;
  for (auto& r : rows) normalize(r);
  dedup(rows);
  // Constant rows can already be violated before any elimination.
  for (const auto& r : rows)
    if (r.is_constant() && !r.constant_satisfied()) {
      Outcome out;
      out.certificate = certificate_from_row(r, split);
      if (!verify(out, system)) fail(Err::ResourceLimit, "certificate failed re-verification");
      return out;
    }

  size_t nvars = split.vars.size();
  std::vector<char> done(nvars, 0);
  std::vector<size_t> order;
  std::vector<std::vector<Row>> snapshots;
  for (size_t step = 0; step < nvars; ++step) {
    size_t var = pick_variable(rows, done);
    done[var] = 1;
    order.push_back(var);
    snapshots.push_back(rows);
    int bad = eliminate_var(rows, var);
    if (bad >= 0) {
      Outcome out;
      out.certificate = certificate_from_row(rows[bad], split);
      if (!verify(out, system)) fail(Err::ResourceLimit, "certificate failed re-verification");
      return out;
    }
  }

  // Feasible: back-substitute midpoints in reverse elimination order.
  std::vector<std::optional<Rat>> value(nvars);
  for (size_t s = nvars; s-- > 0;) {
    size_t var = order[s];
    const std::vector<Row>& snap = snapshots[s];
    std::optional<Rat> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const Row& r : snap) {
      const Rat& c = r.coef[var];
      if (c == 0) continue;
      Rat rest = r.constant;
      for (size_t v = 0; v < nvars; ++v) {
        if (v == var || r.coef[v] == 0) continue;
        rest += r.coef[v] * *value[v];
      }
      Rat bound = -rest / c;
      if (c > 0) {  // var <= bound (or <)
        if (!hi || bound < *hi || (bound == *hi && r.strict)) {
          hi = bound;
          hi_strict = r.strict;
        }
      } else {  // var >= bound (or >)
        if (!lo || bound > *lo || (bound == *lo && r.strict)) {
          lo = bound;
          lo_strict = r.strict;
        }
      }
    }
    if (lo && hi)
      value[var] = (*lo + *hi) / 2;
    else if (lo)
      value[var] = *lo + 1;
    else if (hi)
      value[var] = *hi - 1;
    else
      value[var] = 0;
    // Closed intervals may pin a single point; the midpoint handles lo == hi.
    (void)lo_strict;
    (void)hi_strict;
  }

  Outcome out;
  Witness w;
  for (size_t v = 0; v < nvars; ++v) w.assignment[split.vars[v]] = *value[v];
  out.witness = std::move(w);
  if (!verify(out, system)) fail(Err::ResourceLimit, "witness failed re-verification");
  return out;
}

bool verify(const Outcome& outcome, const LinearSystem& system) {
  if (outcome.witness) {
    for (const auto& row : system.rows) {
      Rat v = row.form.evaluate(outcome.witness->assignment);
      bool ok = row.rel == Rel::LT ? v < 0 : row.rel == Rel::LE ? v <= 0 : v == 0;
      if (!ok) return false;
    }
    return true;
  }
  if (!outcome.certificate) return false;
  LinearForm sum;
  bool any_strict = false, any = false;
  for (const auto& [idx, mult] : outcome.certificate->combination) {
    if (idx < 0 || idx >= static_cast<int>(system.rows.size())) return false;
    const Constraint& row = system.rows[idx];
    if (row.rel != Rel::EQ && mult < 0) return false;
    if (mult == 0) continue;
    any = true;
    if (row.rel == Rel::LT && mult > 0) any_strict = true;
    LinearForm scaled = row.form;
    scaled *= mult;
    sum += scaled;
  }
  if (!any || !sum.coeffs.empty()) return false;
  // The combination asserts sum < 0 (strict) or sum <= 0; a contradiction
  // means the constant refutes that.
  return any_strict ? sum.constant >= 0 : sum.constant > 0;
}

}  // namespace finejac
