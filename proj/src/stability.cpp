#include "finejac/stability.hpp"

#include <algorithm>
#include <sstream>

namespace finejac {

namespace {
std::string triple_str(const Triple& t) {
  std::ostringstream os;
  os << "(" << t.e << "," << t.h << ",{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (t.marks & (MSet{1} << i)) {
      if (!first) os << ",";
      os << (i + 1);
      first = false;
    }
  os << "})";
  return os.str();
}
}  // namespace

std::string Violation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::PairSum:
      os << "pair-sum law fails at " << triple_str(t) << ": sum offset " << residual;
      break;
    case Kind::Window:
      os << "window law fails at " << triple_str(t) << " = " << triple_str(t1) << " + "
         << triple_str(t2) << ": residual " << residual;
      break;
    case Kind::Missing:
      os << "missing value at " << triple_str(t);
      break;
  }
  return os.str();
}

UniversalStability::UniversalStability(DomainConfig cfg, std::map<Triple, long> canonical_values)
    : cfg_(cfg), values_(std::move(canonical_values)) {
  cfg_.check();
}

bool UniversalStability::has(const Triple& t) const {
  if (!in_domain(t, cfg_)) return false;
  return values_.count(canonical_rep(t, cfg_)) != 0;
}

long UniversalStability::value(const Triple& t) const {
  if (!in_domain(t, cfg_)) fail(Err::NotInDomain, "value at " + triple_str(t));
  Triple rep = canonical_rep(t, cfg_);
  auto it = values_.find(rep);
  if (it == values_.end()) fail(Err::MissingTriple, "no value at " + triple_str(t));
  if (rep == t) return it->second;
  return cfg_.d + 1 - t.e - it->second;
}

UniversalStability make_universal(const DomainConfig& cfg,
                                  const std::map<Triple, long>& entries) {
  cfg.check();
  std::map<Triple, long> canon;
  for (const auto& [t, v] : entries) {
    if (!in_domain(t, cfg)) fail(Err::NotInDomain, "entry at " + triple_str(t));
    Triple rep = canonical_rep(t, cfg);
    long rep_value = (rep == t) ? v : cfg.d + 1 - t.e - v;
    auto [it, inserted] = canon.emplace(rep, rep_value);
    if (!inserted && it->second != rep_value)
      fail(Err::ParseError, "redundant complement disagrees at " + triple_str(t));
  }
  for (const Triple& t : universal_domain(cfg)) {
    Triple rep = canonical_rep(t, cfg);
    if (!canon.count(rep)) fail(Err::MissingTriple, "no value at " + triple_str(t));
    if (rep == t && complement(t, cfg) == t) {
      // Self-paired triple: the pair-sum law pins 2m = d+1-e.
      if (2 * canon[rep] != cfg.d + 1 - t.e)
        fail(Err::ParseError, "self-paired triple violates the pair-sum law at " + triple_str(t));
    }
  }
  return UniversalStability(cfg, std::move(canon));
}

long CStability::value(const Triple& t) const {
  auto it = values.find(t);
  if (it == values.end()) fail(Err::MissingTriple, "no value at " + triple_str(t));
  return it->second;
}

namespace {

// Shared checker for full-domain and per-graph data. `has`/`val` expose the
// available triples; violations are collected exhaustively.
template <typename Has, typename Val>
std::vector<Violation> validate_values(const DomainConfig& cfg,
                                       const std::vector<Triple>& triples, Has has, Val val) {
  std::vector<Violation> out;
  for (const Triple& t : triples) {
    if (!has(t)) {
      out.push_back({Violation::Kind::Missing, t, {}, {}, 0});
      continue;
    }
    Triple c = complement(t, cfg);
    if (has(c)) {
      long sum = val(t) + val(c);
      if (sum != cfg.d + 1 - t.e)
        out.push_back({Violation::Kind::PairSum, t, {}, {}, sum - (cfg.d + 1 - t.e)});
    }
    for (const auto& [t1, t2] : decompositions(t, cfg)) {
      if (!has(t1) || !has(t2)) continue;
      long r = (val(t) - t.h) - (val(t1) - t1.h) - (val(t2) - t2.h);
      if (r < 0 || r > 1) out.push_back({Violation::Kind::Window, t, t1, t2, r});
    }
  }
  // Pair-sum violations show up once per pair member; keep both reports — they
  // name the two sides for debugging.
  return out;
}

}  // namespace

std::vector<Violation> validate_universal(const UniversalStability& m) {
  auto dom = universal_domain(m.cfg());
  return validate_values(
      m.cfg(), dom, [&](const Triple& t) { return m.has(t); },
      [&](const Triple& t) { return m.value(t); });
}

std::vector<Violation> validate_c(const CStability& c) {
  std::vector<Triple> triples;
  triples.reserve(c.values.size());
  for (const auto& [t, v] : c.values) triples.push_back(t);
  return validate_values(
      c.cfg, triples, [&](const Triple& t) { return c.has(t); },
      [&](const Triple& t) { return c.value(t); });
}

long property2_residual(const UniversalStability& m, const Triple& t, const Triple& t1,
                        const Triple& t2) {
  if (!is_compatible_decomposition(t, t1, t2, m.cfg()))
    fail(Err::IncompatibleDecomposition, "not a decomposition of " + triple_str(t));
  return (m.value(t) - t.h) - (m.value(t1) - t1.h) - (m.value(t2) - t2.h);
}

CStability restrict_to_graph(const UniversalStability& m, const Graph& gr) {
  if (gr.g != m.cfg().g || gr.n != m.cfg().n)
    fail(Err::TypeMismatch, "graph type does not match the stability condition");
  if (!is_stable(gr)) fail(Err::TypeMismatch, "graph is not stable");
  CStability c{m.cfg(), gr, {}};
  for (const auto& [t, subsets] : graph_domain(gr))
    if (in_domain(t, m.cfg())) c.values[t] = m.value(t);
  return c;
}

UniversalStability assemble_universal(const std::vector<CStability>& parts,
                                      const DomainConfig& cfg) {
  cfg.check();
  std::map<Triple, long> merged;
  for (const auto& part : parts) {
    if (part.cfg.g != cfg.g || part.cfg.n != cfg.n || part.cfg.d != cfg.d)
      fail(Err::TypeMismatch, "part type does not match the target domain");
    for (const auto& [t, v] : part.values) {
      auto [it, inserted] = merged.emplace(t, v);
      if (!inserted && it->second != v)
        fail(Err::Conflict, "parts disagree at " + triple_str(t) + ": " +
                                std::to_string(it->second) + " vs " + std::to_string(v));
    }
  }
  for (const Triple& t : universal_domain(cfg))
    if (!merged.count(t) && !merged.count(complement(t, cfg)))
      fail(Err::Incomplete, "parts do not cover " + triple_str(t));
  return make_universal(cfg, merged);
}

VStability to_vstability(const CStability& c) {
  VStability v{c.cfg, c.graph, {}};
  for (const auto& [t, subsets] : graph_domain(c.graph)) {
    if (!c.has(t)) continue;
    for (VSet w : subsets) v.values[w] = c.value(t);
  }
  return v;
}

bool is_morphism_compatible(const VStability& v) {
  for (const auto& [t, subsets] : graph_domain(v.graph)) {
    bool have = false;
    long val = 0;
    for (VSet w : subsets) {
      auto it = v.values.find(w);
      if (it == v.values.end()) continue;
      if (have && it->second != val) return false;
      have = true;
      val = it->second;
    }
  }
  return true;
}

CStability from_vstability(const VStability& v) {
  if (!is_morphism_compatible(v))
    fail(Err::NotMorphismCompatible, "values differ within a fiber");
  CStability c{v.cfg, v.graph, {}};
  for (const auto& [t, subsets] : graph_domain(v.graph)) {
    if (!in_domain(t, v.cfg)) continue;
    for (VSet w : subsets) {
      auto it = v.values.find(w);
      if (it != v.values.end()) {
        c.values[t] = it->second;
        break;
      }
    }
  }
  return c;
}

}  // namespace finejac
