#include "finejac/classical.hpp"

#include <algorithm>
#include <numeric>

namespace finejac {

namespace {

std::string xvar(int i) { return "x" + std::to_string(i + 1); }
std::string phivar(int v) { return "phi" + std::to_string(v); }

Rat form_value_at(const LinearForm& f, const MarkingVector& x) {
  Rat r = f.constant;
  for (const auto& [v, c] : f.coeffs) {
    int idx = std::stoi(v.substr(1)) - 1;
    r += c * x.x.at(idx);
  }
  return r;
}

}  // namespace

GraphDivisor make_divisor(const DomainConfig& cfg, const Graph& graph, std::vector<Rat> phi) {
  if (graph.g != cfg.g || graph.n != cfg.n)
    fail(Err::TypeMismatch, "divisor graph does not match the configuration");
  if (static_cast<int>(phi.size()) != graph.num_vertices())
    fail(Err::TypeMismatch, "one value per vertex required");
  Rat total = std::accumulate(phi.begin(), phi.end(), Rat(0));
  if (total != cfg.d) fail(Err::TypeMismatch, "total degree mismatch");
  return GraphDivisor{cfg, graph, std::move(phi)};
}

Rat MarkingVector::sum_over(MSet marks) const {
  Rat r = 0;
  for (size_t i = 0; i < x.size(); ++i)
    if (marks & (MSet{1} << i)) r += x[i];
  return r;
}

bool is_general(const GraphDivisor& div) {
  for (VSet w : biconnected_subsets(div.graph)) {
    SubsetStats st = subset_stats(div.graph, w);
    Rat sum = 0;
    for (int v = 0; v < div.graph.num_vertices(); ++v)
      if (w & (VSet{1} << v)) sum += div.phi[v];
    sum -= Rat(st.val, 2);
    if (is_integer(sum)) return false;
  }
  return true;
}

CStability induce_on_graph(const GraphDivisor& div) {
  if (!is_general(div)) fail(Err::NonGeneric, "divisor sits on a half-integer wall");
  CStability c{div.cfg, div.graph, {}};
  for (const auto& [t, subsets] : graph_domain(div.graph)) {
    if (!in_domain(t, div.cfg)) continue;
    bool have = false;
    long value = 0;
    for (VSet w : subsets) {
      Rat sum = 0;
      for (int v = 0; v < div.graph.num_vertices(); ++v)
        if (w & (VSet{1} << v)) sum += div.phi[v];
      long candidate = ceil_long(sum - Rat(t.e, 2));
      if (have && candidate != value)
        fail(Err::FiberDisagreement, "realizing subsets disagree; divisor is not compatible");
      have = true;
      value = candidate;
    }
    c.values[t] = value;
  }
  return c;
}

LinearForm induced_form(const Triple& t, const DomainConfig& cfg) {
  if (cfg.g < 2) fail(Err::NotHyperbolic, "induced forms need genus at least 2");
  if (t.e < 2) fail(Err::NotInDomain, "induced forms need valence at least 2");
  long k = t.e + 2 * t.h - 2;           // unlabeled vertices in a realizing subset
  long kc = 2 * cfg.g - t.e - 2 * t.h;  // same for the complement
  Rat denom(2 * cfg.g - 2);
  LinearForm f;
  f.constant = Rat(k * (cfg.d + 1 - cfg.g)) / denom;
  for (int i = 0; i < cfg.n; ++i) {
    MSet bit = MSet{1} << i;
    if (t.marks & bit)
      f.add_term(xvar(i), Rat(kc) / denom);
    else
      f.add_term(xvar(i), Rat(-k) / denom);
  }
  return f;
}

long induced_value(const Triple& t, const MarkingVector& x) {
  if (!in_domain(t, x.cfg)) fail(Err::NotInDomain, "triple outside the stability domain");
  Rat val = form_value_at(induced_form(t, x.cfg), x);
  if (is_integer(val)) fail(Err::NonGeneric, "ceiling argument is an integer");
  return ceil_long(val) + t.h - 1;
}

UniversalStability induce_universal(const MarkingVector& x) {
  x.cfg.check();
  if (x.cfg.g < 2) fail(Err::NotHyperbolic, "induction needs genus at least 2");
  if (x.cfg.min_valence != 2)
    fail(Err::TypeMismatch, "induction is defined over the valence-2 domain");
  if (static_cast<int>(x.x.size()) != x.cfg.n)
    fail(Err::TypeMismatch, "one value per marking required");
  std::map<Triple, long> values;
  for (const Triple& t : universal_domain(x.cfg)) {
    Triple rep = canonical_rep(t, x.cfg);
    if (values.count(rep)) continue;
    values[rep] = induced_value(rep, x);
  }
  return UniversalStability(x.cfg, std::move(values));
}

namespace {

void append_window_rows(LinearSystem& sys, const LinearForm& x_form, long lo_excl) {
  // lo_excl < X < lo_excl + 1, as two strict rows.
  LinearForm lower;  // lo_excl - X < 0
  lower.constant = lo_excl;
  lower += [&] {
    LinearForm neg = x_form;
    neg *= Rat(-1);
    return neg;
  }();
  sys.rows.push_back(Constraint{std::move(lower), Rel::LT});
  LinearForm upper = x_form;  // X - (lo_excl + 1) < 0
  upper.constant -= lo_excl + 1;
  sys.rows.push_back(Constraint{std::move(upper), Rel::LT});
}

}  // namespace

LinearSystem classicality_system_universal(const UniversalStability& m) {
  const DomainConfig& cfg = m.cfg();
  if (cfg.g < 2) fail(Err::NotHyperbolic, "classicality needs genus at least 2");
  if (cfg.min_valence != 2)
    fail(Err::TypeMismatch, "classicality systems are defined over the valence-2 domain");
  LinearSystem sys;
  for (const Triple& t : universal_domain(cfg)) {
    if (canonical_rep(t, cfg) != t) continue;
    append_window_rows(sys, induced_form(t, cfg), m.value(t) - t.h);
  }
  return sys;
}

LinearSystem classicality_system_graph(const Graph& gr, const CStability& c) {
  if (gr.num_vertices() > kMaxVerticesSubsets) fail(Err::TooLarge, "graph too large");
  LinearSystem sys;
  LinearForm total;
  for (int v = 0; v < gr.num_vertices(); ++v) total.add_term(phivar(v), 1);
  total.constant = -Rat(c.cfg.d);
  sys.rows.push_back(Constraint{std::move(total), Rel::EQ});
  for (VSet w : biconnected_subsets(gr)) {
    if (!(w & 1)) continue;  // one row pair per complement pair: keep the side with vertex 0
    Triple t = alpha(gr, w);
    if (!c.has(t)) continue;
    LinearForm phi_w;
    for (int v = 0; v < gr.num_vertices(); ++v)
      if (w & (VSet{1} << v)) phi_w.add_term(phivar(v), 1);
    phi_w.constant = -Rat(t.e, 2);
    append_window_rows(sys, phi_w, c.value(t) - 1);
  }
  return sys;
}

bool is_two_connected(const Graph& gr) {
  for (int i = 0; i < gr.num_edges(); ++i) {
    auto [a, b] = gr.edges[i];
    if (a == b) continue;
    Graph cut = gr;
    cut.edges.erase(cut.edges.begin() + i);
    if (!is_connected(cut)) return false;
  }
  return true;
}

bool is_trivalent(const Graph& gr) {
  for (int v = 0; v < gr.num_vertices(); ++v)
    if (gr.vertices[v].genus != 0 || gr.valence(v) + gr.num_markings(v) != 3) return false;
  return true;
}

GraphDivisor divisor_from_marking_vector(const Graph& gr, const MarkingVector& x) {
  Rat total;
  for (const Rat& xi : x.x) total += xi;
  Rat common = (Rat(x.cfg.d) - total) / Rat(2 * x.cfg.g - 2);
  std::vector<Rat> phi(gr.num_vertices(), common);
  for (int v = 0; v < gr.num_vertices(); ++v) {
    MSet marks = gr.vertices[v].markings;
    if (marks == 0) continue;
    if (__builtin_popcount(marks) != 1)
      fail(Err::TypeMismatch, "vertex carries more than one marking");
    phi[v] = x.x.at(__builtin_ctz(marks));
  }
  return make_divisor(x.cfg, gr, std::move(phi));
}

ClassicalityVerdict is_universally_classical(const UniversalStability& m) {
  ClassicalityVerdict v;
  v.system = classicality_system_universal(m);
  Outcome out = solve(v.system);
  if (out.feasible()) {
    // Round-trip the witness before trusting the verdict.
    MarkingVector x{m.cfg(), std::vector<Rat>(m.cfg().n, Rat(0))};
    for (int i = 0; i < m.cfg().n; ++i) {
      auto it = out.witness->assignment.find(xvar(i));
      if (it != out.witness->assignment.end()) x.x[i] = it->second;
    }
    if (!(induce_universal(x) == m))
      fail(Err::ResourceLimit, "witness does not induce the condition back");
    v.classical = true;
    v.witness = std::move(out.witness);
  } else {
    v.classical = false;
    v.certificate = std::move(out.certificate);
  }
  return v;
}

ClassicalityVerdict is_fibre_classical(const Graph& gr, const CStability& c) {
  ClassicalityVerdict v;
  if (c.cfg.g >= 2 && is_trivalent(gr) && is_two_connected(gr)) {
    // Maximally degenerate model: one marking value per variable, the
    // unlabeled vertices share the eliminated common value.
    LinearSystem sys;
    for (const auto& [t, value] : c.values) {
      if (canonical_rep(t, c.cfg) != t || !c.has(complement(t, c.cfg))) continue;
      append_window_rows(sys, induced_form(t, c.cfg), value - t.h);
    }
    v.system = std::move(sys);
  } else {
    v.system = classicality_system_graph(gr, c);
  }
  Outcome out = solve(v.system);
  v.classical = out.feasible();
  v.witness = std::move(out.witness);
  v.certificate = std::move(out.certificate);
  return v;
}

FibreReport everywhere_fibre_classical(const UniversalStability& m) {
  FibreReport report;
  report.graphs = enumerate_stable_graphs(m.cfg().g, m.cfg().n, /*trivalent_only=*/true);
  for (size_t i = 0; i < report.graphs.size(); ++i) {
    CStability c = restrict_to_graph(m, report.graphs[i]);
    report.verdicts.push_back(is_fibre_classical(report.graphs[i], c));
    if (!report.verdicts.back().classical) report.offending.push_back(i);
  }
  return report;
}

}  // namespace finejac
