#include "finejac/json_io.hpp"

#include <fstream>
#include <sstream>

namespace finejac {

json rat_to_json(const Rat& q) {
  return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rat rat_from_json(const json& j) {
  try {
    if (j.is_number_integer()) return Rat(j.get<long>());
    mpz_class num(j.at("num").get<std::string>());
    mpz_class den(j.at("den").get<std::string>());
    if (den == 0) fail(Err::ParseError, "zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
  } catch (const json::exception& e) {
    fail(Err::ParseError, std::string("bad rational: ") + e.what());
  }
}

json graph_to_json(const Graph& gr) {
  json verts = json::array();
  for (const auto& v : gr.vertices) {
    json marks = json::array();
    for (int i = 0; i < 32; ++i)
      if (v.markings & (MSet{1} << i)) marks.push_back(i + 1);
    verts.push_back(json{{"genus", v.genus}, {"markings", marks}});
  }
  json edges = json::array();
  for (auto [a, b] : gr.edges) edges.push_back(json::array({a, b}));
  return json{{"g", gr.g}, {"n", gr.n}, {"vertices", verts}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  try {
    std::vector<Vertex> verts;
    for (const auto& jv : j.at("vertices")) {
      Vertex v;
      v.genus = jv.at("genus").get<int>();
      for (const auto& m : jv.at("markings")) v.markings |= MSet{1} << (m.get<int>() - 1);
      verts.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& je : j.at("edges")) edges.emplace_back(je.at(0).get<int>(), je.at(1).get<int>());
    return make_graph(j.at("g").get<int>(), j.at("n").get<int>(), std::move(verts),
                      std::move(edges));
  } catch (const json::exception& e) {
    fail(Err::ParseError, std::string("bad graph: ") + e.what());
  }
}

json triple_to_json(const Triple& t) {
  json marks = json::array();
  for (int i = 0; i < 32; ++i)
    if (t.marks & (MSet{1} << i)) marks.push_back(i + 1);
  return json{{"e", t.e}, {"h", t.h}, {"A", marks}};
}

Triple triple_from_json(const json& j) {
  try {
    Triple t;
    t.e = j.at("e").get<int>();
    t.h = j.at("h").get<int>();
    for (const auto& m : j.at("A")) t.marks |= MSet{1} << (m.get<int>() - 1);
    return t;
  } catch (const json::exception& e) {
    fail(Err::ParseError, std::string("bad triple: ") + e.what());
  }
}

json universal_to_json(const UniversalStability& m) {
  json values = json::array();
  for (const auto& [t, v] : m.canonical_values()) {
    json jt = triple_to_json(t);
    jt["m"] = v;
    values.push_back(jt);
  }
  json out{{"g", m.cfg().g}, {"n", m.cfg().n}, {"d", m.cfg().d}, {"values", values}};
  if (m.cfg().min_valence != 2) out["min_valence"] = m.cfg().min_valence;
  return out;
}

UniversalStability universal_from_json(const json& j) {
  try {
    DomainConfig cfg;
    cfg.g = j.at("g").get<int>();
    cfg.n = j.at("n").get<int>();
    cfg.d = j.at("d").get<long>();
    cfg.min_valence = j.value("min_valence", 2);
    std::map<Triple, long> entries;
    for (const auto& jv : j.at("values")) {
      Triple t = triple_from_json(jv);
      long v = jv.at("m").get<long>();
      auto [it, inserted] = entries.emplace(t, v);
      if (!inserted && it->second != v) fail(Err::ParseError, "duplicate value disagrees");
    }
    return make_universal(cfg, entries);
  } catch (const json::exception& e) {
    fail(Err::ParseError, std::string("bad stability condition: ") + e.what());
  }
}

namespace {
const char* rel_name(Rel r) { return r == Rel::LT ? "<" : r == Rel::LE ? "<=" : "="; }
Rel rel_from_name(const std::string& s) {
  if (s == "<") return Rel::LT;
  if (s == "<=") return Rel::LE;
  if (s == "=") return Rel::EQ;
  fail(Err::ParseError, "bad relation '" + s + "'");
}
}  // namespace

json system_to_json(const LinearSystem& s) {
  json rows = json::array();
  for (const auto& row : s.rows) {
    json terms = json::object();
    for (const auto& [v, c] : row.form.coeffs) terms[v] = rat_to_json(c);
    rows.push_back(json{{"terms", terms},
                        {"constant", rat_to_json(row.form.constant)},
                        {"rel", rel_name(row.rel)}});
  }
  return json{{"rows", rows}};
}

LinearSystem system_from_json(const json& j) {
  try {
    LinearSystem s;
    for (const auto& jr : j.at("rows")) {
      Constraint c;
      for (const auto& [var, jc] : jr.at("terms").items()) c.form.add_term(var, rat_from_json(jc));
      c.form.constant = rat_from_json(jr.at("constant"));
      c.rel = rel_from_name(jr.at("rel").get<std::string>());
      s.rows.push_back(std::move(c));
    }
    return s;
  } catch (const json::exception& e) {
    fail(Err::ParseError, std::string("bad system: ") + e.what());
  }
}

json outcome_to_json(const Outcome& o) {
  json out;
  if (o.witness) {
    json w = json::object();
    for (const auto& [v, q] : o.witness->assignment) w[v] = rat_to_json(q);
    out["witness"] = w;
  }
  if (o.certificate) {
    json c = json::array();
    for (const auto& [row, mult] : o.certificate->combination)
      c.push_back(json::array({row, rat_to_json(mult)}));
    out["certificate"] = c;
  }
  return out;
}

json verdict_to_json(const ClassicalityVerdict& v) {
  json out{{"classical", v.classical}};
  if (v.witness) {
    json w = json::object();
    for (const auto& [var, q] : v.witness->assignment) w[var] = rat_to_json(q);
    out["witness"] = w;
  }
  if (v.certificate) {
    json c = json::array();
    for (const auto& [row, mult] : v.certificate->combination)
      c.push_back(json::array({row, rat_to_json(mult)}));
    out["certificate"] = c;
  }
  out["system"] = system_to_json(v.system);
  return out;
}

json census_to_json(const CensusReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json je{{"condition", universal_to_json(e.condition)}};
    if (e.universal) {
      je["universally_classical"] = e.universal->classical;
      je["universal_verdict"] = verdict_to_json(*e.universal);
    }
    if (e.fibres) {
      je["everywhere_fibre_classical"] = e.fibres->all_classical();
      json off = json::array();
      for (size_t idx : e.fibres->offending)
        off.push_back(graph_to_json(e.fibres->graphs[idx]));
      je["offending_graphs"] = off;
    }
    entries.push_back(std::move(je));
  }
  return json{{"g", r.cfg.g}, {"n", r.cfg.n}, {"d", r.cfg.d}, {"entries", entries}};
}

std::string census_to_csv(const CensusReport& r) {
  std::ostringstream os;
  std::vector<Triple> domain = universal_domain(r.cfg);
  os << "entry,universally_classical,everywhere_fibre_classical";
  for (const Triple& t : domain) {
    os << ",m[e=" << t.e << " h=" << t.h << " A={";
    bool first = true;
    for (int i = 0; i < 32; ++i)
      if (t.marks & (MSet{1} << i)) {
        if (!first) os << ' ';
        os << (i + 1);
        first = false;
      }
    os << "}]";
  }
  os << "\n";
  for (size_t i = 0; i < r.entries.size(); ++i) {
    const CensusEntry& e = r.entries[i];
    os << i << ',';
    if (e.universal)
      os << (e.universal->classical ? "yes" : "no");
    os << ',';
    if (e.fibres)
      os << (e.fibres->all_classical() ? "yes" : "no");
    for (const Triple& t : domain) os << ',' << e.condition.value(t);
    os << "\n";
  }
  return os.str();
}

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Err::ParseError, "invalid JSON");
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

}  // namespace finejac
