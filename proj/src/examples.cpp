#include "finejac/examples.hpp"

#include <array>
#include <set>

namespace finejac {

namespace {
constexpr long kExcluded = 1000000;  // table slot outside the domain
}

UniversalStability example_2_6() {
  DomainConfig cfg{2, 6, 3, 2};
  // Distinguished family of 3-element marking sets; together with all sets of
  // size <= 2 it meets every complementary pair exactly once.
  const std::set<MSet> small3 = {
      // {1,3,5} {1,2,3} {1,5,6} {1,2,4} {1,3,6} {3,4,5} {3,4,6} {2,5,6} {2,3,5} {2,3,6}
      0b010101, 0b000111, 0b110001, 0b001011, 0b100101,
      0b011100, 0b101100, 0b110010, 0b010110, 0b100110};
  std::map<Triple, long> values;
  for (const Triple& t : universal_domain(cfg)) {
    long v = 0;
    if (t.e == 2 && t.h == 0) v = 0;
    else if (t.e == 2 && t.h == 1) v = 2;
    else {
      int size = __builtin_popcount(t.marks);
      bool in_family = size <= 2 || small3.count(t.marks);
      v = in_family ? 0 : 1;
    }
    values[t] = v;
  }
  return make_universal(cfg, values);
}

UniversalStability example_2_4() {
  DomainConfig cfg{2, 4, 0, 2};
  // Index = marking bitmask.
  constexpr std::array<long, 16> row20 = {kExcluded, 1, 0, 1, 0, 1, 0, 2,
                                          0, 2, 0, 2, 0, 2, 0, 2};
  constexpr std::array<long, 16> row30 = {-2, -1, -2, -1, -2, -1, -2, 0,
                                          -2, 0, -1, 0, -1, 0, -1, 0};
  constexpr std::array<long, 16> row21 = {-3, -1, -3, -1, -3, -1, -3, -1,
                                          -3, -1, -2, -1, -2, -1, -2, kExcluded};
  std::map<Triple, long> values;
  for (MSet a = 0; a < 16; ++a) {
    if (row20[a] != kExcluded) values[Triple{2, 0, a}] = row20[a];
    if (row30[a] != kExcluded) values[Triple{3, 0, a}] = row30[a];
    if (row21[a] != kExcluded) values[Triple{2, 1, a}] = row21[a];
  }
  return make_universal(cfg, values);
}

UniversalStability example_3_2() {
  DomainConfig cfg{3, 2, 6, 2};
  // Index = marking bitmask: {}, {1}, {2}, {1,2}.
  constexpr std::array<long, 4> row20 = {kExcluded, 0, 0, 1};
  constexpr std::array<long, 4> row30 = {0, 1, 1, 1};
  constexpr std::array<long, 4> row40 = {1, 2, 1, 2};
  constexpr std::array<long, 4> row21 = {2, 2, 3, 3};
  constexpr std::array<long, 4> row31 = {3, 3, 3, 4};
  constexpr std::array<long, 4> row22 = {4, 5, 5, kExcluded};
  std::map<Triple, long> values;
  for (MSet a = 0; a < 4; ++a) {
    if (row20[a] != kExcluded) values[Triple{2, 0, a}] = row20[a];
    values[Triple{3, 0, a}] = row30[a];
    values[Triple{4, 0, a}] = row40[a];
    values[Triple{2, 1, a}] = row21[a];
    values[Triple{3, 1, a}] = row31[a];
    if (row22[a] != kExcluded) values[Triple{2, 2, a}] = row22[a];
  }
  return make_universal(cfg, values);
}

UniversalStability example_g_1(int g) {
  if (g < 4) fail(Err::NotInDomain, "the one-marking family starts at genus 4");
  DomainConfig cfg{g, 1, g + 1, 2};
  std::map<Triple, long> values;
  for (const Triple& t : universal_domain(cfg)) {
    long v;
    if (t == Triple{2, 0, 1} || t == Triple{3, 0, 1})
      v = 0;
    else if (t == Triple{2, 1, 1})
      v = 1;
    else if (t.h >= g - 2)
      v = t.h + 1;
    else
      v = t.h + (t.marks == 1 ? 1 : 0);
    values[t] = v;
  }
  return make_universal(cfg, values);
}

Graph figure_2_6() {
  // Poles 0 and 7 joined by three paths; the path interiors carry the
  // markings (1,2), (3,4), (5,6).
  std::vector<Vertex> vs(8);
  vs[1].markings = 1 << 0;
  vs[2].markings = 1 << 1;
  vs[3].markings = 1 << 2;
  vs[4].markings = 1 << 3;
  vs[5].markings = 1 << 4;
  vs[6].markings = 1 << 5;
  return make_graph(2, 6, vs,
                    {{0, 1}, {1, 2}, {2, 7}, {0, 3}, {3, 4}, {4, 7}, {0, 5}, {5, 6}, {6, 7}});
}

Graph figure_3_2() {
  // Vertices 0..5; markings 1 at vertex 0 and 2 at vertex 5.
  std::vector<Vertex> vs(6);
  vs[0].markings = 1 << 0;
  vs[5].markings = 1 << 1;
  return make_graph(3, 2, vs,
                    {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {1, 3}, {2, 4}, {3, 4}, {4, 5}});
}

Graph figure_g_1(int g) {
  if (g < 4) fail(Err::NotInDomain, "the one-marking ladder starts at genus 4");
  // Marked cap 0, top rail t_i = i, bottom rail b_i = g-1+i (i = 1..g-1),
  // single rungs except the last one, which is doubled.
  auto t = [&](int i) { return i; };            // 1..g-1
  auto b = [&](int i) { return g - 1 + i; };    // 1..g-1
  std::vector<Vertex> vs(2 * g - 1);
  vs[0].markings = 1;
  std::vector<std::pair<int, int>> edges{{0, t(1)}, {0, b(1)}};
  for (int i = 1; i < g - 1; ++i) {
    edges.emplace_back(t(i), t(i + 1));
    edges.emplace_back(b(i), b(i + 1));
  }
  for (int i = 1; i < g - 1; ++i) edges.emplace_back(t(i), b(i));
  edges.emplace_back(t(g - 1), b(g - 1));
  edges.emplace_back(t(g - 1), b(g - 1));
  return make_graph(g, 1, vs, edges);
}

bool is_example_name(const std::string& name) {
  return name == "ex_2_6" || name == "ex_2_4" || name == "ex_3_2" ||
         name.rfind("ex_g_1", 0) == 0;
}

bool is_figure_name(const std::string& name) {
  return name == "fig2" || name == "fig3" || name.rfind("fig4", 0) == 0;
}

namespace {
int parse_suffix(const std::string& name, const std::string& prefix) {
  std::string rest = name.substr(prefix.size());
  if (!rest.empty() && (rest[0] == ':' || rest[0] == '_')) rest = rest.substr(1);
  if (rest.empty()) fail(Err::ParseError, "missing genus in '" + name + "'");
  try {
    return std::stoi(rest);
  } catch (const std::exception&) {
    fail(Err::ParseError, "bad genus in '" + name + "'");
  }
}
}  // namespace

UniversalStability example_by_name(const std::string& name) {
  if (name == "ex_2_6") return example_2_6();
  if (name == "ex_2_4") return example_2_4();
  if (name == "ex_3_2") return example_3_2();
  if (name.rfind("ex_g_1", 0) == 0) return example_g_1(parse_suffix(name, "ex_g_1"));
  fail(Err::ParseError, "unknown example '" + name + "'");
}

Graph figure_by_name(const std::string& name) {
  if (name == "fig2") return figure_2_6();
  if (name == "fig3") return figure_3_2();
  if (name.rfind("fig4", 0) == 0) return figure_g_1(parse_suffix(name, "fig4"));
  fail(Err::ParseError, "unknown figure '" + name + "'");
}

}  // namespace finejac
