#include "finejac/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace finejac {

namespace {

std::vector<std::vector<int>> adjacency(const Graph& gr) {
  std::vector<std::vector<int>> adj(gr.num_vertices());
  for (auto [a, b] : gr.edges) {
    if (a != b) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  return adj;
}

// Connectivity of the sub-multigraph induced by `within`, ignoring vertices
// outside the mask. Loops are irrelevant here.
bool connected_within(const Graph& gr, VSet within) {
  if (within == 0) return false;
  int start = __builtin_ctz(within);
  VSet seen = VSet{1} << start;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [a, b] : gr.edges) {
      if (a == b) continue;
      int u = -1;
      if (a == v) u = b;
      if (b == v) u = a;
      if (u < 0) continue;
      VSet bit = VSet{1} << u;
      if ((within & bit) && !(seen & bit)) {
        seen |= bit;
        stack.push_back(u);
      }
    }
  }
  return seen == within;
}

VSet full_mask(int v) { return (v >= 32) ? ~VSet{0} : ((VSet{1} << v) - 1); }

}  // namespace

int Graph::valence(int v) const {
  int d = 0;
  for (auto [a, b] : edges) {
    if (a == v) ++d;
    if (b == v) ++d;
  }
  return d;
}

void Graph::normalize_edges() {
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
}

void Graph::check_invariants() const {
  int v = num_vertices();
  if (v == 0) fail(Err::Disconnected, "graph has no vertices");
  for (auto [a, b] : edges)
    if (a < 0 || b < 0 || a >= v || b >= v)
      fail(Err::UnknownEdge, "edge endpoint out of range");
  if (!is_connected(*this)) fail(Err::Disconnected, "graph is not connected");
  MSet all = 0;
  int count = 0;
  for (const auto& vert : vertices) {
    if (vert.genus < 0) fail(Err::ParseError, "negative vertex genus");
    all |= vert.markings;
    count += __builtin_popcount(vert.markings);
  }
  if (all != full_mask(n) || count != n)
    fail(Err::ParseError, "markings do not partition {1..n}");
  if (total_genus(*this) != g)
    fail(Err::ParseError, "vertex data does not add up to the ambient genus");
}

Graph make_graph(int g, int n, std::vector<Vertex> vertices,
                 std::vector<std::pair<int, int>> edges) {
  Graph gr{g, n, std::move(vertices), std::move(edges)};
  gr.normalize_edges();
  gr.check_invariants();
  return gr;
}

bool is_connected(const Graph& gr) {
  int v = gr.num_vertices();
  if (v == 0) return false;
  if (v > 31) {
    // Fallback for oversized graphs; not hit by the supported workloads.
    std::vector<char> seen(v, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    auto adj = adjacency(gr);
    int reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int u : adj[x])
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
    }
    return reached == v;
  }
  return connected_within(gr, full_mask(v));
}

int total_genus(const Graph& gr) {
  if (!is_connected(gr)) fail(Err::Disconnected, "total_genus needs a connected graph");
  int sum = 0;
  for (const auto& v : gr.vertices) sum += v.genus;
  return gr.num_edges() - gr.num_vertices() + 1 + sum;
}

bool is_stable(const Graph& gr) {
  for (int v = 0; v < gr.num_vertices(); ++v)
    if (2 * gr.vertices[v].genus - 2 + gr.valence(v) + gr.num_markings(v) <= 0)
      return false;
  return true;
}

SubsetStats subset_stats(const Graph& gr, VSet w) {
  if (w == 0) fail(Err::EmptySubset, "subset_stats of empty subset");
  VSet all = full_mask(gr.num_vertices());
  if (w & ~all) fail(Err::UnknownEdge, "subset contains unknown vertices");
  if (!connected_within(gr, w))
    fail(Err::DisconnectedInducedSubgraph, "induced subgraph is disconnected");
  SubsetStats st;
  int inner_edges = 0;
  for (auto [a, b] : gr.edges) {
    bool ina = w & (VSet{1} << a), inb = w & (VSet{1} << b);
    if (ina && inb)
      ++inner_edges;
    else if (ina || inb)
      ++st.val;
  }
  int vcount = __builtin_popcount(w);
  int gsum = 0;
  for (int v = 0; v < gr.num_vertices(); ++v)
    if (w & (VSet{1} << v)) {
      gsum += gr.vertices[v].genus;
      st.markings |= gr.vertices[v].markings;
    }
  st.genus = inner_edges - vcount + 1 + gsum;
  return st;
}

bool is_biconnected_subset(const Graph& gr, VSet w) {
  VSet all = full_mask(gr.num_vertices());
  VSet c = all & ~w;
  if (w == 0 || c == 0) return false;
  return connected_within(gr, w) && connected_within(gr, c);
}

std::vector<VSet> biconnected_subsets(const Graph& gr) {
  int v = gr.num_vertices();
  if (v > kMaxVerticesSubsets) fail(Err::TooLarge, "too many vertices for subset sweep");
  std::vector<VSet> out;
  VSet all = full_mask(v);
  for (VSet w = 1; w < all; ++w)
    if (is_biconnected_subset(gr, w)) out.push_back(w);
  return out;
}

Contraction contract(const Graph& gr, const std::vector<int>& edge_indices) {
  std::vector<char> chosen(gr.num_edges(), 0);
  for (int idx : edge_indices) {
    if (idx < 0 || idx >= gr.num_edges()) fail(Err::UnknownEdge, "edge index out of range");
    chosen[idx] = 1;
  }
  int v = gr.num_vertices();
  std::vector<int> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < gr.num_edges(); ++i)
    if (chosen[i]) {
      int ra = find(gr.edges[i].first), rb = find(gr.edges[i].second);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }

  // Components keep the order of their smallest original vertex.
  std::vector<int> comp(v, -1);
  int ncomp = 0;
  for (int i = 0; i < v; ++i)
    if (find(i) == i) comp[i] = ncomp++;
  std::vector<int> vmap(v);
  for (int i = 0; i < v; ++i) vmap[i] = comp[find(i)];

  Contraction res;
  res.source = gr;
  res.vertex_map = vmap;
  Graph t;
  t.g = gr.g;
  t.n = gr.n;
  t.vertices.assign(ncomp, Vertex{});
  std::vector<int> comp_vertices(ncomp, 0), comp_edges(ncomp, 0);
  for (int i = 0; i < v; ++i) {
    t.vertices[vmap[i]].genus += gr.vertices[i].genus;
    t.vertices[vmap[i]].markings |= gr.vertices[i].markings;
    ++comp_vertices[vmap[i]];
  }
  for (int i = 0; i < gr.num_edges(); ++i) {
    auto [a, b] = gr.edges[i];
    if (chosen[i]) {
      res.contracted_edges.push_back(gr.edges[i]);
      ++comp_edges[vmap[a]];
    } else {
      t.edges.emplace_back(vmap[a], vmap[b]);
    }
  }
  // Independent cycles among the contracted edges become vertex genus.
  for (int c = 0; c < ncomp; ++c)
    t.vertices[c].genus += comp_edges[c] - (comp_vertices[c] - 1);
  t.normalize_edges();
  t.check_invariants();
  res.target = std::move(t);
  return res;
}

namespace {

// Iterated neighbour-colour refinement. Colours are indices into a sorted key
// sequence, so the final cell order is deterministic and invariant under
// vertex relabeling.
std::vector<int> refined_colors(const Graph& gr) {
  int v = gr.num_vertices();
  std::vector<std::vector<long>> keys(v);
  for (int i = 0; i < v; ++i) {
    int loops = 0;
    for (auto [a, b] : gr.edges)
      if (a == i && b == i) ++loops;
    keys[i] = {gr.vertices[i].genus, static_cast<long>(gr.vertices[i].markings),
               gr.valence(i), loops};
  }
  auto index_colors = [&](const std::vector<std::vector<long>>& ks) {
    std::vector<std::vector<long>> sorted(ks.begin(), ks.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> col(ks.size());
    for (size_t i = 0; i < ks.size(); ++i)
      col[i] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), ks[i]) - sorted.begin());
    return col;
  };
  std::vector<int> colors = index_colors(keys);
  for (int round = 0; round < v; ++round) {
    std::vector<std::vector<long>> next(v);
    for (int i = 0; i < v; ++i) {
      std::vector<long> nb;
      for (auto [a, b] : gr.edges) {
        if (a == b) continue;
        if (a == i) nb.push_back(colors[b]);
        if (b == i) nb.push_back(colors[a]);
      }
      std::sort(nb.begin(), nb.end());
      next[i] = {colors[i]};
      next[i].insert(next[i].end(), nb.begin(), nb.end());
    }
    std::vector<int> nc = index_colors(next);
    if (nc == colors) break;
    colors = nc;
  }
  return colors;
}

std::vector<long> signature_for_order(const Graph& gr, const std::vector<int>& pos) {
  std::vector<long> sig{gr.g, gr.n, gr.num_vertices(), gr.num_edges()};
  std::vector<int> inv(gr.num_vertices());
  for (int v = 0; v < gr.num_vertices(); ++v) inv[pos[v]] = v;
  for (int p = 0; p < gr.num_vertices(); ++p) {
    sig.push_back(gr.vertices[inv[p]].genus);
    sig.push_back(static_cast<long>(gr.vertices[inv[p]].markings));
  }
  std::vector<std::pair<int, int>> es;
  es.reserve(gr.edges.size());
  for (auto [a, b] : gr.edges) {
    int pa = pos[a], pb = pos[b];
    es.emplace_back(std::min(pa, pb), std::max(pa, pb));
  }
  std::sort(es.begin(), es.end());
  for (auto [a, b] : es) {
    sig.push_back(a);
    sig.push_back(b);
  }
  return sig;
}

struct CanonicalResult {
  std::vector<long> signature;
  std::vector<int> order;
};

CanonicalResult canonical_search(const Graph& gr) {
  int v = gr.num_vertices();
  if (v > kMaxVerticesCanonical) fail(Err::TooLarge, "too many vertices to canonicalize");
  std::vector<int> colors = refined_colors(gr);
  std::vector<std::vector<int>> cells;
  {
    std::map<int, std::vector<int>> by_color;
    for (int i = 0; i < v; ++i) by_color[colors[i]].push_back(i);
    for (auto& [c, vs] : by_color) cells.push_back(vs);
  }
  CanonicalResult best;
  std::vector<int> pos(v, -1);
  long explored = 0;
  constexpr long kLimit = 4000000;
  // Enumerate all cell-respecting orderings; refinement already guarantees any
  // isomorphism maps cells to cells.
  auto rec = [&](auto&& self, size_t cell_idx, int next_pos) -> void {
    if (cell_idx == cells.size()) {
      if (++explored > kLimit) fail(Err::TooLarge, "canonical search exceeded budget");
      auto sig = signature_for_order(gr, pos);
      if (best.signature.empty() || sig < best.signature) {
        best.signature = sig;
        best.order = pos;
      }
      return;
    }
    std::vector<int> cell = cells[cell_idx];
    std::sort(cell.begin(), cell.end());
    do {
      for (size_t k = 0; k < cell.size(); ++k) pos[cell[k]] = next_pos + static_cast<int>(k);
      self(self, cell_idx + 1, next_pos + static_cast<int>(cell.size()));
    } while (std::next_permutation(cell.begin(), cell.end()));
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace

std::string canonical_form(const Graph& gr) {
  auto res = canonical_search(gr);
  std::ostringstream os;
  for (size_t i = 0; i < res.signature.size(); ++i) {
    if (i) os << ',';
    os << res.signature[i];
  }
  return os.str();
}

std::vector<int> canonical_order(const Graph& gr) { return canonical_search(gr).order; }

std::optional<std::vector<int>> is_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.num_vertices() > kMaxVerticesCanonical || g2.num_vertices() > kMaxVerticesCanonical)
    fail(Err::TooLarge, "too many vertices for isomorphism search");
  if (g1.g != g2.g || g1.n != g2.n || g1.num_vertices() != g2.num_vertices() ||
      g1.num_edges() != g2.num_edges())
    return std::nullopt;
  auto r1 = canonical_search(g1);
  auto r2 = canonical_search(g2);
  if (r1.signature != r2.signature) return std::nullopt;
  std::vector<int> inv2(g2.num_vertices());
  for (int v = 0; v < g2.num_vertices(); ++v) inv2[r2.order[v]] = v;
  std::vector<int> bij(g1.num_vertices());
  for (int v = 0; v < g1.num_vertices(); ++v) bij[v] = inv2[r1.order[v]];
  // Sanity re-check of the produced bijection.
  for (int v = 0; v < g1.num_vertices(); ++v) {
    if (g1.vertices[v].genus != g2.vertices[bij[v]].genus) return std::nullopt;
    if (g1.vertices[v].markings != g2.vertices[bij[v]].markings) return std::nullopt;
  }
  std::multiset<std::pair<int, int>> e1, e2;
  for (auto [a, b] : g1.edges) {
    int x = bij[a], y = bij[b];
    e1.insert({std::min(x, y), std::max(x, y)});
  }
  for (auto [a, b] : g2.edges) e2.insert({std::min(a, b), std::max(a, b)});
  if (e1 != e2) return std::nullopt;
  return bij;
}

Graph vine_graph(int e, int h, MSet marks, int g, int n, int min_valence) {
  if (2 * g - 2 + n <= 0) fail(Err::NotHyperbolic, "(g,n) is not hyperbolic");
  MSet all = full_mask(n);
  if (marks & ~all) fail(Err::NotInDomain, "markings outside {1..n}");
  bool in_domain = e >= min_valence && e <= g + 1 && h >= 0 && h <= g + 1 - e;
  if (e == 2 && h == 0 && marks == 0) in_domain = false;
  if (e == 2 && h == g - 1 && marks == all) in_domain = false;
  if (!in_domain) fail(Err::NotInDomain, "triple outside the stability domain");
  int h2 = g + 1 - e - h;
  MSet marks2 = all & ~marks;
  auto unstable = [&](int genus, MSet m) {
    return 2 * genus - 2 + e + __builtin_popcount(m) <= 0;
  };
  if (unstable(h, marks) || unstable(h2, marks2))
    fail(Err::UnstableVertex, "vine vertex violates stability");
  Graph gr;
  gr.g = g;
  gr.n = n;
  gr.vertices = {Vertex{h, marks}, Vertex{h2, marks2}};
  for (int i = 0; i < e; ++i) gr.edges.emplace_back(0, 1);
  gr.check_invariants();
  return gr;
}

namespace {

// All marking-set partitions of {1..n} with parts of size <= max_part,
// described as per-part masks (restricted growth order).
void marking_partitions(int n, int max_part, std::vector<std::vector<MSet>>& out) {
  std::vector<MSet> parts;
  auto rec = [&](auto&& self, int next_mark) -> void {
    if (next_mark == n) {
      out.push_back(parts);
      return;
    }
    MSet bit = MSet{1} << next_mark;
    for (auto& p : parts) {
      if (__builtin_popcount(p) < max_part) {
        p |= bit;
        self(self, next_mark + 1);
        p &= ~bit;
      }
    }
    parts.push_back(bit);
    self(self, next_mark + 1);
    parts.pop_back();
  };
  rec(rec, 0);
}

// Edge multisets matching the residual degree targets exactly, generated in
// nondecreasing lexicographic order so each multiset appears once.
void edge_multisets(std::vector<int>& residual, int min_u, int min_w,
                    std::vector<std::pair<int, int>>& edges,
                    const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
  int v = static_cast<int>(residual.size());
  int u = -1;
  for (int i = min_u; i < v; ++i)
    if (residual[i] > 0) {
      u = i;
      break;
    }
  if (u == -1) {
    emit(edges);
    return;
  }
  if (u > min_u) min_w = u;
  for (int w = std::max(min_w, u); w < v; ++w) {
    if (w == u) {
      if (residual[u] < 2) continue;
      residual[u] -= 2;
      edges.emplace_back(u, u);
      edge_multisets(residual, u, w, edges, emit);
      edges.pop_back();
      residual[u] += 2;
    } else {
      if (residual[w] < 1 || residual[u] < 1) continue;
      --residual[u];
      --residual[w];
      edges.emplace_back(u, w);
      edge_multisets(residual, u, w, edges, emit);
      edges.pop_back();
      ++residual[u];
      ++residual[w];
    }
  }
}

}  // namespace

std::vector<Graph> enumerate_stable_graphs(int g, int n, bool trivalent_only) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0)
    fail(Err::NotHyperbolic, "(g,n) is not hyperbolic");
  int v = 2 * g - 2 + n;
  if (v > kMaxVerticesEnumerate) fail(Err::TooLarge, "trivalent vertex count exceeds bound");

  std::map<std::string, Graph> found;
  std::vector<std::vector<MSet>> partitions;
  if (n == 0)
    partitions.push_back({});
  else
    marking_partitions(n, 3, partitions);

  for (const auto& parts : partitions) {
    if (static_cast<int>(parts.size()) > v) continue;
    std::vector<Vertex> verts(v);
    std::vector<int> target(v, 3);
    bool ok = true;
    for (size_t i = 0; i < parts.size(); ++i) {
      verts[i].markings = parts[i];
      target[i] = 3 - __builtin_popcount(parts[i]);
      if (target[i] == 0 && v > 1) ok = false;
    }
    if (!ok) continue;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> residual = target;
    edge_multisets(residual, 0, 0, edges,
                   [&](const std::vector<std::pair<int, int>>& es) {
                     Graph cand{g, n, verts, es};
                     cand.normalize_edges();
                     if (!is_connected(cand)) return;
                     std::string key = canonical_form(cand);
                     found.emplace(std::move(key), std::move(cand));
                   });
  }

  if (!trivalent_only) {
    // Close under single-edge contractions.
    std::vector<Graph> work;
    for (auto& [k, gr] : found) work.push_back(gr);
    while (!work.empty()) {
      Graph cur = std::move(work.back());
      work.pop_back();
      std::set<std::pair<int, int>> seen_edges;
      for (int i = 0; i < cur.num_edges(); ++i) {
        if (!seen_edges.insert(cur.edges[i]).second) continue;
        Graph next = contract(cur, {i}).target;
        std::string key = canonical_form(next);
        if (found.emplace(key, next).second) work.push_back(std::move(next));
      }
    }
  }

  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [k, gr] : found) out.push_back(std::move(gr));
  return out;
}

}  // namespace finejac
