#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finejac/error.hpp"

namespace finejac {

// Vertex subsets and marking sets are bitmasks: bit v for vertex index v,
// bit (i-1) for marking i.
using VSet = std::uint32_t;
using MSet = std::uint32_t;

constexpr int kMaxVerticesSubsets = 24;  // exhaustive 2^V sweeps
constexpr int kMaxVerticesCanonical = 12;
constexpr int kMaxVerticesEnumerate = 10;

struct Vertex {
  int genus = 0;
  MSet markings = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Stable marked weighted multigraph of type (g,n). Edges are an unordered
// multiset of vertex-index pairs, stored normalized (a <= b); loops as (v,v).
struct Graph {
  int g = 0;
  int n = 0;
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }

  // Edge endpoints counted with multiplicity; a loop adds 2.
  int valence(int v) const;
  int num_markings(int v) const { return __builtin_popcount(vertices[v].markings); }

  void normalize_edges();
  // Checks connectivity, the marking partition and the total-genus bookkeeping.
  void check_invariants() const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

Graph make_graph(int g, int n, std::vector<Vertex> vertices,
                 std::vector<std::pair<int, int>> edges);

struct SubsetStats {
  int val = 0;
  int genus = 0;
  MSet markings = 0;
  friend bool operator==(const SubsetStats&, const SubsetStats&) = default;
};

struct Contraction {
  Graph source;
  Graph target;
  std::vector<int> vertex_map;  // source vertex index -> target vertex index
  std::vector<std::pair<int, int>> contracted_edges;
};

bool is_connected(const Graph& gr);

// First Betti number plus the vertex genera.
int total_genus(const Graph& gr);

bool is_stable(const Graph& gr);

// (val(W), g(W), A(W)) for a nonempty W inducing a connected subgraph.
SubsetStats subset_stats(const Graph& gr, VSet w);

// W and its complement both nonempty and both inducing connected subgraphs.
bool is_biconnected_subset(const Graph& gr, VSet w);

// All biconnected vertex subsets; closed under complement.
std::vector<VSet> biconnected_subsets(const Graph& gr);

// Contract the edges with the given indices. Merged vertices add their genera;
// each independent cycle among the contracted edges (loops included) adds 1.
Contraction contract(const Graph& gr, const std::vector<int>& edge_indices);

// Canonical byte encoding: equal iff the graphs are isomorphic. Deterministic
// across runs of the same build.
std::string canonical_form(const Graph& gr);

// Vertex -> canonical position permutation realizing canonical_form.
std::vector<int> canonical_order(const Graph& gr);

// Genus-, marking- and multiplicity-preserving vertex bijection, if any.
std::optional<std::vector<int>> is_isomorphic(const Graph& g1, const Graph& g2);

// Two vertices (h, A) and (g+1-e-h, complement of A) joined by e edges.
Graph vine_graph(int e, int h, MSet marks, int g, int n, int min_valence = 2);

// One representative per isomorphism class. Trivalent graphs are the maximally
// degenerate ones (all genera 0, val(v) = 3 - n(v)); the full list is their
// closure under single-edge contractions.
std::vector<Graph> enumerate_stable_graphs(int g, int n, bool trivalent_only);

}  // namespace finejac
