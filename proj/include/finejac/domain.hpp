#pragma once

#include <compare>
#include <map>
#include <vector>

#include "finejac/graph.hpp"

namespace finejac {

// A stability-domain element (e,h,A): the address of a vine-curve component
// with e joining edges, component genus h and marking set A.
struct Triple {
  int e = 0;
  int h = 0;
  MSet marks = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct DomainConfig {
  int g = 0;
  int n = 0;
  long d = 0;
  int min_valence = 2;

  void check() const {
    if (2 * g - 2 + n <= 0) fail(Err::NotHyperbolic, "(g,n) is not hyperbolic");
    if (min_valence != 1 && min_valence != 2)
      fail(Err::ParseError, "min_valence must be 1 or 2");
  }
  friend bool operator==(const DomainConfig&, const DomainConfig&) = default;
};

bool in_domain(const Triple& t, const DomainConfig& cfg);

// All triples with min_valence <= e <= g+1, 0 <= h <= g+1-e, A within {1..n},
// minus the two excluded ones. Sorted by (e, h, A-bitmask).
std::vector<Triple> universal_domain(const DomainConfig& cfg);

// (e, g+1-e-h, complement of A); an involution on the domain.
Triple complement(const Triple& t, const DomainConfig& cfg);

// The lexicographically smaller of t and complement(t) under (e, h, A-bitmask).
Triple canonical_rep(const Triple& t, const DomainConfig& cfg);

// Whether (t1,t2) splits t: disjoint markings, the genus/valence balance
// 2(h+1-(h1+h2)) = e1+e2-e, and a nondegenerate triangle with sides e,e1,e2.
bool is_compatible_decomposition(const Triple& t, const Triple& t1, const Triple& t2,
                                 const DomainConfig& cfg);

// All unordered pairs (t1,t2) splitting t, each marking partition once.
std::vector<std::pair<Triple, Triple>> decompositions(const Triple& t,
                                                      const DomainConfig& cfg);

// The triples realized by biconnected subsets of the graph, each with its
// nonempty list of realizing subsets (sorted). Valence-1 triples appear when
// the graph has separating edges.
std::map<Triple, std::vector<VSet>> graph_domain(const Graph& gr);

// Deterministic realizing-subset choice: lexicographically least as a sorted
// vertex-index sequence.
VSet pick_realizing_subset(const Graph& gr, const Triple& t);

Triple alpha(const Graph& gr, VSet w);

}  // namespace finejac
