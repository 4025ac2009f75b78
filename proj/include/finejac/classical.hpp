#pragma once

#include <optional>
#include <vector>

#include "finejac/feasibility.hpp"
#include "finejac/stability.hpp"

namespace finejac {

// Rational vertex divisor of total degree d on a fixed graph.
struct GraphDivisor {
  DomainConfig cfg;
  Graph graph;
  std::vector<Rat> phi;
};

GraphDivisor make_divisor(const DomainConfig& cfg, const Graph& graph, std::vector<Rat> phi);

// The n marking values of a divisor family on the maximally degenerate model;
// the common value at unlabeled vertices is (d - sum x)/(2g-2).
struct MarkingVector {
  DomainConfig cfg;
  std::vector<Rat> x;  // x[i-1] = value at the vertex carrying marking i

  Rat sum_over(MSet marks) const;
};

// No biconnected partial sum sits on a half-integer wall.
bool is_general(const GraphDivisor& div);

// Ceiling rule on any realizing subset; all realizing subsets of a triple
// must agree or the divisor is rejected.
CStability induce_on_graph(const GraphDivisor& div);

// Linear form whose ceiling (plus h-1) gives the induced value at t.
LinearForm induced_form(const Triple& t, const DomainConfig& cfg);

long induced_value(const Triple& t, const MarkingVector& x);

UniversalStability induce_universal(const MarkingVector& x);

// Strict window per canonical pair representative, in marking variables
// x1..xn. Self-paired triples (n=0) contribute constant consistency rows.
LinearSystem classicality_system_universal(const UniversalStability& m);

// Strict window per biconnected subset pair, in per-vertex variables
// phi0..phiV-1, plus the total-degree equality.
LinearSystem classicality_system_graph(const Graph& gr, const CStability& c);

struct ClassicalityVerdict {
  bool classical = false;
  std::optional<Witness> witness;
  std::optional<Certificate> certificate;
  LinearSystem system;
};

// Feasibility of the universal system; a witness is round-tripped through
// induce_universal before the verdict is returned.
ClassicalityVerdict is_universally_classical(const UniversalStability& m);

// Per-graph verdict. On 2-connected trivalent graphs this reduces to the
// marking-variable system restricted to the triples the graph realizes; on
// other graphs it solves the per-vertex system.
ClassicalityVerdict is_fibre_classical(const Graph& gr, const CStability& c);

struct FibreReport {
  std::vector<Graph> graphs;
  std::vector<ClassicalityVerdict> verdicts;
  std::vector<size_t> offending;  // indices of non-classical fibres
  bool all_classical() const { return offending.empty(); }
};

// Sweep over the maximally degenerate graphs of the type.
FibreReport everywhere_fibre_classical(const UniversalStability& m);

bool is_two_connected(const Graph& gr);
bool is_trivalent(const Graph& gr);

// phi = (x at marked vertices, common value elsewhere); only meaningful on
// trivalent graphs where each vertex carries at most one marking.
GraphDivisor divisor_from_marking_vector(const Graph& gr, const MarkingVector& x);

}  // namespace finejac
