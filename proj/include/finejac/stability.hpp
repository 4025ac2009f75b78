#pragma once

#include <map>
#include <string>
#include <vector>

#include "finejac/domain.hpp"

namespace finejac {

struct Violation {
  enum class Kind { PairSum, Window, Missing } kind;
  Triple t, t1, t2;  // t1/t2 meaningful for Window only
  long residual = 0;
  std::string describe() const;
};

// Integer assignment on the universal stability domain. Stored on canonical
// representatives; complementary values are derived through the pair-sum law,
// so the law holds by construction once construction succeeds.
class UniversalStability {
 public:
  UniversalStability() = default;
  UniversalStability(DomainConfig cfg, std::map<Triple, long> canonical_values);

  const DomainConfig& cfg() const { return cfg_; }
  const std::map<Triple, long>& canonical_values() const { return values_; }

  bool has(const Triple& t) const;
  long value(const Triple& t) const;

  friend bool operator==(const UniversalStability&, const UniversalStability&) = default;

 private:
  DomainConfig cfg_;
  std::map<Triple, long> values_;
};

// Accepts values on any subset of the domain as long as every canonical
// representative is covered; redundant complements are checked against the
// pair-sum law before being dropped.
UniversalStability make_universal(const DomainConfig& cfg,
                                  const std::map<Triple, long>& entries);

// Restriction of such data to one graph: values indexed by the triples the
// graph realizes (clipped to the ambient domain when the graph has
// separating edges).
struct CStability {
  DomainConfig cfg;
  Graph graph;
  std::map<Triple, long> values;

  bool has(const Triple& t) const { return values.count(t) != 0; }
  long value(const Triple& t) const;
};

// The same data indexed by biconnected vertex subsets.
struct VStability {
  DomainConfig cfg;
  Graph graph;
  std::map<VSet, long> values;
};

std::vector<Violation> validate_universal(const UniversalStability& m);
std::vector<Violation> validate_c(const CStability& c);

long property2_residual(const UniversalStability& m, const Triple& t, const Triple& t1,
                        const Triple& t2);

CStability restrict_to_graph(const UniversalStability& m, const Graph& gr);

UniversalStability assemble_universal(const std::vector<CStability>& parts,
                                      const DomainConfig& cfg);

VStability to_vstability(const CStability& c);
CStability from_vstability(const VStability& v);
bool is_morphism_compatible(const VStability& v);

}  // namespace finejac
