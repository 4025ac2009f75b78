#pragma once

#include <optional>
#include <vector>

#include "finejac/classical.hpp"

namespace finejac {

// Element of the universal relative degree-0 line bundle group, written on
// its generators: twists[j-2] is the exponent of the bundle moving weight
// from marking j to marking 1, omega is the exponent of the canonical-type
// generator. The group law is componentwise addition.
struct PicRelElement {
  std::vector<long> twists;  // indexed by j = 2..n
  long omega = 0;

  static PicRelElement identity(int n) { return PicRelElement{std::vector<long>(n - 1, 0), 0}; }
  PicRelElement operator+(const PicRelElement& o) const;
  PicRelElement operator-() const;
  friend bool operator==(const PicRelElement&, const PicRelElement&) = default;
};

// Shift applied to the value at t when acting by L.
long action_shift(const PicRelElement& L, const Triple& t, const DomainConfig& cfg);

UniversalStability act(const PicRelElement& L, const UniversalStability& m);

// Orbit representative with m(2,0,{1}) in {0..2g-3} and m(2,0,{i}) = 0 for
// i != 1, together with the element realizing it.
std::pair<UniversalStability, PicRelElement> normal_form(const UniversalStability& m);

std::optional<PicRelElement> are_translation_equivalent(const UniversalStability& m1,
                                                        const UniversalStability& m2);

struct CensusEntry {
  UniversalStability condition;  // in normal form (when n >= 1)
  std::optional<ClassicalityVerdict> universal;
  std::optional<FibreReport> fibres;
};

struct CensusReport {
  DomainConfig cfg;
  std::vector<CensusEntry> entries;
};

// All degree-d conditions in normal form, found by interval propagation over
// the window constraints plus depth-first search, each leaf fully validated.
CensusReport enumerate_census(const DomainConfig& cfg);

// Fills the classicality verdicts of a census report.
void classify_report(CensusReport& report, bool with_fibres);

}  // namespace finejac
