#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "finejac/error.hpp"
#include "finejac/rational.hpp"

namespace finejac {

using VarId = std::string;

struct LinearForm {
  std::map<VarId, Rat> coeffs;  // zero coefficients are never stored
  Rat constant = 0;

  void add_term(const VarId& v, const Rat& c);
  LinearForm& operator+=(const LinearForm& other);
  LinearForm& operator*=(const Rat& s);
  Rat evaluate(const std::map<VarId, Rat>& assignment) const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

enum class Rel { LT, LE, EQ };  // form < 0, form <= 0, form = 0

struct Constraint {
  LinearForm form;
  Rel rel = Rel::LE;
};

struct LinearSystem {
  std::vector<Constraint> rows;
  std::string describe() const;
};

struct Witness {
  std::map<VarId, Rat> assignment;
};

// Nonnegative multipliers on inequality rows (any sign on equality rows)
// whose combination has no variables left and a constant contradicting the
// combined relation.
struct Certificate {
  std::vector<std::pair<int, Rat>> combination;  // (row index, multiplier)
};

struct Outcome {
  std::optional<Witness> witness;
  std::optional<Certificate> certificate;
  bool feasible() const { return witness.has_value(); }
};

// One projection step: eliminates `var`, keeping satisfied constant rows out
// of the result and violated ones in.
LinearSystem eliminate(const LinearSystem& system, const VarId& var);

// Full decision: witness with back-substituted interval midpoints, or a
// certificate rebuilt from elimination provenance. Both are re-verified
// before being returned.
Outcome solve(const LinearSystem& system);

// Solver-free re-check by substitution (witness) or row combination
// (certificate).
bool verify(const Outcome& outcome, const LinearSystem& system);

}  // namespace finejac
