#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degreecalc/errors.hpp"
#include "degreecalc/intset.hpp"
#include "degreecalc/manifold.hpp"

namespace degreecalc {

/// One step of a derivation. `role` is "exact", "lower", "upper" or
/// "check"; `inputs` are DSL strings, source first then target, followed by
/// any witness expression the rule used.
struct RuleApplication {
  std::string rule_id;
  std::string paper_ref;
  std::vector<std::string> inputs;
  DegreeSet produced_set;
  std::string role;
  std::string note;

  friend bool operator==(const RuleApplication&, const RuleApplication&) = default;
};

/// Bracket lower <= D(M,N) <= upper. upper is empty when no upper bound
/// follows from the rules.
struct SetBound {
  DegreeSet lower;
  std::optional<DegreeSet> upper;
  std::vector<RuleApplication> trace;
  std::vector<std::string> warnings;

  bool exact() const { return upper.has_value() && *upper == lower; }

  friend bool operator==(const SetBound&, const SetBound&) = default;
};

/// The statement a rule relies on, keyed by rule id ("R1" ... "R7").
std::string_view rule_reference(std::string_view rule_id);

/// Sound bracket for D(m, n). Every element of lower is witnessed by a
/// construction in the trace; upper follows only from inclusion lemmas.
/// Throws DimensionMismatch if the dimensions differ.
SetBound degree_bounds(const Expr& m, const Expr& n);

class NotDecided : public Error {
 public:
  explicit NotDecided(SetBound bound);
  const SetBound& bound() const { return bound_; }

 private:
  SetBound bound_;
};

/// D(m, n) when the engine can decide it; throws NotDecided otherwise.
DegreeSet degree_set_exact(const Expr& m, const Expr& n);

/// Whether pi_{n-1}(n) vanishes, as far as the engine can tell. Conservative.
bool connecting_sphere_inessential(const Expr& n);

/// Whether c = (#_d N1) # K(g; j/d) for a decomposition n = N1 # K(g; j)
/// with d >= 1 dividing j, so that c covers n with degree d.
bool is_covering_shape(const Expr& c, const Expr& n, std::int64_t d);

}  // namespace degreecalc
