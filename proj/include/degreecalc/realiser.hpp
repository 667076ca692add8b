#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "degreecalc/engine.hpp"
#include "degreecalc/intset.hpp"
#include "degreecalc/manifold.hpp"

namespace degreecalc {

/// Base genus of every circle bundle the realiser builds.
inline constexpr std::int64_t kBaseGenus = 2;

/// {sum m_i d_i | -nprime_i <= m_i <= n_i}, d_i > 0, n_i, nprime_i >= 0.
struct SumsetFamily {
  std::vector<std::int64_t> d, n, nprime;
  friend bool operator==(const SumsetFamily&, const SumsetFamily&) = default;
};

/// Union of integer intervals [b_i, c_i] of equal length with a constant
/// gap between consecutive left ends; one of them contains 0.
struct ArithIntervals {
  std::vector<std::pair<std::int64_t, std::int64_t>> bounds;
  friend bool operator==(const ArithIntervals&, const ArithIntervals&) = default;
};

/// All subset sums of the given integers.
struct SubsetSums {
  std::vector<std::int64_t> values;
  friend bool operator==(const SubsetSums&, const SubsetSums&) = default;
};

/// {0, 1} together with all non-empty subset products of 1 <= d_1 <= ... <= d_l.
struct Geometric {
  std::vector<std::int64_t> values;
  friend bool operator==(const Geometric&, const Geometric&) = default;
};

using RealisationSpec = std::variant<SumsetFamily, ArithIntervals, SubsetSums, Geometric>;

/// "sumset", "arith", "subset_sums" or "geometric".
std::string family_name(const RealisationSpec& spec);

/// Throws InvalidSpec (or ZeroNotContained) when the spec breaks its
/// family's invariants.
void validate(const RealisationSpec& spec);

using ParamValue = std::variant<bool, std::int64_t, std::vector<std::int64_t>>;
using Params = std::map<std::string, ParamValue>;

struct Certificate {
  RealisationSpec spec;
  DegreeSet target;
  Expr M;
  Expr N;
  Params params;
  std::vector<RuleApplication> derivation;
};

/// A pair (M, N) with the parameters that determine it.
struct Construction {
  Expr M;
  Expr N;
  Params params;
};

/// Deterministic construction for a valid spec (no engine call).
Construction build_construction(const RealisationSpec& spec);

/// Product of (#_{d_i} K(q_i)) # K(d_i) # K(d_i^2) against the product of
/// K(q_i) # K(d_i^2), for the given primes (not checked here).
Construction geometric_construction(std::span<const std::int64_t> d,
                                    std::span<const std::int64_t> q);

/// Target set of the spec, computed with the set algebra.
DegreeSet spec_target(const RealisationSpec& spec);

/// Parameters (n1, n1', d2, n2, n2') of the two-term sumset that yields an
/// arithmetic interval sequence, with k the 1-based index of the interval
/// holding 0.
struct ArithParameters {
  std::int64_t n1, n1_prime, d2, n2, n2_prime, k;
};
ArithParameters arith_parameters(const ArithIntervals& spec);

Certificate realise_sumset(const SumsetFamily& spec);
Certificate realise_arith_intervals(const ArithIntervals& spec);
Certificate realise_subset_sums(const SubsetSums& spec);
Certificate realise_geometric(const Geometric& spec);
Certificate realise(const RealisationSpec& spec);

bool is_prime(std::int64_t n);
/// Smallest prime strictly greater than n.
std::int64_t next_prime(std::int64_t n);

/// Smallest ascending primes q_1 < ... < q_l with q_1 > max(d) and q_1 >= 3.
std::vector<std::int64_t> choose_primes(std::span<const std::int64_t> d);

}  // namespace degreecalc
