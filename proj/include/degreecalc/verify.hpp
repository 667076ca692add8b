#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degreecalc/engine.hpp"
#include "degreecalc/intset.hpp"
#include "degreecalc/realiser.hpp"

namespace degreecalc {

// Brute-force oracles. They enumerate straight from the set definitions and
// never go through the engine or the set algebra's sums and products.

struct OracleConfig {
  /// Maximum number of tuples / subsets / elements an oracle may enumerate.
  std::uint64_t enum_cap = 10'000'000;

  /// Default config, with enum_cap overridden by DEGREECALC_ENUM_CAP if set.
  static OracleConfig from_env();
};

/// {sum m_i d_i | -nprime_i <= m_i <= n_i}; OpenMP-parallel over tuples.
/// Throws EnumerationTooLarge when prod(n_i + nprime_i + 1) exceeds the cap.
DegreeSet brute_sumset(std::span<const std::int64_t> d, std::span<const std::int64_t> n,
                       std::span<const std::int64_t> nprime, const OracleConfig& cfg = {});
/// Single-threaded reference for brute_sumset.
DegreeSet brute_sumset_serial(std::span<const std::int64_t> d, std::span<const std::int64_t> n,
                              std::span<const std::int64_t> nprime,
                              const OracleConfig& cfg = {});

/// {0, 1} with every non-empty subset product; OpenMP-parallel over subsets.
/// Lists longer than 25 are rejected with EnumerationTooLarge.
DegreeSet brute_subset_products(std::span<const std::int64_t> d, const OracleConfig& cfg = {});
DegreeSet brute_subset_products_serial(std::span<const std::int64_t> d,
                                       const OracleConfig& cfg = {});

/// All subset sums (the empty subset gives 0).
DegreeSet brute_subset_sums(std::span<const std::int64_t> values, const OracleConfig& cfg = {});

/// Literal union of the integer intervals.
DegreeSet brute_interval_union(std::span<const std::pair<std::int64_t, std::int64_t>> bounds,
                               const OracleConfig& cfg = {});

/// The oracle matching the spec's family.
DegreeSet oracle_for(const RealisationSpec& spec, const OracleConfig& cfg = {});

struct Mismatch {
  std::string check;
  std::string detail;
};

struct Report {
  bool ok = false;
  std::optional<SetBound> engine_set;
  std::optional<DegreeSet> oracle_set;
  std::vector<Mismatch> mismatches;
};

/// Re-derives the certificate: engine set, oracle set, derivation
/// preconditions, construction parameters and prime hygiene.
Report check_certificate(const Certificate& cert, const OracleConfig& cfg = {});

/// Human-readable summary, one line per check.
std::string report_text(const Report& r);

}  // namespace degreecalc
