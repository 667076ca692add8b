#include "degreecalc/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "degreecalc/checked.hpp"
#include "degreecalc/dsl.hpp"

namespace degreecalc {

OracleConfig OracleConfig::from_env() {
  OracleConfig cfg;
  if (const char* v = std::getenv("DEGREECALC_ENUM_CAP"); v && *v) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && cap > 0) cfg.enum_cap = cap;
  }
  return cfg;
}

namespace {

constexpr std::size_t kMaxSubsetLength = 25;
constexpr std::size_t kCompactAt = std::size_t{1} << 16;

void compact(std::vector<std::int64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct TupleSpace {
  std::vector<std::int64_t> lo, radix;
  std::uint64_t total = 1;
};

// Validates the sumset oracle inputs and pre-checks that no partial sum can
// overflow, so the enumeration loops run unchecked.
TupleSpace tuple_space(std::span<const std::int64_t> d, std::span<const std::int64_t> n,
                       std::span<const std::int64_t> nprime, const OracleConfig& cfg) {
  if (d.size() != n.size() || d.size() != nprime.size())
    throw InvalidSpec("brute_sumset needs lists of equal length");
  TupleSpace t;
  [[maybe_unused]] std::int64_t reach = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (n[i] < 0 || nprime[i] < 0) throw InvalidSpec("brute_sumset needs n_i, n'_i >= 0");
    const std::int64_t width = checked_add(checked_add(n[i], nprime[i]), 1);
    t.lo.push_back(checked_neg(nprime[i]));
    t.radix.push_back(width);
    const auto w = static_cast<std::uint64_t>(width);
    if (t.total > cfg.enum_cap / w)
      throw EnumerationTooLarge("sumset enumeration exceeds cap of " +
                                std::to_string(cfg.enum_cap) + " tuples");
    t.total *= w;
    const std::int64_t mag = d[i] < 0 ? checked_neg(d[i]) : d[i];
    reach = checked_add(reach, checked_mul(mag, std::max(n[i], nprime[i])));
  }
  return t;
}

std::int64_t tuple_sum(const TupleSpace& t, std::span<const std::int64_t> d, std::uint64_t idx) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto r = static_cast<std::uint64_t>(t.radix[i]);
    s += (t.lo[i] + static_cast<std::int64_t>(idx % r)) * d[i];
    idx /= r;
  }
  return s;
}

void check_subset_input(std::span<const std::int64_t> d, const OracleConfig& cfg) {
  if (d.size() > kMaxSubsetLength)
    throw EnumerationTooLarge("subset enumeration over " + std::to_string(d.size()) +
                              " values exceeds the limit of " +
                              std::to_string(kMaxSubsetLength));
  if ((std::uint64_t{1} << d.size()) > cfg.enum_cap)
    throw EnumerationTooLarge("subset enumeration exceeds cap of " +
                              std::to_string(cfg.enum_cap));
}

void check_products(std::span<const std::int64_t> d) {
  std::int64_t full = 1;
  for (auto v : d) {
    if (v < 1) throw InvalidSpec("brute_subset_products needs values >= 1");
    full = checked_mul(full, v);
  }
}

std::int64_t subset_product(std::span<const std::int64_t> d, std::uint64_t mask) {
  std::int64_t p = 1;
  for (std::size_t j = 0; j < d.size(); ++j)
    if (mask >> j & 1U) p *= d[j];
  return p;
}

// Runs body(i, local) for i in [0, total) across threads and merges the
// per-thread element lists.
template <class Body>
DegreeSet parallel_collect(std::uint64_t total, Body body) {
  std::vector<std::int64_t> merged;
#pragma omp parallel
  {
    std::vector<std::int64_t> local;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
      local.push_back(body(static_cast<std::uint64_t>(i)));
      if (local.size() >= kCompactAt) compact(local);
    }
    compact(local);
#pragma omp critical
    merged.insert(merged.end(), local.begin(), local.end());
  }
  return DegreeSet::of(std::move(merged));
}

}  // namespace

DegreeSet brute_sumset(std::span<const std::int64_t> d, std::span<const std::int64_t> n,
                       std::span<const std::int64_t> nprime, const OracleConfig& cfg) {
  const TupleSpace t = tuple_space(d, n, nprime, cfg);
  return parallel_collect(t.total, [&](std::uint64_t i) { return tuple_sum(t, d, i); });
}

DegreeSet brute_sumset_serial(std::span<const std::int64_t> d, std::span<const std::int64_t> n,
                              std::span<const std::int64_t> nprime, const OracleConfig& cfg) {
  const TupleSpace t = tuple_space(d, n, nprime, cfg);
  // Odometer over (m_1, ..., m_k).
  std::vector<std::int64_t> m = t.lo;
  std::vector<std::int64_t> out;
  for (;;) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < d.size(); ++i) s += m[i] * d[i];
    out.push_back(s);
    if (out.size() >= kCompactAt) compact(out);
    std::size_t i = 0;
    for (; i < m.size(); ++i) {
      if (m[i] < n[i]) {
        ++m[i];
        break;
      }
      m[i] = t.lo[i];
    }
    if (i == m.size()) break;
  }
  return DegreeSet::of(std::move(out));
}

DegreeSet brute_subset_products(std::span<const std::int64_t> d, const OracleConfig& cfg) {
  check_subset_input(d, cfg);
  check_products(d);
  const std::uint64_t total = std::uint64_t{1} << d.size();
  DegreeSet s = parallel_collect(total, [&](std::uint64_t mask) { return subset_product(d, mask); });
  std::vector<std::int64_t> all(s.elements().begin(), s.elements().end());
  all.push_back(0);
  all.push_back(1);
  return DegreeSet::of(std::move(all));
}

DegreeSet brute_subset_products_serial(std::span<const std::int64_t> d, const OracleConfig& cfg) {
  check_subset_input(d, cfg);
  check_products(d);
  std::vector<std::int64_t> out{0, 1};
  const std::uint64_t total = std::uint64_t{1} << d.size();
  for (std::uint64_t mask = 1; mask < total; ++mask) out.push_back(subset_product(d, mask));
  return DegreeSet::of(std::move(out));
}

DegreeSet brute_subset_sums(std::span<const std::int64_t> values, const OracleConfig& cfg) {
  check_subset_input(values, cfg);
  [[maybe_unused]] std::int64_t reach = 0;
  for (auto v : values) reach = checked_add(reach, v < 0 ? checked_neg(v) : v);
  const std::uint64_t total = std::uint64_t{1} << values.size();
  return parallel_collect(total, [&](std::uint64_t mask) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < values.size(); ++j)
      if (mask >> j & 1U) s += values[j];
    return s;
  });
}

DegreeSet brute_interval_union(std::span<const std::pair<std::int64_t, std::int64_t>> bounds,
                               const OracleConfig& cfg) {
  std::vector<std::int64_t> out;
  std::uint64_t count = 0;
  for (const auto& [b, c] : bounds) {
    if (b > c) throw InvalidSpec("interval with b > c");
    count += static_cast<std::uint64_t>(c) - static_cast<std::uint64_t>(b) + 1;
    if (count > cfg.enum_cap)
      throw EnumerationTooLarge("interval union exceeds cap of " + std::to_string(cfg.enum_cap));
    for (std::int64_t x = b;; ++x) {
      out.push_back(x);
      if (x == c) break;
    }
  }
  return DegreeSet::of(std::move(out));
}

DegreeSet oracle_for(const RealisationSpec& spec, const OracleConfig& cfg) {
  if (const auto* s = std::get_if<SumsetFamily>(&spec)) return brute_sumset(s->d, s->n, s->nprime, cfg);
  if (const auto* s = std::get_if<ArithIntervals>(&spec)) return brute_interval_union(s->bounds, cfg);
  if (const auto* s = std::get_if<SubsetSums>(&spec)) return brute_subset_sums(s->values, cfg);
  return brute_subset_products(std::get<Geometric>(spec).values, cfg);
}

namespace {

class Checker {
 public:
  Checker(const Certificate& cert, const OracleConfig& cfg) : cert_(cert), cfg_(cfg) {}

  Report run() {
    check_shape();
    check_engine();
    check_oracle();
    check_construction();
    check_derivation();
    report_.ok = report_.mismatches.empty();
    return std::move(report_);
  }

 private:
  void fail(std::string check, std::string detail) {
    report_.mismatches.push_back({std::move(check), std::move(detail)});
  }

  void check_shape() {
    if (!cert_.target.is_finite() || !cert_.target.contains(0))
      fail("target", "target must be a finite set containing 0, got " + cert_.target.to_string());
    try {
      if (dimension(cert_.M) != dimension(cert_.N)) fail("target", "M and N differ in dimension");
    } catch (const Error& e) {
      fail("target", e.what());
    }
  }

  void check_engine() {
    try {
      SetBound b = degree_bounds(cert_.M, cert_.N);
      if (!b.exact()) {
        fail("engine", "engine does not decide D(M,N): lower " + b.lower.to_string() + ", upper " +
                           (b.upper ? b.upper->to_string() : std::string("unknown")));
      } else if (b.lower != cert_.target) {
        fail("engine", "engine computes " + b.lower.to_string() + ", certificate claims " +
                           cert_.target.to_string());
      }
      report_.engine_set = std::move(b);
    } catch (const Error& e) {
      fail("engine", e.what());
    }
  }

  void check_oracle() {
    try {
      DegreeSet o = oracle_for(cert_.spec, cfg_);
      if (o != cert_.target)
        fail("oracle", "oracle computes " + o.to_string() + ", certificate claims " +
                           cert_.target.to_string());
      report_.oracle_set = std::move(o);
    } catch (const Error& e) {
      fail("oracle", e.what());
    }
  }

  static std::optional<std::vector<std::int64_t>> list_param(const Params& p,
                                                              const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) return std::nullopt;
    if (const auto* v = std::get_if<std::vector<std::int64_t>>(&it->second)) return *v;
    return std::nullopt;
  }

  void check_prime_hygiene(std::span<const std::int64_t> d, std::span<const std::int64_t> q) {
    if (q.size() != d.size()) {
      fail("prime_hygiene", "expected one prime per value");
      return;
    }
    const std::int64_t dmax = *std::max_element(d.begin(), d.end());
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (!is_prime(q[i])) fail("prime_hygiene", std::to_string(q[i]) + " is not prime");
      if (i + 1 < q.size() && q[i] >= q[i + 1])
        fail("prime_hygiene", "primes are not strictly ascending");
    }
    if (q.front() <= dmax)
      fail("prime_hygiene", "q_1 = " + std::to_string(q.front()) + " does not exceed d_l = " +
                                std::to_string(dmax));
  }

  void check_construction() {
    try {
      validate(cert_.spec);
    } catch (const Error& e) {
      fail("spec", e.what());
      return;
    }
    try {
      Construction expected = [&] {
        if (const auto* g = std::get_if<Geometric>(&cert_.spec)) {
          auto q = list_param(cert_.params, "q");
          if (!q) throw MalformedCertificate("geometric certificate lacks the prime list q");
          check_prime_hygiene(g->values, *q);
          return geometric_construction(g->values, *q);
        }
        return build_construction(cert_.spec);
      }();
      if (!(normalize(expected.M) == normalize(cert_.M)))
        fail("construction", "M is " + print_expr(cert_.M) + ", parameters give " +
                                 print_expr(expected.M));
      if (!(normalize(expected.N) == normalize(cert_.N)))
        fail("construction", "N is " + print_expr(cert_.N) + ", parameters give " +
                                 print_expr(expected.N));
      if (expected.params != cert_.params)
        fail("construction", "parameters do not match the spec");
    } catch (const Error& e) {
      fail("construction", e.what());
    }
  }

  // Re-validates the arithmetic preconditions of each derivation step.
  void check_step(const RuleApplication& r) {
    if (r.inputs.size() < 2) {
      fail("derivation", r.rule_id + " step without source and target");
      return;
    }
    const Expr m = parse_expr(r.inputs[0]);
    const Expr n = parse_expr(r.inputs[1]);
    const std::string where = r.rule_id + " on " + r.inputs[0] + " -> " + r.inputs[1];
    if (r.rule_id == "R3" && r.role == "exact") {
      if (!m.is<CircleBundle>() || !n.is<CircleBundle>()) {
        fail("derivation", where + ": not a pair of circle bundles");
        return;
      }
      const auto& a = m.as<CircleBundle>();
      const auto& b = n.as<CircleBundle>();
      if (a.base_genus != b.base_genus || a.euler == 0) {
        fail("derivation", where + ": closed form needs one base and non-zero source Euler number");
        return;
      }
      if (a.euler == -1) {
        if (r.produced_set != DegreeSet::of({0, checked_neg(b.euler)}))
          fail("derivation", where + ": divisibility gives {0, " + std::to_string(-b.euler) + "}");
        return;
      }
      const DegreeSet want = b.euler % a.euler == 0 ? DegreeSet::of({0, b.euler / a.euler})
                                                    : DegreeSet::of({0});
      if (want != r.produced_set)
        fail("derivation", where + ": divisibility gives " + want.to_string());
    } else if (r.rule_id == "R4" && r.role == "exact") {
      if (!connecting_sphere_inessential(n))
        fail("derivation", where + ": equality needs pi_{n-1} of the target to vanish");
    } else if (r.rule_id == "R6") {
      const Expr w = r.inputs.size() >= 3 ? parse_expr(r.inputs[2]) : n;
      const bool single = r.produced_set.is_finite() && r.produced_set.size() == 1;
      const std::int64_t degree = single ? r.produced_set.elements().front() : 0;
      if (!is_sub_multiset(summands_of(w), summands_of(m))) {
        fail("derivation", where + ": witness is not a summand block of the source");
      } else if (!single || (degree == 1 ? !(w == n) : !is_covering_shape(w, n, degree))) {
        fail("derivation", where + ": witness does not cover the target with degree " +
                               r.produced_set.to_string());
      }
    } else if (r.rule_id == "R7" && r.role == "exact") {
      check_product_step(m, n, where);
    }
  }

  void check_product_step(const Expr& m, const Expr& n, const std::string& where) {
    if (!m.is<Product>() || !n.is<Product>()) {
      fail("derivation", where + ": not a pair of products");
      return;
    }
    const auto& src = m.as<Product>().factors;
    const auto& dst = n.as<Product>().factors;
    if (src.size() != dst.size()) {
      fail("derivation", where + ": factor counts differ");
      return;
    }
    for (std::size_t i = 1; i < dst.size(); ++i) {
      if (!is_product_domination_free(dst[i]))
        fail("derivation", where + ": factor " + std::to_string(i + 1) +
                               " of the target may be dominated by products");
      for (std::size_t r = 0; r < i; ++r) {
        const SetBound b = degree_bounds(src[r], dst[i]);
        if (!b.upper || *b.upper != DegreeSet::of({0}))
          fail("derivation", where + ": source factor " + std::to_string(r + 1) +
                                 " is not shown to miss target factor " + std::to_string(i + 1));
      }
    }
  }

  void check_derivation() {
    if (cert_.derivation.empty()) {
      fail("derivation", "derivation is empty");
      return;
    }
    for (const auto& r : cert_.derivation) {
      try {
        check_step(r);
      } catch (const Error& e) {
        fail("derivation", r.rule_id + ": " + e.what());
      }
    }
    if (report_.engine_set && report_.engine_set->trace != cert_.derivation)
      fail("derivation", "recorded derivation differs from the engine's derivation");
  }

  const Certificate& cert_;
  const OracleConfig& cfg_;
  Report report_;
};

}  // namespace

Report check_certificate(const Certificate& cert, const OracleConfig& cfg) {
  return Checker(cert, cfg).run();
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << (r.ok ? "OK" : "FAILED") << '\n';
  if (r.engine_set) {
    os << "engine: ";
    if (r.engine_set->exact())
      os << "exact " << r.engine_set->lower << '\n';
    else
      os << "lower " << r.engine_set->lower << ", upper "
         << (r.engine_set->upper ? r.engine_set->upper->to_string() : std::string("unknown"))
         << '\n';
  }
  if (r.oracle_set) os << "oracle: " << *r.oracle_set << '\n';
  for (const auto& m : r.mismatches) os << "mismatch [" << m.check << "]: " << m.detail << '\n';
  return os.str();
}

}  // namespace degreecalc
