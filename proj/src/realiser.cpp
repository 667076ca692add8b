#include "degreecalc/realiser.hpp"

#include <algorithm>
#include <numeric>

#include "degreecalc/checked.hpp"
#include "degreecalc/dsl.hpp"

namespace degreecalc {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

Expr bundle(std::int64_t euler) { return Expr::bundle(kBaseGenus, euler); }

void require(bool cond, const std::string& message) {
  if (!cond) throw InvalidSpec(message);
}

void validate_sumset(const SumsetFamily& s, bool allow_empty) {
  require(s.d.size() == s.n.size() && s.d.size() == s.nprime.size(),
          "sumset family lists d, n, n' must have equal length");
  require(allow_empty || !s.d.empty(), "sumset family needs at least one term");
  for (std::size_t i = 0; i < s.d.size(); ++i) {
    require(s.d[i] > 0, "sumset family needs d_i > 0");
    require(s.n[i] >= 0 && s.nprime[i] >= 0, "sumset family needs n_i, n'_i >= 0");
  }
}

// Sumset family to a pair of circle bundles K(d_i') -> K(d'). An empty
// family (or one with all multiplicities zero) yields D = {0}.
Construction sumset_pair(const SumsetFamily& s) {
  std::int64_t dprime = 1;
  for (auto d : s.d) dprime = checked_mul(dprime, d);
  std::vector<std::int64_t> dip;
  std::vector<Expr> summands;
  for (std::size_t i = 0; i < s.d.size(); ++i) {
    const std::int64_t di = dprime / s.d[i];
    dip.push_back(di);
    for (std::int64_t c = 0; c < s.n[i]; ++c) summands.push_back(bundle(di));
    for (std::int64_t c = 0; c < s.nprime[i]; ++c) summands.push_back(bundle(-di));
  }
  Params p;
  p["base_genus"] = kBaseGenus;
  p["d_prime"] = dprime;
  p["d_i_prime"] = dip;
  const bool degenerate = summands.empty();
  p["degenerate"] = degenerate;
  // K(d'+1) admits only the constant map to K(d') since d'+1 does not divide d'.
  Expr m = degenerate ? bundle(checked_add(dprime, 1)) : make_conn_sum(std::move(summands));
  return {std::move(m), bundle(dprime), std::move(p)};
}

SumsetFamily subset_family(const SubsetSums& s) {
  SumsetFamily f;
  for (auto v : s.values) {
    if (v == 0) continue;
    f.d.push_back(v > 0 ? v : checked_neg(v));
    f.n.push_back(v > 0 ? 1 : 0);
    f.nprime.push_back(v > 0 ? 0 : 1);
  }
  return f;
}

SumsetFamily arith_family(const ArithParameters& a) {
  return SumsetFamily{{1, a.d2}, {a.n1, a.n2}, {a.n1_prime, a.n2_prime}};
}

void add_family_params(Params& p, const SumsetFamily& f) {
  p["d"] = f.d;
  p["n"] = f.n;
  p["n_prime"] = f.nprime;
}

Certificate certify(RealisationSpec spec, Construction c) {
  DegreeSet target = spec_target(spec);
  SetBound b = degree_bounds(c.M, c.N);
  if (!b.exact() || b.lower != target)
    throw RealisationFailed("engine does not reproduce target " + target.to_string() + " for " +
                            print_expr(c.M) + " -> " + print_expr(c.N) + " (lower " +
                            b.lower.to_string() + ")");
  return Certificate{std::move(spec),    std::move(target),  normalize(c.M),
                     normalize(c.N),     std::move(c.params), std::move(b.trace)};
}

}  // namespace

std::string family_name(const RealisationSpec& spec) {
  return std::visit(overloaded{[](const SumsetFamily&) { return "sumset"; },
                               [](const ArithIntervals&) { return "arith"; },
                               [](const SubsetSums&) { return "subset_sums"; },
                               [](const Geometric&) { return "geometric"; }},
                    spec);
}

void validate(const RealisationSpec& spec) {
  std::visit(overloaded{
                 [](const SumsetFamily& s) { validate_sumset(s, false); },
                 [](const ArithIntervals& s) { arith_parameters(s); },
                 [](const SubsetSums&) {},
                 [](const Geometric& s) {
                   require(!s.values.empty(), "geometric family needs at least one value");
                   require(s.values.front() >= 1, "geometric family needs d_1 >= 1");
                   require(std::is_sorted(s.values.begin(), s.values.end()),
                           "geometric family needs d_1 <= d_2 <= ... <= d_l");
                 },
             },
             spec);
}

ArithParameters arith_parameters(const ArithIntervals& spec) {
  const auto& iv = spec.bounds;
  require(!iv.empty(), "interval sequence is empty");
  for (std::size_t i = 0; i < iv.size(); ++i) {
    require(iv[i].first <= iv[i].second, "interval with b_i > c_i");
    if (i + 1 < iv.size()) {
      require(iv[i].second < iv[i + 1].first, "intervals must satisfy c_i < b_{i+1}");
      require(iv[i + 1].second - iv[i + 1].first == iv[0].second - iv[0].first,
              "intervals must have equal lengths");
      require(iv[i + 1].first - iv[i].first == iv[1].first - iv[0].first,
              "interval left ends must have a constant difference");
    }
  }
  std::size_t k = iv.size();
  for (std::size_t i = 0; i < iv.size(); ++i)
    if (iv[i].first <= 0 && 0 <= iv[i].second) k = i;
  if (k == iv.size()) throw ZeroNotContained("no interval of the sequence contains 0");
  const auto l = static_cast<std::int64_t>(iv.size());
  const auto kk = static_cast<std::int64_t>(k) + 1;
  ArithParameters a{};
  a.n1 = iv[k].second;
  a.n1_prime = checked_neg(iv[k].first);
  if (iv.size() == 1) {
    // m_2 ranges over {0}, so any positive d_2 works.
    a.d2 = 1;
    a.n2 = 0;
    a.n2_prime = 0;
  } else {
    a.d2 = checked_sub(iv[1].first, iv[0].first);
    a.n2 = l - kk;
    a.n2_prime = kk - 1;
  }
  a.k = kk;
  return a;
}

Construction geometric_construction(std::span<const std::int64_t> d,
                                    std::span<const std::int64_t> q) {
  if (d.size() != q.size() || d.empty())
    throw InvalidSpec("geometric construction needs one prime per value");
  std::vector<Expr> qs, ps;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::int64_t dsq = checked_mul(d[i], d[i]);
    std::vector<Expr> src;
    for (std::int64_t c = 0; c < d[i]; ++c) src.push_back(bundle(q[i]));
    src.push_back(bundle(d[i]));
    src.push_back(bundle(dsq));
    qs.push_back(make_conn_sum(std::move(src)));
    ps.push_back(make_conn_sum({bundle(q[i]), bundle(dsq)}));
  }
  Params p;
  p["base_genus"] = kBaseGenus;
  p["d"] = std::vector<std::int64_t>(d.begin(), d.end());
  p["q"] = std::vector<std::int64_t>(q.begin(), q.end());
  bool prime = true, ascending = true, exceeds = true, coprime = true;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!is_prime(q[i])) prime = false;
    if (i + 1 < q.size() && q[i] >= q[i + 1]) ascending = false;
    for (auto dj : d) {
      if (q[i] <= dj) exceeds = false;
      if (std::gcd(q[i], dj) != 1) coprime = false;
    }
  }
  p["primes_are_prime"] = prime;
  p["primes_distinct_ascending"] = ascending;
  p["q1_exceeds_max_d"] = exceeds;
  p["primes_coprime_to_d"] = coprime;
  if (d.size() == 1) return {std::move(qs.front()), std::move(ps.front()), std::move(p)};
  return {normalize(Expr::product(std::move(qs))), normalize(Expr::product(std::move(ps))),
          std::move(p)};
}

Construction build_construction(const RealisationSpec& spec) {
  validate(spec);
  return std::visit(overloaded{
                        [](const SumsetFamily& s) {
                          Construction c = sumset_pair(s);
                          add_family_params(c.params, s);
                          return c;
                        },
                        [](const ArithIntervals& s) {
                          const ArithParameters a = arith_parameters(s);
                          const SumsetFamily f = arith_family(a);
                          Construction c = sumset_pair(f);
                          add_family_params(c.params, f);
                          c.params["n1"] = a.n1;
                          c.params["n1_prime"] = a.n1_prime;
                          c.params["d2"] = a.d2;
                          c.params["n2"] = a.n2;
                          c.params["n2_prime"] = a.n2_prime;
                          c.params["k_index"] = a.k;
                          return c;
                        },
                        [](const SubsetSums& s) {
                          const SumsetFamily f = subset_family(s);
                          Construction c = sumset_pair(f);
                          add_family_params(c.params, f);
                          return c;
                        },
                        [](const Geometric& s) {
                          const auto q = choose_primes(s.values);
                          return geometric_construction(s.values, q);
                        },
                    },
                    spec);
}

DegreeSet spec_target(const RealisationSpec& spec) {
  return std::visit(
      overloaded{
          [](const SumsetFamily& s) {
            DegreeSet acc = DegreeSet::of({0});
            for (std::size_t i = 0; i < s.d.size(); ++i)
              acc = sumset(acc, scaled_range(s.d[i], checked_neg(s.nprime[i]), s.n[i]));
            return acc;
          },
          [](const ArithIntervals& s) {
            DegreeSet acc;
            for (const auto& [b, c] : s.bounds) acc = set_union(acc, interval(b, c));
            return acc;
          },
          [](const SubsetSums& s) {
            DegreeSet acc = DegreeSet::of({0});
            for (auto v : s.values) acc = sumset(acc, DegreeSet::of({0, v}));
            return acc;
          },
          [](const Geometric& s) {
            DegreeSet acc = DegreeSet::of({1});
            for (auto v : s.values) acc = product_set(acc, DegreeSet::of({1, v}));
            return set_union(acc, DegreeSet::of({0}));
          },
      },
      spec);
}

Certificate realise_sumset(const SumsetFamily& spec) { return realise(RealisationSpec{spec}); }
Certificate realise_arith_intervals(const ArithIntervals& spec) {
  return realise(RealisationSpec{spec});
}
Certificate realise_subset_sums(const SubsetSums& spec) { return realise(RealisationSpec{spec}); }
Certificate realise_geometric(const Geometric& spec) { return realise(RealisationSpec{spec}); }

Certificate realise(const RealisationSpec& spec) {
  Construction c = build_construction(spec);
  return certify(spec, std::move(c));
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t f = 3; f <= n / f; f += 2)
    if (n % f == 0) return false;
  return true;
}

std::int64_t next_prime(std::int64_t n) {
  std::int64_t c = n < 1 ? 2 : checked_add(n, 1);
  while (!is_prime(c)) c = checked_add(c, 1);
  return c;
}

std::vector<std::int64_t> choose_primes(std::span<const std::int64_t> d) {
  std::vector<std::int64_t> q;
  if (d.empty()) return q;
  // q = 2 would let K(1) cover K(2), so the primes start above 2.
  std::int64_t last = std::max<std::int64_t>(*std::max_element(d.begin(), d.end()), 2);
  for (std::size_t i = 0; i < d.size(); ++i) {
    last = next_prime(last);
    q.push_back(last);
  }
  return q;
}

}  // namespace degreecalc
