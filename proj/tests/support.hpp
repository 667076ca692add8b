#pragma once

// Helpers shared by the unit tests and the acceptance binary: random
// expressions and tiny enumerators that only use loops over std::set.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "degreecalc/intset.hpp"
#include "degreecalc/manifold.hpp"

namespace testsupport {

using degreecalc::DegreeSet;
using degreecalc::Expr;

inline DegreeSet from_set(const std::set<std::int64_t>& s) {
  return DegreeSet::of(std::vector<std::int64_t>(s.begin(), s.end()));
}

inline DegreeSet pair_sums(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::set<std::int64_t> out;
  for (auto x : a)
    for (auto y : b) out.insert(x + y);
  return from_set(out);
}

inline DegreeSet pair_products(const std::vector<std::int64_t>& a,
                               const std::vector<std::int64_t>& b) {
  std::set<std::int64_t> out;
  for (auto x : a)
    for (auto y : b) out.insert(x * y);
  return from_set(out);
}

// {sum m_i d_i : -nprime_i <= m_i <= n_i} by recursion over coordinates.
inline void sumset_rec(const std::vector<std::int64_t>& d, const std::vector<std::int64_t>& n,
                       const std::vector<std::int64_t>& np, std::size_t i, std::int64_t acc,
                       std::set<std::int64_t>& out) {
  if (i == d.size()) {
    out.insert(acc);
    return;
  }
  for (std::int64_t m = -np[i]; m <= n[i]; ++m) sumset_rec(d, n, np, i + 1, acc + m * d[i], out);
}

inline DegreeSet family_sumset(const std::vector<std::int64_t>& d,
                               const std::vector<std::int64_t>& n,
                               const std::vector<std::int64_t>& np) {
  std::set<std::int64_t> out;
  sumset_rec(d, n, np, 0, 0, out);
  return from_set(out);
}

inline DegreeSet subset_products_with_unit(const std::vector<std::int64_t>& d) {
  std::set<std::int64_t> out{0, 1};
  std::set<std::int64_t> products{1};
  for (auto v : d) {
    std::set<std::int64_t> next = products;
    for (auto p : products) next.insert(p * v);
    products = std::move(next);
  }
  out.insert(products.begin(), products.end());
  return from_set(out);
}

inline DegreeSet random_set(std::mt19937_64& rng, std::size_t max_size = 20, std::int64_t lo = -100,
                            std::int64_t hi = 100) {
  std::uniform_int_distribution<std::size_t> size(0, max_size);
  std::uniform_int_distribution<std::int64_t> val(lo, hi);
  std::vector<std::int64_t> v(size(rng));
  for (auto& x : v) x = val(rng);
  return DegreeSet::of(std::move(v));
}

// Random well-formed expression of the given dimension (1, 2 or 3),
// not normalized: nested sums and unsorted summands are kept.
inline Expr random_expr(std::mt19937_64& rng, int dim, int depth) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  auto small = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  if (dim == 1) return Expr::circle();
  const bool leaf = depth <= 0 || pick(3) == 0;
  if (dim == 2) {
    if (leaf) return Expr::surface(small(0, 6));
    if (pick(2) == 0) return Expr::product({Expr::circle(), Expr::circle()});
    std::vector<Expr> parts;
    for (int i = 0, k = 1 + pick(3); i < k; ++i) parts.push_back(random_expr(rng, 2, depth - 1));
    return Expr::conn_sum(std::move(parts));
  }
  if (leaf) return Expr::bundle(small(2, 4), small(-30, 30));
  switch (pick(3)) {
    case 0: {
      std::vector<Expr> parts;
      for (int i = 0, k = 1 + pick(4); i < k; ++i) parts.push_back(random_expr(rng, 3, depth - 1));
      return Expr::conn_sum(std::move(parts));
    }
    case 1:
      return Expr::product({Expr::circle(), random_expr(rng, 2, depth - 1)});
    default:
      return Expr::product({random_expr(rng, 2, depth - 1), Expr::circle()});
  }
}

// Random expression of any dimension up to 9, including products of
// 3-manifolds.
inline Expr random_any_expr(std::mt19937_64& rng, int depth) {
  const int kind = std::uniform_int_distribution<int>(0, 4)(rng);
  if (kind == 4) {
    std::vector<Expr> f;
    for (int i = 0, k = 2 + static_cast<int>(rng() % 2); i < k; ++i)
      f.push_back(random_expr(rng, 1 + static_cast<int>(rng() % 3), depth - 1));
    return Expr::product(std::move(f));
  }
  return random_expr(rng, 1 + kind % 3, depth);
}

}  // namespace testsupport
