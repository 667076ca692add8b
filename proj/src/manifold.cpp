#include "degreecalc/manifold.hpp"

#include <algorithm>
#include <string>

#include "degreecalc/errors.hpp"

namespace degreecalc {

Expr Expr::circle() { return Expr(Circle{}); }

Expr Expr::surface(std::int64_t genus) {
  if (genus < 0) throw MalformedExpr("surface genus must be >= 0, got " + std::to_string(genus));
  return Expr(Surface{genus});
}

Expr Expr::bundle(std::int64_t base_genus, std::int64_t euler) {
  if (base_genus < 2)
    throw MalformedExpr("circle bundle base genus must be >= 2, got " +
                        std::to_string(base_genus));
  return Expr(CircleBundle{base_genus, euler});
}

Expr Expr::conn_sum(std::vector<Expr> summands) {
  if (summands.empty()) throw MalformedExpr("connected sum needs at least one summand");
  return Expr(ConnSum{std::move(summands)});
}

Expr Expr::product(std::vector<Expr> factors) {
  if (factors.size() < 2) throw MalformedExpr("product needs at least two factors");
  return Expr(Product{std::move(factors)});
}

namespace {

std::strong_ordering compare_lists(const std::vector<Expr>& a, const std::vector<Expr>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = compare(a[i], b[i]); c != 0) return c;
  return a.size() <=> b.size();
}

}  // namespace

std::strong_ordering compare(const Expr& a, const Expr& b) {
  if (auto c = a.node().index() <=> b.node().index(); c != 0) return c;
  return std::visit(
      [&](const auto& x) -> std::strong_ordering {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node());
        if constexpr (std::is_same_v<T, Circle>) {
          return std::strong_ordering::equal;
        } else if constexpr (std::is_same_v<T, Surface>) {
          return x.genus <=> y.genus;
        } else if constexpr (std::is_same_v<T, CircleBundle>) {
          if (auto c = x.base_genus <=> y.base_genus; c != 0) return c;
          return x.euler <=> y.euler;
        } else if constexpr (std::is_same_v<T, ConnSum>) {
          return compare_lists(x.summands, y.summands);
        } else {
          return compare_lists(x.factors, y.factors);
        }
      },
      a.node());
}

int dimension(const Expr& m) {
  return std::visit(
      [](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Circle>) {
          return 1;
        } else if constexpr (std::is_same_v<T, Surface>) {
          return 2;
        } else if constexpr (std::is_same_v<T, CircleBundle>) {
          return 3;
        } else if constexpr (std::is_same_v<T, ConnSum>) {
          const int d = dimension(x.summands.front());
          for (const auto& s : x.summands) {
            const int ds = dimension(s);
            if (ds != d)
              throw MalformedExpr("connected sum mixes dimensions " + std::to_string(d) +
                                  " and " + std::to_string(ds));
          }
          if (d < 2) throw MalformedExpr("connected sum of 1-manifolds is not defined");
          return d;
        } else {
          int total = 0;
          for (const auto& f : x.factors) total += dimension(f);
          return total;
        }
      },
      m.node());
}

namespace {

void flatten_sum(const Expr& e, std::vector<Expr>& out) {
  if (e.is<ConnSum>()) {
    for (const auto& s : e.as<ConnSum>().summands) flatten_sum(s, out);
  } else {
    out.push_back(e);
  }
}

void flatten_product(const Expr& e, std::vector<Expr>& out) {
  if (e.is<Product>()) {
    for (const auto& f : e.as<Product>().factors) flatten_product(f, out);
  } else {
    out.push_back(e);
  }
}

Expr normalize_checked(const Expr& m) {
  if (m.is<ConnSum>()) {
    std::vector<Expr> flat;
    for (const auto& s : m.as<ConnSum>().summands) flatten_sum(normalize_checked(s), flat);
    if (flat.size() == 1) return flat.front();
    std::sort(flat.begin(), flat.end(), ExprLess{});
    return Expr::conn_sum(std::move(flat));
  }
  if (m.is<Product>()) {
    std::vector<Expr> flat;
    for (const auto& f : m.as<Product>().factors) flatten_product(normalize_checked(f), flat);
    return Expr::product(std::move(flat));
  }
  return m;
}

}  // namespace

Expr normalize(const Expr& m) {
  dimension(m);
  return normalize_checked(m);
}

std::vector<Expr> summands_of(const Expr& m) {
  if (m.is<ConnSum>()) return m.as<ConnSum>().summands;
  return {m};
}

bool is_sub_multiset(const std::vector<Expr>& part, const std::vector<Expr>& whole) {
  auto a = part;
  auto b = whole;
  std::sort(a.begin(), a.end(), ExprLess{});
  std::sort(b.begin(), b.end(), ExprLess{});
  return std::includes(b.begin(), b.end(), a.begin(), a.end(), ExprLess{});
}

std::vector<Expr> multiset_difference(const std::vector<Expr>& whole,
                                      const std::vector<Expr>& part) {
  auto a = whole;
  auto b = part;
  std::sort(a.begin(), a.end(), ExprLess{});
  std::sort(b.begin(), b.end(), ExprLess{});
  std::vector<Expr> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                      ExprLess{});
  return out;
}

Expr make_conn_sum(std::vector<Expr> summands) {
  return normalize(Expr::conn_sum(std::move(summands)));
}

bool is_pi2_trivial(const Expr& n) {
  if (dimension(n) != 3) throw DimensionMismatch("is_pi2_trivial needs a 3-dimensional target");
  if (n.is<CircleBundle>()) return true;
  if (n.is<ConnSum>()) {
    const auto& parts = n.as<ConnSum>().summands;
    if (parts.size() == 1) return is_pi2_trivial(parts.front());
    return false;
  }
  throw Unsupported("pi_2 triviality is only decided for circle bundles and their connected sums");
}

bool is_product_domination_free(const Expr& n) {
  if (n.is<CircleBundle>()) return n.as<CircleBundle>().euler != 0;
  if (n.is<ConnSum>()) {
    const auto& parts = n.as<ConnSum>().summands;
    return std::any_of(parts.begin(), parts.end(), [](const Expr& s) {
      return (s.is<CircleBundle>() || s.is<ConnSum>()) && is_product_domination_free(s);
    });
  }
  return false;
}

}  // namespace degreecalc
