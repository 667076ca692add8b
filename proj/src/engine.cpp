#include "degreecalc/engine.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "degreecalc/checked.hpp"
#include "degreecalc/dsl.hpp"

namespace degreecalc {

std::string_view rule_reference(std::string_view rule_id) {
  if (rule_id == "R1") return "the only closed 1-manifold is the circle and D(S1, S1) = Z";
  if (rule_id == "R2")
    return "surfaces: D(S(g), S(h)) = Z if h = 0, or h = 1 <= g; [-k, k] with "
           "k = floor((g-1)/(h-1)) if g >= h >= 2; {0} otherwise";
  if (rule_id == "R3")
    return "circle bundles over one hyperbolic surface: D(K_i, K_j) = {0, j/i} if i | j, "
           "else {0}; non-zero degree maps are homotopic to fiberwise coverings";
  if (rule_id == "R4")
    return "D(M1, N) + D(M2, N) is contained in D(M1 # M2, N), with equality if "
           "pi_{n-1}(N) = 0";
  if (rule_id == "R5") return "D(M, N1 # N2) is contained in D(M, N1) via the pinch map N1 # N2 -> N1";
  if (rule_id == "R6")
    return "X # M' -> M' pinches the connecting sphere with degree one; "
           "(#_d N1) # K(g; j/d) covers N1 # K(g; j) with degree d";
  if (rule_id == "R7")
    return "D(M, N) . D(W, Z) is contained in D(M x W, N x Z), with equality when N is not "
           "dominated by direct products and every map W -> N is trivial on H_n";
  return "no rule applies; only the constant map is known";
}

NotDecided::NotDecided(SetBound bound)
    : Error("degree set not decided: lower " + bound.lower.to_string() + ", upper " +
            (bound.upper ? bound.upper->to_string() : std::string("unknown"))),
      bound_(std::move(bound)) {}

bool connecting_sphere_inessential(const Expr& n) {
  const int dim = dimension(n);
  if (dim == 3) {
    try {
      return is_pi2_trivial(n);
    } catch (const Unsupported&) {
      return false;
    }
  }
  if (dim == 2) return n.is<Surface>() && n.as<Surface>().genus == 0;
  return false;
}

namespace {

std::vector<Expr> sorted(std::vector<Expr> v) {
  std::sort(v.begin(), v.end(), ExprLess{});
  return v;
}

std::vector<Expr> distinct(const std::vector<Expr>& v) {
  auto out = sorted(v);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// (#_d rest) # K(g; j/d), or nullopt if d does not divide j.
std::optional<std::vector<Expr>> covering_summands(const std::vector<Expr>& rest,
                                                   const CircleBundle& b, std::int64_t d) {
  if (d < 1 || b.euler % d != 0) return std::nullopt;
  std::vector<Expr> out;
  out.reserve(rest.size() * static_cast<std::size_t>(d) + 1);
  for (std::int64_t k = 0; k < d; ++k) out.insert(out.end(), rest.begin(), rest.end());
  out.push_back(Expr::bundle(b.base_genus, b.euler / d));
  return sorted(std::move(out));
}

struct Bracket {
  DegreeSet lower;
  std::optional<DegreeSet> upper;
  bool exact() const { return upper && *upper == lower; }
};

class Engine {
 public:
  Bracket bounds(const Expr& m, const Expr& n) {
    const std::string key = print_expr(m) + " -> " + print_expr(n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Bracket b = dispatch(m, n);
    if (b.lower.is_all_integers()) b.upper = DegreeSet::all_integers();
    if (!b.lower.contains(0)) throw std::logic_error("lower bound lost the constant map: " + key);
    if (b.upper && !is_subset(b.lower, *b.upper))
      throw std::logic_error("inconsistent bracket for " + key + ": " + b.lower.to_string() +
                             " not within " + b.upper->to_string());
    memo_.emplace(key, b);
    return b;
  }

  std::vector<RuleApplication> take_trace() { return std::move(trace_); }
  std::vector<std::string> take_warnings() { return std::move(warnings_); }

 private:
  void record(std::string rule, const Expr& m, const Expr& n, DegreeSet produced,
              std::string role, std::string note = {}, std::vector<Expr> witnesses = {}) {
    RuleApplication r;
    r.paper_ref = std::string(rule_reference(rule));
    r.rule_id = std::move(rule);
    r.inputs = {print_expr(m), print_expr(n)};
    for (const auto& w : witnesses) r.inputs.push_back(print_expr(w));
    r.produced_set = std::move(produced);
    r.role = std::move(role);
    r.note = std::move(note);
    trace_.push_back(std::move(r));
  }

  Bracket unsupported(const Expr& m, const Expr& n, const std::string& why) {
    Bracket b{DegreeSet::of({0}), std::nullopt};
    record("none", m, n, b.lower, "lower", why);
    return b;
  }

  Bracket dispatch(const Expr& m, const Expr& n) {
    if (dimension(m) == 1) return circles(m, n);
    Bracket b;
    if (m.is<Product>() && n.is<Product>()) {
      b = products(m, n);
    } else if (n.is<ConnSum>()) {
      b = target_sum(m, n);
    } else if (m.is<ConnSum>()) {
      b = source_sum(m, n);
    } else if (m.is<Surface>() && n.is<Surface>()) {
      b = surfaces(m.as<Surface>(), n.as<Surface>(), m, n);
    } else if (m.is<CircleBundle>() && n.is<CircleBundle>()) {
      b = bundles(m.as<CircleBundle>(), n.as<CircleBundle>(), m, n);
    } else {
      b = unsupported(m, n, "no rule covers this pair of shapes");
    }
    // Pinching the complement of a summand equal to n has degree one.
    if (!n.is<ConnSum>() && !b.lower.contains(1) && is_sub_multiset({n}, summands_of(m))) {
      b.lower = set_union(b.lower, DegreeSet::of({1}));
      record("R6", m, n, DegreeSet::of({1}), "lower", "identity on a summand after pinching");
    }
    return b;
  }

  Bracket circles(const Expr& m, const Expr& n) {
    Bracket b{DegreeSet::all_integers(), DegreeSet::all_integers()};
    record("R1", m, n, b.lower, "exact");
    return b;
  }

  Bracket surfaces(const Surface& src, const Surface& dst, const Expr& m, const Expr& n) {
    const std::int64_t g = src.genus;
    const std::int64_t h = dst.genus;
    DegreeSet s;
    std::string note;
    if (h == 0 || (h == 1 && g >= 1)) {
      s = DegreeSet::all_integers();
      note = "target is a sphere or torus dominated with degree one";
    } else if (h >= 2 && g >= h) {
      const std::int64_t k = (g - 1) / (h - 1);
      s = interval(-k, k);
      note = "k = floor((" + std::to_string(g) + "-1)/(" + std::to_string(h) + "-1)) = " +
             std::to_string(k);
    } else {
      s = DegreeSet::of({0});
      note = "source genus below target genus";
    }
    record("R2", m, n, s, "exact", note);
    return {s, s};
  }

  Bracket bundles(const CircleBundle& src, const CircleBundle& dst, const Expr& m,
                  const Expr& n) {
    if (src.base_genus != dst.base_genus) {
      Bracket b{DegreeSet::of({0}), std::nullopt};
      record("R3", m, n, b.lower, "lower", "base genera differ; only bounds are known");
      return b;
    }
    if (src.euler == 0) {
      Bracket b{DegreeSet::of({0}), std::nullopt};
      record("R3", m, n, b.lower, "lower", "source Euler number 0; only bounds are known");
      return b;
    }
    DegreeSet s;
    std::string note;
    if (src.euler == -1 && dst.euler == std::numeric_limits<std::int64_t>::min())
      throw OverflowError("Euler quotient overflows");
    if (dst.euler % src.euler == 0) {
      const std::int64_t q = dst.euler / src.euler;
      s = DegreeSet::of({0, q});
      note = std::to_string(src.euler) + " | " + std::to_string(dst.euler) + ", quotient " +
             std::to_string(q);
    } else {
      s = DegreeSet::of({0});
      note = std::to_string(src.euler) + " does not divide " + std::to_string(dst.euler);
    }
    record("R3", m, n, s, "exact", note);
    return {s, s};
  }

  // Source is a connected sum, target is not.
  Bracket source_sum(const Expr& m, const Expr& n) {
    const auto parts = m.as<ConnSum>().summands;
    DegreeSet lower = DegreeSet::of({0});
    std::optional<DegreeSet> upper = DegreeSet::of({0});
    for (const auto& p : parts) {
      Bracket sub = bounds(p, n);
      lower = sumset(lower, sub.lower);
      if (upper && sub.upper)
        upper = sumset(*upper, *sub.upper);
      else
        upper.reset();
    }
    const bool equality = connecting_sphere_inessential(n);
    if (!equality) upper.reset();
    Bracket b{lower, upper};
    if (b.exact()) {
      record("R4", m, n, lower, "exact", "sum over summands; pi_{n-1} of target vanishes");
    } else {
      record("R4", m, n, lower, "lower", "sum of summand lower bounds");
      if (upper) record("R4", m, n, *upper, "upper", "sum of summand upper bounds");
    }
    return b;
  }

  // Target is a connected sum of at least two summands.
  Bracket target_sum(const Expr& m, const Expr& n) {
    const auto msum = summands_of(m);
    const auto nsum = n.as<ConnSum>().summands;

    // Upper bound: intersect over the summands of the target.
    std::optional<DegreeSet> upper;
    std::string note;
    for (const auto& s : distinct(nsum)) {
      Bracket sub = bounds(m, s);
      if (!sub.upper) continue;
      upper = upper ? intersect(*upper, *sub.upper) : *sub.upper;
      if (!note.empty()) note += " ∩ ";
      note += sub.upper->to_string();
    }
    if (upper) record("R5", m, n, *upper, "upper", note);

    // Lower bound: summand-wise sums, and covering or identity shapes
    // reached by pinching off the rest of the source.
    DegreeSet lower = DegreeSet::of({0});
    if (m.is<ConnSum>()) {
      DegreeSet acc = DegreeSet::of({0});
      for (const auto& p : msum) acc = sumset(acc, bounds(p, n).lower);
      if (acc != lower) record("R4", m, n, acc, "lower", "sum of summand lower bounds");
      lower = set_union(lower, acc);
    }

    struct Shape {
      std::vector<Expr> summands;
      std::int64_t degree;
    };
    std::vector<Shape> shapes;
    shapes.push_back({sorted(nsum), 1});
    for (const auto& s : distinct(nsum)) {
      if (!s.is<CircleBundle>()) continue;
      const auto rest = multiset_difference(nsum, {s});
      const std::int64_t max_d =
          static_cast<std::int64_t>((msum.size() - 1) / std::max<std::size_t>(rest.size(), 1));
      for (std::int64_t d = 2; d <= max_d; ++d)
        if (auto c = covering_summands(rest, s.as<CircleBundle>(), d)) shapes.push_back({*c, d});
    }

    for (const auto& shape : shapes) {
      if (!is_sub_multiset(shape.summands, msum)) continue;
      const Expr witness = make_conn_sum(shape.summands);
      const auto rest = multiset_difference(msum, shape.summands);
      const DegreeSet own = DegreeSet::of({shape.degree});
      const std::string what =
          shape.degree == 1 ? "identity on " + print_expr(witness)
                            : "covering of degree " + std::to_string(shape.degree) + " from " +
                                  print_expr(witness);
      record("R6", m, n, own, "lower",
             rest.empty() ? what : what + " after pinching off the rest", {witness});
      DegreeSet got = own;
      if (!rest.empty()) {
        const DegreeSet rest_lower = bounds(make_conn_sum(rest), n).lower;
        if (rest_lower != DegreeSet::of({0})) {
          got = sumset(own, rest_lower);
          record("R4", m, n, got, "lower", "shape degree plus degrees of the remaining summands",
                 {witness});
        }
      }
      lower = set_union(lower, got);
    }
    return {lower, upper};
  }

  DegreeSet product_lower(const std::vector<Bracket>& subs) {
    DegreeSet acc = DegreeSet::of({1});
    for (const auto& s : subs) acc = product_set(acc, s.lower);
    return acc;
  }

  static DegreeSet representable(const DegreeSet& s) {
    return s.is_all_integers() ? DegreeSet::of({-1, 0, 1}) : s;
  }

  // Whether the next target factor admits the product equality given the
  // source factors already accumulated. Records the check when `log`.
  bool product_step_ok(const std::vector<Expr>& src, const std::vector<Expr>& dst,
                       const std::vector<std::size_t>& order, std::size_t step, bool log) {
    const Expr& target = dst[order[step]];
    const Expr& m_step = src[order[step]];
    if (dimension(target) != 3 || !is_product_domination_free(target)) {
      if (log)
        record("R7", m_step, target, DegreeSet::of({0}), "check",
               "target factor is not known to avoid domination by products");
      return false;
    }
    for (std::size_t r = 0; r < step; ++r) {
      const Expr& q = src[order[r]];
      if (dimension(q) != 3) return false;
      std::optional<Expr> witness;
      for (const auto& s : distinct(summands_of(target))) {
        if (!s.is<CircleBundle>()) continue;
        Bracket b = bounds(q, s);
        if (b.upper && *b.upper == DegreeSet::of({0})) {
          witness = s;
          break;
        }
      }
      if (!witness) {
        Bracket b = bounds(q, target);
        if (b.upper && *b.upper == DegreeSet::of({0})) witness = target;
      }
      if (!witness) {
        if (log)
          record("R7", q, target, DegreeSet::of({0}), "check",
                 "earlier source factor may dominate the target factor");
        return false;
      }
      if (log)
        record("R7", q, *witness, DegreeSet::of({0}), "check",
               "earlier source factor is trivial on top homology of " + print_expr(target));
    }
    return true;
  }

  Bracket products(const Expr& m, const Expr& n) {
    const auto& src = m.as<Product>().factors;
    const auto& dst = n.as<Product>().factors;
    if (src.size() != dst.size())
      return unsupported(m, n, "products with different numbers of factors");
    for (std::size_t i = 0; i < src.size(); ++i)
      if (dimension(src[i]) != dimension(dst[i]))
        return unsupported(m, n, "factor dimensions do not line up");

    std::vector<Bracket> subs;
    for (std::size_t i = 0; i < src.size(); ++i) subs.push_back(bounds(src[i], dst[i]));

    DegreeSet lower;
    try {
      lower = product_lower(subs);
    } catch (const UnrepresentableSet&) {
      std::vector<Bracket> approx;
      for (const auto& s : subs) approx.push_back({representable(s.lower), std::nullopt});
      lower = product_lower(approx);
    }
    const bool factors_exact =
        std::all_of(subs.begin(), subs.end(), [](const Bracket& b) { return b.exact(); });
    const bool three_dim = std::all_of(src.begin(), src.end(),
                                       [](const Expr& f) { return dimension(f) == 3; });

    auto order_ok = [&](const std::vector<std::size_t>& order, bool log) {
      for (std::size_t step = 1; step < order.size(); ++step)
        if (!product_step_ok(src, dst, order, step, log)) return false;
      return true;
    };

    std::vector<std::size_t> order(src.size());
    std::iota(order.begin(), order.end(), 0);
    if (factors_exact && three_dim && !lower.is_all_integers()) {
      if (order_ok(order, true)) {
        record("R7", m, n, lower, "exact", "product of factor degree sets, left to right");
        return {lower, lower};
      }
      if (order.size() <= 6) {
        auto perm = order;
        while (std::next_permutation(perm.begin(), perm.end())) {
          if (order_ok(perm, false)) {
            std::string p;
            for (auto i : perm) p += (p.empty() ? "" : ",") + std::to_string(i + 1);
            warnings_.push_back("product equality holds for factor order (" + p + ") of " +
                                print_expr(m) + " -> " + print_expr(n) +
                                "; reorder the factors to certify it");
            break;
          }
        }
      }
    }
    record("R7", m, n, lower, "lower", "product of factor lower bounds");
    return {lower, lower.is_all_integers() ? std::optional<DegreeSet>(lower) : std::nullopt};
  }

  std::map<std::string, Bracket> memo_;
  std::vector<RuleApplication> trace_;
  std::vector<std::string> warnings_;
};

}  // namespace

bool is_covering_shape(const Expr& c, const Expr& n, std::int64_t d) {
  if (d < 1 || dimension(c) != 3 || dimension(n) != 3) return false;
  const auto target = summands_of(normalize(n));
  const auto have = sorted(summands_of(normalize(c)));
  for (const auto& s : distinct(target)) {
    if (!s.is<CircleBundle>()) continue;
    const auto rest = multiset_difference(target, {s});
    if (auto shape = covering_summands(rest, s.as<CircleBundle>(), d); shape && *shape == have)
      return true;
  }
  return false;
}

SetBound degree_bounds(const Expr& m, const Expr& n) {
  const Expr mn = normalize(m);
  const Expr nn = normalize(n);
  const int dm = dimension(mn);
  const int dn = dimension(nn);
  if (dm != dn)
    throw DimensionMismatch("source has dimension " + std::to_string(dm) + ", target " +
                            std::to_string(dn));
  Engine engine;
  Bracket b = engine.bounds(mn, nn);
  return SetBound{b.lower, b.upper, engine.take_trace(), engine.take_warnings()};
}

DegreeSet degree_set_exact(const Expr& m, const Expr& n) {
  SetBound b = degree_bounds(m, n);
  if (!b.exact()) throw NotDecided(std::move(b));
  return b.lower;
}

}  // namespace degreecalc
