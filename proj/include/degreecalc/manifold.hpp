#pragma once

#include <compare>
#include <cstdint>
#include <variant>
#include <vector>

namespace degreecalc {

class Expr;

struct Circle {
  friend bool operator==(const Circle&, const Circle&) = default;
};

/// Closed oriented surface of the given genus.
struct Surface {
  std::int64_t genus = 0;
  friend bool operator==(const Surface&, const Surface&) = default;
};

/// Oriented circle bundle with the given Euler number over the closed
/// oriented surface of genus base_genus (>= 2, so the base is hyperbolic).
struct CircleBundle {
  std::int64_t base_genus = 2;
  std::int64_t euler = 0;
  friend bool operator==(const CircleBundle&, const CircleBundle&) = default;
};

struct ConnSum {
  std::vector<Expr> summands;
  friend bool operator==(const ConnSum&, const ConnSum&);
};

struct Product {
  std::vector<Expr> factors;
  friend bool operator==(const Product&, const Product&);
};

/// Manifold expression: an immutable value tree.
class Expr {
 public:
  using Node = std::variant<Circle, Surface, CircleBundle, ConnSum, Product>;

  static Expr circle();
  /// Throws MalformedExpr for a negative genus.
  static Expr surface(std::int64_t genus);
  /// Throws MalformedExpr when base_genus < 2.
  static Expr bundle(std::int64_t base_genus, std::int64_t euler);
  /// Throws MalformedExpr for an empty summand list.
  static Expr conn_sum(std::vector<Expr> summands);
  /// Throws MalformedExpr for fewer than two factors.
  static Expr product(std::vector<Expr> factors);

  const Node& node() const { return node_; }

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(node_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(node_);
  }

  friend bool operator==(const Expr&, const Expr&) = default;

 private:
  explicit Expr(Node n) : node_(std::move(n)) {}
  Node node_;
};

inline bool operator==(const ConnSum& a, const ConnSum& b) { return a.summands == b.summands; }
inline bool operator==(const Product& a, const Product& b) { return a.factors == b.factors; }

/// Total order used for canonical sorting: variant rank (circle, surface,
/// bundle, connected sum, product), then genus, Euler number, children.
std::strong_ordering compare(const Expr& a, const Expr& b);

struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};

/// Throws MalformedExpr when connected-sum summands disagree in dimension or
/// a summand has dimension 1.
int dimension(const Expr& m);

/// Canonical form: nested connected sums and products are flattened,
/// connected-sum summands are sorted and a one-summand connected sum is
/// replaced by its summand. Product factors keep their order: permuting
/// odd-dimensional factors reverses orientation.
Expr normalize(const Expr& m);

/// The connected summands of m (m itself unless it is a connected sum).
std::vector<Expr> summands_of(const Expr& m);

/// Whether every summand of part occurs in whole, with multiplicity.
bool is_sub_multiset(const std::vector<Expr>& part, const std::vector<Expr>& whole);

/// whole minus part as multisets, sorted. Precondition: is_sub_multiset(part, whole).
std::vector<Expr> multiset_difference(const std::vector<Expr>& whole, const std::vector<Expr>& part);

/// Builds the normalized connected sum of the given summands (non-empty).
Expr make_conn_sum(std::vector<Expr> summands);

/// Whether pi_2 of a 3-dimensional expression vanishes. Circle bundles
/// over hyperbolic bases are aspherical; a connected sum of two or more
/// aspherical pieces has an essential connecting sphere. Throws
/// Unsupported for other shapes and DimensionMismatch if dim != 3.
bool is_pi2_trivial(const Expr& n);

/// Sufficient syntactic test that the 3-dimensional n is not dominated by
/// direct products: it has a circle-bundle summand with non-zero Euler
/// number. False is always a sound answer.
bool is_product_domination_free(const Expr& n);

}  // namespace degreecalc
