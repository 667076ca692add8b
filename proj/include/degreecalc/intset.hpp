#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace degreecalc {

/// A set of integers that is either finite or all of Z.
///
/// Finite sets are stored as a strictly increasing element list. The empty
/// set is a legal value; it absorbs under sumset and product_set.
class DegreeSet {
 public:
  enum class Kind { Finite, AllIntegers };

  /// The empty finite set.
  DegreeSet() = default;

  /// Builds a finite set from arbitrary elements (sorted and deduplicated).
  static DegreeSet of(std::vector<std::int64_t> elements);
  static DegreeSet of(std::initializer_list<std::int64_t> elements) {
    return of(std::vector<std::int64_t>(elements));
  }
  static DegreeSet all_integers();
  static DegreeSet empty() { return DegreeSet(); }

  Kind kind() const { return kind_; }
  bool is_all_integers() const { return kind_ == Kind::AllIntegers; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_empty() const { return kind_ == Kind::Finite && elements_.empty(); }

  /// Elements of a finite set, strictly increasing. Empty for Z.
  std::span<const std::int64_t> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  bool contains(std::int64_t d) const;

  /// Canonical text form: "{-1, 0, 1}" or "Z".
  std::string to_string() const;

  friend bool operator==(const DegreeSet&, const DegreeSet&) = default;

 private:
  Kind kind_ = Kind::Finite;
  std::vector<std::int64_t> elements_;
};

std::ostream& operator<<(std::ostream& os, const DegreeSet& s);

/// Minkowski sum {x + y}.
DegreeSet sumset(const DegreeSet& a, const DegreeSet& b);

/// Product set {x * y}. Throws UnrepresentableSet when the result is a
/// proper union of lattices (Z times a finite set with no unit in it).
DegreeSet product_set(const DegreeSet& a, const DegreeSet& b);

DegreeSet intersect(const DegreeSet& a, const DegreeSet& b);
DegreeSet set_union(const DegreeSet& a, const DegreeSet& b);
DegreeSet negate(const DegreeSet& a);

inline bool contains(const DegreeSet& a, std::int64_t d) { return a.contains(d); }
inline bool equals(const DegreeSet& a, const DegreeSet& b) { return a == b; }

/// a is a subset of b.
bool is_subset(const DegreeSet& a, const DegreeSet& b);

/// {lo, lo+1, ..., hi}. Throws InvalidInterval if lo > hi.
DegreeSet interval(std::int64_t lo, std::int64_t hi);

/// {m * step | lo <= m <= hi}.
DegreeSet scaled_range(std::int64_t step, std::int64_t lo, std::int64_t hi);

}  // namespace degreecalc
