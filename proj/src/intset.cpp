#include "degreecalc/intset.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "degreecalc/checked.hpp"
#include "degreecalc/errors.hpp"

namespace degreecalc {

namespace {

// Largest finite set or pair enumeration the algebra will materialise.
constexpr std::size_t kMaxMaterialised = std::size_t{1} << 26;

void guard_size(std::size_t n, const char* what) {
  if (n > kMaxMaterialised)
    throw UnrepresentableSet(std::string(what) + ": result too large to materialise");
}

void canonicalise(std::vector<std::int64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool has_unit(const DegreeSet& s) { return s.contains(1) || s.contains(-1); }

}  // namespace

DegreeSet DegreeSet::of(std::vector<std::int64_t> elements) {
  DegreeSet s;
  canonicalise(elements);
  s.elements_ = std::move(elements);
  return s;
}

DegreeSet DegreeSet::all_integers() {
  DegreeSet s;
  s.kind_ = Kind::AllIntegers;
  return s;
}

bool DegreeSet::contains(std::int64_t d) const {
  if (is_all_integers()) return true;
  return std::binary_search(elements_.begin(), elements_.end(), d);
}

std::string DegreeSet::to_string() const {
  if (is_all_integers()) return "Z";
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) os << ", ";
    os << elements_[i];
  }
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DegreeSet& s) { return os << s.to_string(); }

DegreeSet sumset(const DegreeSet& a, const DegreeSet& b) {
  if (a.is_empty() || b.is_empty()) return DegreeSet::empty();
  if (a.is_all_integers() || b.is_all_integers()) return DegreeSet::all_integers();
  guard_size(a.size() * b.size(), "sumset");
  std::vector<std::int64_t> out;
  out.reserve(a.size() * b.size());
  for (auto x : a.elements())
    for (auto y : b.elements()) out.push_back(checked_add(x, y));
  return DegreeSet::of(std::move(out));
}

DegreeSet product_set(const DegreeSet& a, const DegreeSet& b) {
  if (a.is_empty() || b.is_empty()) return DegreeSet::empty();
  if (a.is_all_integers() && b.is_all_integers()) return DegreeSet::all_integers();
  if (a.is_all_integers() || b.is_all_integers()) {
    const DegreeSet& fin = a.is_all_integers() ? b : a;
    // Z * B is the union of the lattices bZ over b in B.
    if (has_unit(fin)) return DegreeSet::all_integers();
    if (fin.is_empty() || fin == DegreeSet::of({0})) return fin;
    throw UnrepresentableSet("Z times " + fin.to_string() + " is a proper union of lattices");
  }
  guard_size(a.size() * b.size(), "product_set");
  std::vector<std::int64_t> out;
  out.reserve(a.size() * b.size());
  for (auto x : a.elements())
    for (auto y : b.elements()) out.push_back(checked_mul(x, y));
  return DegreeSet::of(std::move(out));
}

DegreeSet intersect(const DegreeSet& a, const DegreeSet& b) {
  if (a.is_all_integers()) return b;
  if (b.is_all_integers()) return a;
  std::vector<std::int64_t> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(out));
  return DegreeSet::of(std::move(out));
}

DegreeSet set_union(const DegreeSet& a, const DegreeSet& b) {
  if (a.is_all_integers() || b.is_all_integers()) return DegreeSet::all_integers();
  std::vector<std::int64_t> out;
  std::set_union(a.elements().begin(), a.elements().end(), b.elements().begin(),
                 b.elements().end(), std::back_inserter(out));
  return DegreeSet::of(std::move(out));
}

DegreeSet negate(const DegreeSet& a) {
  if (a.is_all_integers()) return a;
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  for (auto it = a.elements().rbegin(); it != a.elements().rend(); ++it)
    out.push_back(checked_neg(*it));
  return DegreeSet::of(std::move(out));
}

bool is_subset(const DegreeSet& a, const DegreeSet& b) {
  if (b.is_all_integers()) return true;
  if (a.is_all_integers()) return false;
  return std::includes(b.elements().begin(), b.elements().end(), a.elements().begin(),
                       a.elements().end());
}

DegreeSet interval(std::int64_t lo, std::int64_t hi) {
  if (lo > hi)
    throw InvalidInterval("interval [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "] has lo > hi");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  guard_size(static_cast<std::size_t>(std::min<std::uint64_t>(span, kMaxMaterialised + 1)),
             "interval");
  std::vector<std::int64_t> out;
  out.reserve(span + 1);
  for (std::int64_t x = lo;; ++x) {
    out.push_back(x);
    if (x == hi) break;
  }
  return DegreeSet::of(std::move(out));
}

DegreeSet scaled_range(std::int64_t step, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) return DegreeSet::empty();
  const DegreeSet range = interval(lo, hi);
  std::vector<std::int64_t> out;
  for (auto m : range.elements()) out.push_back(checked_mul(m, step));
  return DegreeSet::of(std::move(out));
}

}  // namespace degreecalc
