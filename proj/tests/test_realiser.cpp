#include <doctest.h>

#include "degreecalc/dsl.hpp"
#include "degreecalc/engine.hpp"
#include "degreecalc/errors.hpp"
#include "degreecalc/realiser.hpp"
#include "support.hpp"

using namespace degreecalc;

namespace {

std::int64_t int_param(const Certificate& c, const std::string& key) {
  return std::get<std::int64_t>(c.params.at(key));
}

std::vector<std::int64_t> list_param(const Certificate& c, const std::string& key) {
  return std::get<std::vector<std::int64_t>>(c.params.at(key));
}

void check_round_trip(const Certificate& c) {
  CHECK(degree_set_exact(c.M, c.N) == c.target);
  CHECK(c.M == normalize(c.M));
  CHECK(c.N == normalize(c.N));
  CHECK(c.derivation == degree_bounds(c.M, c.N).trace);
}

}  // namespace

TEST_CASE("sumset family") {
  auto c = realise_sumset({{1, 3}, {0, 2}, {0, 1}});
  CHECK(print_expr(c.M) == "K(2;-1) # K(2;1) # K(2;1)");
  CHECK(print_expr(c.N) == "K(2;3)");
  CHECK(c.target == testsupport::family_sumset({1, 3}, {0, 2}, {0, 1}));
  CHECK(c.target == DegreeSet::of({-3, 0, 3, 6}));
  CHECK(int_param(c, "d_prime") == 3);
  CHECK(list_param(c, "d_i_prime") == std::vector<std::int64_t>{3, 1});
  check_round_trip(c);

  c = realise_sumset({{2}, {1}, {0}});
  CHECK(print_expr(c.M) == "K(2;1)");
  CHECK(print_expr(c.N) == "K(2;2)");
  CHECK(c.target == DegreeSet::of({0, 2}));

  c = realise_sumset({{1}, {1}, {1}});
  CHECK(print_expr(c.M) == "K(2;-1) # K(2;1)");
  CHECK(c.target == DegreeSet::of({-1, 0, 1}));
  check_round_trip(c);
}

TEST_CASE("empty sumset uses a non-dividing bundle") {
  const auto c = realise_sumset({{2, 3}, {0, 0}, {0, 0}});
  CHECK(c.target == DegreeSet::of({0}));
  CHECK(std::get<bool>(c.params.at("degenerate")));
  CHECK(print_expr(c.M) == "K(2;7)");
  check_round_trip(c);
}

TEST_CASE("sumset validation") {
  CHECK_THROWS_AS(realise_sumset({{0}, {1}, {0}}), InvalidSpec);
  CHECK_THROWS_AS(realise_sumset({{1, 2}, {1}, {0}}), InvalidSpec);
  CHECK_THROWS_AS(realise_sumset({{1}, {-1}, {0}}), InvalidSpec);
}

TEST_CASE("arithmetic interval sequences") {
  auto c = realise_arith_intervals({{{-3, -3}, {0, 0}, {3, 3}, {6, 6}}});
  CHECK(c.target == DegreeSet::of({-3, 0, 3, 6}));
  CHECK(int_param(c, "n1") == 0);
  CHECK(int_param(c, "n1_prime") == 0);
  CHECK(int_param(c, "d2") == 3);
  CHECK(int_param(c, "n2") == 2);
  CHECK(int_param(c, "n2_prime") == 1);
  check_round_trip(c);

  c = realise_arith_intervals({{{-1, 1}}});
  CHECK(c.target == DegreeSet::of({-1, 0, 1}));
  const auto a = arith_parameters({{{-1, 1}}});
  CHECK(a.n1 == 1);
  CHECK(a.n1_prime == 1);
  CHECK(a.d2 == 1);
  CHECK(a.n2 == 0);
  CHECK(a.n2_prime == 0);

  c = realise_arith_intervals({{{-2, -1}, {0, 1}, {2, 3}}});
  CHECK(c.target == interval(-2, 3));
  const auto b = arith_parameters({{{-2, -1}, {0, 1}, {2, 3}}});
  CHECK(b.n1 == 1);
  CHECK(b.n1_prime == 0);
  CHECK(b.d2 == 2);
  CHECK(b.n2 == 1);
  CHECK(b.n2_prime == 1);
  CHECK(b.k == 2);
  check_round_trip(c);
}

TEST_CASE("arithmetic interval validation") {
  CHECK_THROWS_AS(realise_arith_intervals({{{1, 2}, {4, 5}}}), ZeroNotContained);
  CHECK_THROWS_AS(realise_arith_intervals({{{0, 1}, {3, 5}}}), InvalidSpec);
  CHECK_THROWS_AS(realise_arith_intervals({{{0, 1}, {3, 4}, {7, 8}, {9, 10}}}), InvalidSpec);
  CHECK_THROWS_AS(realise_arith_intervals({{{0, 2}, {2, 4}}}), InvalidSpec);
  CHECK_THROWS_AS(realise_arith_intervals({{}}), InvalidSpec);
}

TEST_CASE("subset sums") {
  auto c = realise_subset_sums({{2, 3}});
  CHECK(c.target == DegreeSet::of({0, 2, 3, 5}));
  check_round_trip(c);
  c = realise_subset_sums({{0}});
  CHECK(c.target == DegreeSet::of({0}));
  check_round_trip(c);
  c = realise_subset_sums({{-2, 3}});
  CHECK(c.target == DegreeSet::of({-2, 0, 1, 3}));
  check_round_trip(c);
}

TEST_CASE("geometric family") {
  auto c = realise_geometric({{2}});
  CHECK(list_param(c, "q") == std::vector<std::int64_t>{3});
  CHECK(print_expr(c.M) == "K(2;2) # K(2;3) # K(2;3) # K(2;4)");
  CHECK(print_expr(c.N) == "K(2;3) # K(2;4)");
  CHECK(c.target == DegreeSet::of({0, 1, 2}));
  check_round_trip(c);

  c = realise_geometric({{2, 3}});
  CHECK(list_param(c, "q") == std::vector<std::int64_t>{5, 7});
  CHECK(c.target == DegreeSet::of({0, 1, 2, 3, 6}));
  check_round_trip(c);

  c = realise_geometric({{3, 3, 3}});
  CHECK(list_param(c, "q") == std::vector<std::int64_t>{5, 7, 11});
  CHECK(c.target == DegreeSet::of({0, 1, 3, 9, 27}));
  CHECK(std::get<bool>(c.params.at("primes_coprime_to_d")));
  check_round_trip(c);

  c = realise_geometric({{1}});
  CHECK(c.target == DegreeSet::of({0, 1}));
  check_round_trip(c);

  c = realise_geometric({{1, 2}});
  CHECK(c.target == DegreeSet::of({0, 1, 2}));
  check_round_trip(c);

  CHECK_THROWS_AS(realise_geometric({{3, 2}}), InvalidSpec);
  CHECK_THROWS_AS(realise_geometric({{0}}), InvalidSpec);
  CHECK_THROWS_AS(realise_geometric({{}}), InvalidSpec);
}

TEST_CASE("primes") {
  CHECK(next_prime(0) == 2);
  CHECK(next_prime(1) == 2);
  CHECK(next_prime(3) == 5);
  CHECK(next_prime(10) == 11);
  CHECK(next_prime(7919) == 7927);
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  const std::vector<std::int64_t> d{4, 4, 9};
  CHECK(choose_primes(d) == std::vector<std::int64_t>{11, 13, 17});
  const std::vector<std::int64_t> ones{1, 1};
  CHECK(choose_primes(ones) == std::vector<std::int64_t>{3, 5});
}

TEST_CASE("realise dispatches on the family") {
  const RealisationSpec s = SubsetSums{{1, 1}};
  CHECK(family_name(s) == "subset_sums");
  CHECK(realise(s).target == DegreeSet::of({0, 1, 2}));
  CHECK(spec_target(Geometric{{2, 2}}) == DegreeSet::of({0, 1, 2, 4}));
}
