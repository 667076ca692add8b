#include <doctest.h>

#include <random>

#include "degreecalc/errors.hpp"
#include "degreecalc/manifold.hpp"
#include "support.hpp"

using namespace degreecalc;

namespace {
Expr K(std::int64_t e) { return Expr::bundle(2, e); }
}  // namespace

TEST_CASE("dimension") {
  CHECK(dimension(Expr::circle()) == 1);
  CHECK(dimension(Expr::surface(4)) == 2);
  CHECK(dimension(K(5)) == 3);
  CHECK(dimension(Expr::product({K(5), Expr::bundle(3, 7)})) == 6);
  CHECK(dimension(Expr::conn_sum({K(1), K(-1)})) == 3);
  CHECK_THROWS_AS(dimension(Expr::conn_sum({K(1), Expr::surface(2)})), MalformedExpr);
  CHECK_THROWS_AS(dimension(Expr::conn_sum({Expr::circle(), Expr::circle()})), MalformedExpr);
}

TEST_CASE("factories reject malformed input") {
  CHECK_THROWS_AS(Expr::bundle(1, 3), MalformedExpr);
  CHECK_THROWS_AS(Expr::surface(-1), MalformedExpr);
  CHECK_THROWS_AS(Expr::conn_sum({}), MalformedExpr);
  CHECK_THROWS_AS(Expr::product({K(1)}), MalformedExpr);
}

TEST_CASE("normalize flattens and sorts connected sums") {
  const Expr m = Expr::conn_sum({Expr::conn_sum({K(3), K(1)}), K(3)});
  CHECK(normalize(m) == Expr::conn_sum({K(1), K(3), K(3)}));
  CHECK(normalize(Expr::conn_sum({K(5)})) == K(5));
  const Expr p = Expr::product({Expr::surface(2), Expr::circle()});
  CHECK(normalize(p) == p);
  const Expr nested = Expr::product({Expr::product({K(2), K(3)}), K(1)});
  CHECK(normalize(nested) == Expr::product({K(2), K(3), K(1)}));
}

TEST_CASE("normalize is idempotent and keeps dimension") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const Expr m = testsupport::random_any_expr(rng, 3);
    const Expr n = normalize(m);
    CHECK(normalize(n) == n);
    CHECK(dimension(n) == dimension(m));
  }
}

TEST_CASE("compare is a total order") {
  CHECK(compare(Expr::circle(), Expr::surface(0)) < 0);
  CHECK(compare(Expr::surface(3), K(0)) < 0);
  CHECK(compare(K(-2), K(1)) < 0);
  CHECK(compare(Expr::bundle(2, 9), Expr::bundle(3, -9)) < 0);
  CHECK(compare(K(4), K(4)) == 0);
}

TEST_CASE("multiset helpers") {
  const std::vector<Expr> whole{K(1), K(3), K(3)};
  CHECK(is_sub_multiset({K(3), K(3)}, whole));
  CHECK_FALSE(is_sub_multiset({K(1), K(1)}, whole));
  CHECK(multiset_difference(whole, {K(3)}) == std::vector<Expr>{K(1), K(3)});
  CHECK(make_conn_sum({K(3), K(1)}) == Expr::conn_sum({K(1), K(3)}));
  CHECK(summands_of(K(2)) == std::vector<Expr>{K(2)});
}

TEST_CASE("pi_2 triviality") {
  CHECK(is_pi2_trivial(K(7)));
  CHECK_FALSE(is_pi2_trivial(Expr::conn_sum({K(3), K(9)})));
  CHECK(is_pi2_trivial(Expr::conn_sum({K(5)})));
  CHECK_THROWS_AS(is_pi2_trivial(Expr::surface(2)), DimensionMismatch);
  CHECK_THROWS_AS(is_pi2_trivial(Expr::product({Expr::circle(), Expr::surface(2)})), Unsupported);
}

TEST_CASE("domination by products") {
  CHECK(is_product_domination_free(K(5)));
  CHECK_FALSE(is_product_domination_free(K(0)));
  CHECK(is_product_domination_free(Expr::conn_sum({K(5), K(4)})));
  CHECK_FALSE(is_product_domination_free(Expr::product({Expr::circle(), Expr::surface(2)})));
  CHECK(is_product_domination_free(Expr::conn_sum({K(0), K(3)})));
}
