#include <doctest.h>

#include <algorithm>
#include <random>

#include "degreecalc/errors.hpp"
#include "degreecalc/json_io.hpp"
#include "degreecalc/verify.hpp"
#include "support.hpp"
#include "tamper.hpp"

using namespace degreecalc;

namespace {

using V = std::vector<std::int64_t>;

bool has_check(const Report& r, const std::string& check) {
  return std::any_of(r.mismatches.begin(), r.mismatches.end(),
                     [&](const Mismatch& m) { return m.check == check; });
}

}  // namespace

TEST_CASE("brute_sumset examples") {
  CHECK(brute_sumset(V{1, 3}, V{0, 2}, V{0, 1}) == DegreeSet::of({-3, 0, 3, 6}));
  CHECK(brute_sumset(V{5}, V{0}, V{0}) == DegreeSet::of({0}));
  CHECK(brute_sumset(V{2, 2}, V{1, 1}, V{0, 0}) == DegreeSet::of({0, 2, 4}));
  CHECK(brute_sumset(V{}, V{}, V{}) == DegreeSet::of({0}));
}

TEST_CASE("brute_subset_products examples") {
  CHECK(brute_subset_products(V{2, 3}) == DegreeSet::of({0, 1, 2, 3, 6}));
  CHECK(brute_subset_products(V{1, 1, 1}) == DegreeSet::of({0, 1}));
  CHECK(brute_subset_products(V{2, 2}) == DegreeSet::of({0, 1, 2, 4}));
}

TEST_CASE("other oracles") {
  CHECK(brute_subset_sums(V{-2, 3}) == DegreeSet::of({-2, 0, 1, 3}));
  CHECK(brute_subset_sums(V{}) == DegreeSet::of({0}));
  const std::vector<std::pair<std::int64_t, std::int64_t>> iv{{-2, -1}, {0, 1}, {2, 3}};
  CHECK(brute_interval_union(iv) == interval(-2, 3));
}

TEST_CASE("enumeration caps") {
  OracleConfig small;
  small.enum_cap = 100;
  CHECK_THROWS_AS(brute_sumset(V{1, 1, 1}, V{5, 5, 5}, V{0, 0, 0}, small), EnumerationTooLarge);
  CHECK_THROWS_AS(brute_subset_products(V(26, 1)), EnumerationTooLarge);
  CHECK_THROWS_AS(brute_subset_sums(V(8, 1), small), EnumerationTooLarge);
  CHECK_THROWS_AS(brute_interval_union(std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 200}}, small),
                  EnumerationTooLarge);
}

TEST_CASE("parallel oracles agree with the serial references") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t k = 1 + rng() % 5;
    V d(k), n(k), np(k);
    for (std::size_t i = 0; i < k; ++i) {
      d[i] = 1 + static_cast<std::int64_t>(rng() % 12);
      n[i] = static_cast<std::int64_t>(rng() % 5);
      np[i] = static_cast<std::int64_t>(rng() % 5);
    }
    const auto par = brute_sumset(d, n, np);
    CHECK(par == brute_sumset_serial(d, n, np));
    CHECK(par == testsupport::family_sumset(d, n, np));
    CHECK(par.contains(0));
    CHECK(negate(par) == brute_sumset(d, np, n));

    V g(1 + rng() % 10);
    for (auto& x : g) x = 1 + static_cast<std::int64_t>(rng() % 6);
    const auto prod = brute_subset_products(g);
    CHECK(prod == brute_subset_products_serial(g));
    CHECK(prod == testsupport::subset_products_with_unit(g));
    std::shuffle(g.begin(), g.end(), rng);
    CHECK(prod == brute_subset_products(g));
  }
}

TEST_CASE("valid certificates check out") {
  for (const RealisationSpec& s :
       {RealisationSpec{Geometric{{2}}}, RealisationSpec{Geometric{{2, 3}}},
        RealisationSpec{SumsetFamily{{1, 3}, {0, 2}, {0, 1}}},
        RealisationSpec{ArithIntervals{{{-2, -1}, {0, 1}, {2, 3}}}},
        RealisationSpec{SubsetSums{{-2, 3}}}}) {
    const Report r = check_certificate(realise(s));
    CHECK_MESSAGE(r.ok, report_text(r));
    CHECK(report_text(r).rfind("OK", 0) == 0);
  }
}

TEST_CASE("tampered target is caught by engine and oracle") {
  Certificate c = realise_geometric({{2}});
  c.target = DegreeSet::of({0, 1, 3});
  const Report r = check_certificate(c);
  CHECK_FALSE(r.ok);
  CHECK(has_check(r, "engine"));
  CHECK(has_check(r, "oracle"));
  CHECK(report_text(r).rfind("FAILED", 0) == 0);
}

TEST_CASE("small prime is caught") {
  Certificate c = realise_geometric({{3}});
  const auto built = geometric_construction(std::vector<std::int64_t>{3}, std::vector<std::int64_t>{2});
  c.M = built.M;
  c.N = built.N;
  c.params = built.params;
  const Report r = check_certificate(c);
  CHECK_FALSE(r.ok);
  CHECK(has_check(r, "prime_hygiene"));
}

TEST_CASE("other faults") {
  std::mt19937_64 rng(3);
  const Certificate base = realise_sumset({{1, 3}, {0, 2}, {0, 1}});
  CHECK_FALSE(check_certificate(testsupport::swap_euler(base, rng)).ok);
  CHECK_FALSE(check_certificate(testsupport::mutate_target(base, rng)).ok);

  Certificate c = base;
  c.derivation.pop_back();
  CHECK(has_check(check_certificate(c), "derivation"));

  c = base;
  c.derivation[0].produced_set = DegreeSet::of({0, 7});
  CHECK(has_check(check_certificate(c), "derivation"));

  c = base;
  c.params["d_prime"] = std::int64_t{6};
  CHECK(has_check(check_certificate(c), "construction"));

  c = base;
  c.spec = SumsetFamily{{1, 3}, {0, 2}, {0, 2}};
  CHECK_FALSE(check_certificate(c).ok);
}

TEST_CASE("certificate JSON round trip") {
  for (const RealisationSpec& s :
       {RealisationSpec{Geometric{{2, 3}}}, RealisationSpec{SumsetFamily{{1, 3}, {0, 2}, {0, 1}}},
        RealisationSpec{ArithIntervals{{{-1, 1}}}}, RealisationSpec{SubsetSums{{4, 0}}}}) {
    const Certificate c = realise(s);
    const Json j = to_json(c);
    const Certificate back = certificate_from_json(Json::parse(j.dump()));
    CHECK(to_json(back) == j);
    CHECK(check_certificate(back).ok);
  }
}

TEST_CASE("set JSON") {
  CHECK(to_json(DegreeSet::of({0, 3})).dump() == R"({"kind":"finite","elements":[0,3]})");
  CHECK(to_json(DegreeSet::all_integers()).dump() == R"({"kind":"all_integers"})");
  CHECK(degree_set_from_json(Json::parse(R"({"kind":"all_integers"})")) == DegreeSet::all_integers());
  CHECK_THROWS_AS(degree_set_from_json(Json::parse(R"({"kind":"finite","elements":[3,0]})")),
                  MalformedCertificate);
  CHECK_THROWS_AS(degree_set_from_json(Json::parse(R"({"kind":"lattice"})")), MalformedCertificate);
}

TEST_CASE("malformed certificates") {
  Json j = to_json(realise_geometric({{2}}));
  j.erase("M");
  CHECK_THROWS_AS(certificate_from_json(j), MalformedCertificate);
  j = to_json(realise_geometric({{2}}));
  j["N"] = "K(1;3)";
  CHECK_THROWS_AS(certificate_from_json(j), MalformedCertificate);
  j = to_json(realise_geometric({{2}}));
  j["spec"]["family"] = "finite";
  CHECK_THROWS_AS(certificate_from_json(j), MalformedCertificate);
  CHECK_THROWS_AS(certificate_from_json(Json::array()), MalformedCertificate);
}

TEST_CASE("report JSON") {
  const Report r = check_certificate(realise_geometric({{2}}));
  const Json j = to_json(r);
  CHECK(j["ok"] == true);
  CHECK(j["oracle_set"]["elements"] == Json::array({0, 1, 2}));
  CHECK(j["mismatches"].empty());
}
