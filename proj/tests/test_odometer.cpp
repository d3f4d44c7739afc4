#include <doctest.h>

#include <set>

#include "odembed/errors.hpp"
#include "odembed/odometer.hpp"
#include "oracles.hpp"

using namespace odembed;

TEST_CASE("profile parsing") {
  const auto p = Profile::parse("5|6");
  CHECK(p.terms(4) == std::vector<std::uint64_t>{5, 6, 6, 6});
  CHECK(p.to_string() == "5|6");
  CHECK(Profile::parse("|2,3,4").terms(5) == std::vector<std::uint64_t>{2, 3, 4, 2, 3});
  CHECK(Profile::parse(" primes ").terms(5) == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
  CHECK_FALSE(Profile::primes().finitary());
  CHECK(Profile::parse("|6").finitary());
  CHECK_THROWS_AS(Profile::parse("6"), Error);
  CHECK_THROWS_AS(Profile::parse("5|"), Error);
  CHECK_THROWS_AS(Profile::parse("|1"), Error);
  CHECK_THROWS_AS(Profile::parse("|x"), Error);
  CHECK_THROWS_AS(Profile::parse("").terms(1), Error);
}

TEST_CASE("plus matches counting") {
  const std::vector<std::uint64_t> moduli{2, 3, 4};
  auto z = OdometerPoint::zero(moduli);
  auto digits = std::vector<std::uint64_t>(3, 0);
  for (int t = 0; t < 30; ++t) {
    CHECK(z.digits() == digits);
    CHECK(z.value() == static_cast<std::uint64_t>(t % 24));
    z = plus(z, 1);
    digits = oracle::add_one(digits, moduli);
  }
  const auto a = OdometerPoint(moduli, {1, 2, 3});
  CHECK(plus(a, 1) == OdometerPoint::zero(moduli));
  CHECK(plus(a, 1000).value() == (23 + 1000) % 24);
  CHECK(parse_point("1,2,3", moduli) == a);
  CHECK_THROWS_AS(parse_point("1,3,0", moduli), Error);
  CHECK_THROWS_AS(parse_point("1,2", moduli), Error);
  CHECK_THROWS_AS(OdometerPoint(moduli, {2, 0, 0}), Error);
}

TEST_CASE("inverse limit form commutes with +1") {
  const std::vector<std::uint64_t> moduli{2, 3, 4};
  for (std::uint64_t v = 0; v < 24; ++v) {
    const auto z = OdometerPoint::from_value(moduli, v);
    const auto w = tilde_of(z);
    CHECK(w.coordinates() == std::vector<std::uint64_t>{v % 2, v % 6, v % 24});
    CHECK(point_of(w) == z);
    CHECK(plus_one(w) == tilde_of(plus(z, 1)));
  }
  CHECK(InverseLimitPoint(moduli, {0, 0, 0}).partial_products() ==
        std::vector<std::uint64_t>{2, 6, 24});
  CHECK_THROWS_AS(InverseLimitPoint(moduli, {1, 2, 5}), Error);
}

TEST_CASE("multiplicity and canonical form") {
  const auto f = multiplicity(Profile::parse("2,3|4"));
  CHECK(f.at(2) == Multiplicity::infinity());
  CHECK(f.at(3) == Multiplicity{false, 1});
  CHECK(f.at(5) == Multiplicity{false, 0});
  CHECK(canonical_form(Profile::parse("2,3|4")) == CanonicalForm{3, 2});
  CHECK(canonical_form(Profile::parse("|6")) == CanonicalForm{1, 6});
  CHECK(canonical_form(Profile::parse("5|6")) == CanonicalForm{5, 6});
  CHECK(canonical_form(Profile::parse("9,2|10")) == CanonicalForm{9, 10});
  // A finite power absorbed by an infinite one at the same prime.
  CHECK(canonical_form(Profile::parse("4|2")) == CanonicalForm{1, 2});
  CHECK(canonical_moduli({5, 6}, 3) == std::vector<std::uint64_t>{5, 6, 6});
  CHECK(canonical_moduli({1, 6}, 2) == std::vector<std::uint64_t>{6, 6});
  CHECK_THROWS_AS(canonical_form(Profile::primes()), Error);
  CHECK(multiplicity(Profile::primes(), 5).partial);
}

TEST_CASE("conjugacy invariant") {
  CHECK(conjugate_eq(Profile::parse("|2,3"), Profile::parse("|6")));
  CHECK(conjugate_eq(Profile::parse("|4"), Profile::parse("|2")));
  CHECK(conjugate_eq(Profile::parse("3|2"), Profile::parse("2,3|2")));
  CHECK_FALSE(conjugate_eq(Profile::parse("3|2"), Profile::parse("|2")));
  CHECK_FALSE(conjugate_eq(Profile::parse("|6"), Profile::parse("|10")));
}

TEST_CASE("to_canonical reduces the value") {
  const auto form = canonical_form(Profile::parse("2,3|4"));
  const std::vector<std::uint64_t> moduli{2, 3, 4, 4};
  for (std::uint64_t v = 0; v < 96; v += 7) {
    const auto c = to_canonical(OdometerPoint::from_value(moduli, v), form);
    // order 96 = 3 * 2^5: canonical moduli (3, 2, 2, 2, 2, 2)
    CHECK(c.order() == 96);
    CHECK(c.value() == v);
  }
  CHECK_THROWS_AS(to_canonical(OdometerPoint::zero({2}), form), Error);
}

TEST_CASE("equal-depth product splitting") {
  for (const auto& [m, n] : {std::pair<std::uint64_t, std::uint64_t>{2, 3}, {3, 5}}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const std::vector<std::uint64_t> moduli(k, m * n);
      std::uint64_t order = 1;
      for (std::size_t i = 0; i < k; ++i) order *= m * n;
      std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
      const auto one = crt_split_point(OdometerPoint::from_value(moduli, 1), m, n);
      CHECK(one.first.value() == 1);
      CHECK(one.second.value() == 1);
      for (std::uint64_t v = 0; v < order; ++v) {
        const auto z = OdometerPoint::from_value(moduli, v);
        const auto parts = crt_split_point(z, m, n);
        seen.insert({parts.first.value(), parts.second.value()});
        CHECK(crt_join_point(parts.first, parts.second) == z);
        const auto next = crt_split_point(plus(z, 1), m, n);
        CHECK(next.first == plus(parts.first, 1));
        CHECK(next.second == plus(parts.second, 1));
      }
      CHECK(seen.size() == order);
    }
  }
  CHECK_THROWS_AS(crt_split_point(OdometerPoint::zero({6}), 2, 4), Error);
}

TEST_CASE("seeded splitting") {
  const std::vector<std::uint64_t> moduli{5, 6};
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (std::uint64_t v = 0; v < 30; ++v) {
    const auto z = OdometerPoint::from_value(moduli, v);
    const auto parts = seeded_split_point(z, 5, 2, 3);
    CHECK(parts.first.moduli() == std::vector<std::uint64_t>{5, 2});
    CHECK(parts.second.moduli() == std::vector<std::uint64_t>{3});
    seen.insert({parts.first.value(), parts.second.value()});
    CHECK(seeded_join_point(parts.first, parts.second) == z);
    const auto next = seeded_split_point(plus(z, 1), 5, 2, 3);
    CHECK(next.first == plus(parts.first, 1));
    CHECK(next.second == plus(parts.second, 1));
  }
  CHECK(seen.size() == 30);
  const auto deep = seeded_split_point(OdometerPoint::from_value({5, 6, 6}, 179), 5, 2, 3);
  CHECK(deep.first.order() == 20);
  CHECK(deep.second.order() == 9);
}

TEST_CASE("odometer diagram columns") {
  const auto d = odometer_spacetime(Profile::parse("|2,3,2"), 3, 60);
  CHECK(d.column_period(1) == PeriodDetection{0, 2});
  CHECK(d.column_period(2) == PeriodDetection{0, 6});
  CHECK(d.column_period(3) == PeriodDetection{0, 12});
  CHECK(d.row(5) == std::vector<Digit>{1, 2, 0});
}

TEST_CASE("report") {
  const auto text = odometer_report(Profile::parse("2,3|4"), 3);
  CHECK(text.find("terms 2,3,4\n") != std::string::npos);
  CHECK(text.find("canonical m=3 n=2\n") != std::string::npos);
  CHECK(odometer_report(Profile::primes(), 3).find("finitary no") != std::string::npos);
}
