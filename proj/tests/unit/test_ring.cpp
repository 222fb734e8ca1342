#include <doctest.h>

#include <random>

#include "iwafitt/padic.hpp"
#include "iwafitt/series.hpp"
#include "iwafitt/specialization.hpp"
#include "iwafitt/weierstrass.hpp"

using namespace iwafitt;
using namespace iwafitt::ring;

namespace {

TruncatedSeries poly(const ModRing& R, int m, IntPoly f) { return TruncatedSeries::from_poly(R, m, f); }

TruncatedSeries random_series(std::mt19937_64& gen, const ModRing& R, int m) {
  TruncatedSeries s(R, m);
  for (int i = 0; i < m; ++i) s.set(i, bounded_draw(gen(), 0, R.modulus() - 1));
  return s;
}

}  // namespace

TEST_CASE("padic valuation") {
  CHECK(padic_valuation(PadicNumber(3, 9, 4)) == 2);
  CHECK(padic_valuation(PadicNumber(3, 0, 4)) == 4);
  CHECK(padic_valuation(PadicNumber(5, 7, 3)) == 0);
  CHECK(PadicNumber(3, -1, 2).value() == 8);
}

TEST_CASE("padic arithmetic and errors") {
  const PadicNumber a(5, 3, 4), b(5, 7, 4);
  CHECK((a * b).value() == 21);
  CHECK((a - b).value() == 625 - 4);
  CHECK((-a + a).is_zero());
  CHECK_THROWS_AS(a + PadicNumber(5, 1, 3), Error);
  CHECK_THROWS_AS(ModRing(2, 63), Error);
  const ModRing R(7, 5);
  CHECK(R.mul(R.inverse(3), 3) == 1);
  CHECK_THROWS_AS(R.inverse(14), Error);
}

TEST_CASE("series ring axioms") {
  std::mt19937_64 gen(11);
  for (const auto& R : {ModRing(3, 6), ModRing(5, 4), ModRing(2, 10)}) {
    for (int t = 0; t < 400; ++t) {
      const auto a = random_series(gen, R, 7), b = random_series(gen, R, 7), c = random_series(gen, R, 7);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a + b) - b == a);
    }
  }
}

TEST_CASE("unit inverse") {
  const ModRing R(3, 5);
  const auto u = poly(R, 6, {2, 1, 4});
  CHECK(u * u.inverse() == TruncatedSeries::constant(R, 6, 1));
  CHECK_THROWS_AS(poly(R, 6, {3, 1}).inverse(), Error);
}

TEST_CASE("weierstrass prepare examples") {
  const ModRing R(3, 8);
  SUBCASE("already distinguished") {
    const auto w = weierstrass_prepare(poly(R, 6, {3, 1}));
    CHECK(w.mu == 0);
    CHECK(w.dist == IntPoly{3, 1});
    CHECK(w.unit == TruncatedSeries::constant(w.unit.ring(), 6, 1));
  }
  SUBCASE("3T") {
    const auto w = weierstrass_prepare(poly(R, 6, {0, 3}));
    CHECK(w.mu == 1);
    CHECK(w.dist == IntPoly{0, 1});
    CHECK(w.valid_K == 7);
  }
  SUBCASE("(2+T)(T^2+3)") {
    const auto w = weierstrass_prepare(poly(R, 6, {6, 3, 2, 1}));
    CHECK(w.mu == 0);
    CHECK(w.dist == IntPoly{3, 0, 1});
    CHECK(w.unit == poly(R, 6, {2, 1}));
  }
  CHECK_THROWS_AS(weierstrass_prepare(TruncatedSeries(R, 4)), Error);
}

TEST_CASE("weierstrass round trip") {
  std::mt19937_64 gen(5);
  for (int t = 0; t < 200; ++t) {
    const i64 p = t % 2 ? 3 : 5;
    const ModRing R(p, 9);
    const int m = 10;
    const int mu = static_cast<int>(bounded_draw(gen(), 0, 3));
    const int d = static_cast<int>(bounded_draw(gen(), 0, 4));
    IntPoly P(static_cast<size_t>(d) + 1, 0);
    for (int i = 0; i < d; ++i) P[static_cast<size_t>(i)] = p * bounded_draw(gen(), 0, 50);
    P[static_cast<size_t>(d)] = 1;
    // a polynomial unit with deg P + deg U < m, so nothing is lost to truncation
    auto U = random_series(gen, R, m - d);
    U.set(0, bounded_draw(gen(), 1, p - 1) + p * bounded_draw(gen(), 0, 9));
    U = U.with_length(m);
    const auto f = (poly(R, m, P) * U).scaled(R.p_power(mu));
    const auto w = weierstrass_prepare(f);
    REQUIRE(w.mu == mu);
    const ModRing Rw(p, w.valid_K);
    IntPoly expect(P.size());
    for (size_t i = 0; i < P.size(); ++i) expect[i] = Rw.reduce(P[i]);
    CHECK(w.dist == expect);
    CHECK(w.unit == U.with_precision(w.valid_K));
    CHECK(w.recompose(R, m) == f);
  }
}

TEST_CASE("weierstrass divide examples") {
  const ModRing R(3, 8);
  SUBCASE("exact") {
    const auto q = weierstrass_divide(poly(R, 5, {3, 0, 1}), {3, 0, 1});
    CHECK(q.quotient == TruncatedSeries::constant(R, 5, 1));
    CHECK(q.remainder == IntPoly{0, 0});
  }
  SUBCASE("T^3 by T+3") {
    const auto q = weierstrass_divide(poly(R, 5, {0, 0, 0, 1}), {3, 1});
    CHECK(q.quotient == poly(R, 5, {9, -3, 1}));
    CHECK(q.remainder == IntPoly{R.reduce(-27)});
  }
  SUBCASE("zero") {
    const auto q = weierstrass_divide(TruncatedSeries(R, 5), {3, 1});
    CHECK(q.quotient.is_zero());
    CHECK(q.remainder == IntPoly{0});
  }
  CHECK_THROWS_AS(weierstrass_divide(poly(R, 5, {1}), {1, 1}), Error);
  CHECK_THROWS_AS(weierstrass_divide(poly(R, 3, {1}), {3, 0, 0, 1}), Error);
}

TEST_CASE("weierstrass divide recomposes") {
  std::mt19937_64 gen(9);
  const ModRing R(5, 7);
  for (int t = 0; t < 200; ++t) {
    const int m = 8;
    const auto f = random_series(gen, R, m);
    const int d = static_cast<int>(bounded_draw(gen(), 1, 4));
    IntPoly P(static_cast<size_t>(d) + 1, 0);
    for (int i = 0; i < d; ++i) P[static_cast<size_t>(i)] = 5 * bounded_draw(gen(), 0, 30);
    P[static_cast<size_t>(d)] = 1;
    const auto div = weierstrass_divide(f, P);
    const int L = m + d;
    const auto back = div.quotient.with_length(L) * poly(R, L, P) + poly(R, L, div.remainder);
    CHECK(back == f.with_length(L));
  }
}

TEST_CASE("specialization rings") {
  for (int j = 1; j <= 6; ++j) {
    const auto S = SpecializationRing::at_pi(3, j, 8);
    CHECK(S.valuation(S.from_integer(3)).value == j);
    CHECK(S.poly_valuation({0, 1}).value == 1);
    CHECK(S.poly_valuation(S.prime_generator()).value == S.valuation(S.from_integer(0)).value);
    const auto L = SpecializationRing::at_linear(3, 0, j, 10);
    CHECK(L.valuation(L.from_integer(3)).value == 1);
    CHECK(L.poly_valuation({0, 1}).value == j);
  }
  const auto S = SpecializationRing::at_pi(5, 4, 6);
  std::mt19937_64 gen(1);
  for (int t = 0; t < 200; ++t) {
    IntPoly a{bounded_draw(gen(), -50, 50), bounded_draw(gen(), -50, 50), bounded_draw(gen(), -50, 50)};
    IntPoly b{bounded_draw(gen(), -50, 50), bounded_draw(gen(), -50, 50)};
    const auto va = S.poly_valuation(a), vb = S.poly_valuation(b);
    const auto vab = S.valuation(S.mul(S.image(a), S.image(b)));
    if (va.exact() && vb.exact() && va.value + vb.value < vab.cap) CHECK(vab.value == va.value + vb.value);
  }
  CHECK_THROWS_AS(SpecializationRing::at_linear(3, 1, 2, 5), Error);
}
