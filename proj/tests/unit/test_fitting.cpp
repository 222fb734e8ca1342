#include <doctest.h>

#include <random>

#include "iwafitt/fitting.hpp"
#include "iwafitt/smith.hpp"

using namespace iwafitt;
using namespace iwafitt::fitting;

namespace {

RingDescriptor dvr(i64 p, int K) { return {RingKind::Dvr, p, K, 1}; }

PresentationMatrix random_matrix(std::mt19937_64& gen, RingDescriptor ring, int rows, int cols) {
  const ModRing R = ring.coefficients();
  std::vector<i64> e;
  for (int i = 0; i < rows * cols; ++i) {
    const int v = static_cast<int>(ring::bounded_draw(gen(), 0, 4));
    const i64 u = ring::bounded_draw(gen(), 1, ring.p - 1);
    e.push_back(ring::bounded_draw(gen(), 0, 5) == 0 ? 0 : R.mul(u, R.p_power(v)));
  }
  return PresentationMatrix::scalar(ring, rows, cols, std::move(e));
}

}  // namespace

TEST_CASE("Fitting ideals of diagonal matrices") {
  const auto M = PresentationMatrix::diagonal(dvr(3, 12), {1, 2, 3});
  CHECK(fitting_exponents(M) == std::vector<int>{6, 3, 1, 0});
  CHECK(fitting_ideal(M, 1).exponent == 3);
  CHECK(fitting_ideal(M, 5).is_unit_ideal());
  const auto one = PresentationMatrix::diagonal(dvr(5, 10), {4});
  CHECK(fitting_ideal(one, 0).exponent == 4);
  CHECK(fitting_ideal(one, 1).is_unit_ideal());
  const auto empty = PresentationMatrix::scalar(dvr(3, 5), 0, 0, {});
  CHECK(fitting_ideal(empty, 0).is_unit_ideal());
  CHECK_THROWS_AS(fitting_ideal(M, -1), Error);
}

TEST_CASE("free summand gives the zero ideal") {
  const auto M = PresentationMatrix::scalar(dvr(3, 6), 2, 1, {3, 0});
  CHECK(fitting_ideal(M, 0).is_zero_ideal());
  CHECK(fitting_ideal(M, 1).exponent == 1);
  CHECK_THROWS_AS(dvr_structure(M), Error);
  CHECK(dvr_structure(M, true).exponents == std::vector<int>{1, 6});
}

TEST_CASE("Smith normal form examples") {
  const auto R = dvr(3, 10);
  const auto a = PresentationMatrix::scalar(R, 2, 2, {9, 0, 0, 3});
  CHECK(smith_normal_form(a).exponents == std::vector<int>{1, 2});
  const auto b = PresentationMatrix::scalar(R, 2, 2, {3, 3, 3, 9});
  const auto sb = smith_normal_form(b);
  // det = 27 - 9 has valuation 2 and the entry gcd has valuation 1
  CHECK(sb.exponents == std::vector<int>{1, 1});
  CHECK(sb.verify(b));
  CHECK(dvr_structure(b).exponents == std::vector<int>{1, 1});
  CHECK(smith_normal_form(PresentationMatrix::scalar(R, 2, 2, {1, 0, 0, 3})).exponents == std::vector<int>{0, 1});
  CHECK(dvr_structure(PresentationMatrix::diagonal(R, {1, 2, 3})).exponents == std::vector<int>{1, 2, 3});
}

TEST_CASE("structure formulas") {
  const auto E = ElementaryDVRModule::from_exponents({3, 1, 2});
  CHECK(fitting_from_structure(E, 0) == 6);
  CHECK(fitting_from_structure(E, 1) == 3);
  CHECK(fitting_from_structure(E, 2) == 1);
  CHECK(fitting_from_structure(E, 3) == 0);
  CHECK(fitting_from_structure(ElementaryDVRModule::from_exponents({1, 1, 2, 2}), 1) == 4);
  CHECK(fitting_from_structure(ElementaryDVRModule::from_exponents({7}), 0) == 7);
  const auto a = ElementaryDVRModule::from_exponents({1}), b = ElementaryDVRModule::from_exponents({2});
  CHECK(direct_sum_fitting(a, b, 1) == 1);
  CHECK(direct_sum_fitting({}, b, 0) == 2);
  const auto c = ElementaryDVRModule::from_exponents({1, 1});
  CHECK(direct_sum_fitting(c, c, 2) == 2);
  CHECK(fitting_from_structure(ElementaryDVRModule::from_exponents({1, 1, 2, 2}), 1) ==
        fitting_from_structure(ElementaryDVRModule::from_exponents({2, 2, 1, 1}), 1));
}

TEST_CASE("minors agree with Smith normal form") {
  std::mt19937_64 gen(2024);
  for (int t = 0; t < 150; ++t) {
    const i64 p = std::array<i64, 3>{3, 5, 7}[t % 3];
    const auto ring = dvr(p, 12);
    const int n = static_cast<int>(ring::bounded_draw(gen(), 1, 6));
    const int k = static_cast<int>(ring::bounded_draw(gen(), n, 6));
    const auto M = random_matrix(gen, ring, n, k);
    const auto snf = smith_normal_form(M);
    REQUIRE(snf.verify(M));
    const auto E = dvr_structure(M, true);
    const auto ex = fitting_exponents(M);
    for (int i = 0; i <= n; ++i) {
      CHECK(ex[static_cast<size_t>(i)] == std::min(12, fitting_from_structure(E, i)));
      if (i > 0) CHECK(ex[static_cast<size_t>(i)] <= ex[static_cast<size_t>(i - 1)]);
    }
  }
}

TEST_CASE("Fitting properties") {
  std::mt19937_64 gen(77);
  for (int t = 0; t < 100; ++t) {
    const auto ring = dvr(5, 10);
    const int n = static_cast<int>(ring::bounded_draw(gen(), 1, 4));
    const auto M = random_matrix(gen, ring, n, n + 1);
    const auto base = fitting_exponents(M);
    // base change to a smaller precision
    const int K2 = static_cast<int>(ring::bounded_draw(gen(), 1, 9));
    const auto low = fitting_exponents(M.reduced(K2));
    for (int i = 0; i <= n; ++i) CHECK(low[static_cast<size_t>(i)] == std::min(K2, base[static_cast<size_t>(i)]));
    // more relations never shrink the ideal
    const auto more = fitting_exponents(M.with_columns(random_matrix(gen, ring, n, 2)));
    for (int i = 0; i <= n; ++i) CHECK(more[static_cast<size_t>(i)] <= base[static_cast<size_t>(i)]);
    // R^2 -> N -> B -> 0 with B the cokernel after two extra relations: Fitt_j(B) inside Fitt_{2+j}(N)
    for (int j = 0; j + 2 <= n; ++j) CHECK(more[static_cast<size_t>(j)] >= base[static_cast<size_t>(j + 2)]);
    // direct sum
    const auto N = random_matrix(gen, ring, 2, 3);
    const auto sum = fitting_exponents(M.direct_sum(N));
    const auto E1 = dvr_structure(M, true), E2 = dvr_structure(N, true);
    for (int i = 0; i <= n + 2; ++i) CHECK(sum[static_cast<size_t>(i)] == std::min(10, direct_sum_fitting(E1, E2, i)));
  }
  // Fitt_0(R/I) = I
  for (int a = 0; a <= 6; ++a) CHECK(fitting_ideal(PresentationMatrix::diagonal(dvr(7, 6), {a}), 0).exponent == a);
}

TEST_CASE("Fitting ideal over truncated Lambda") {
  const RingDescriptor L{RingKind::Lambda, 3, 6, 5};
  const ModRing R = L.coefficients();
  using S = TruncatedSeries;
  const auto M = PresentationMatrix::lambda(
      L, 2, 2, {S::constant(R, 5, 3), S::monomial(R, 5, 1), S::constant(R, 5, 0), S::constant(R, 5, 3)});
  const auto f0 = fitting_ideal(M, 0);
  REQUIRE(f0.generators.size() == 1);
  CHECK(f0.generators[0] == S::constant(R, 5, 9));
  const auto f1 = fitting_ideal(M, 1);
  CHECK(f1.generators.size() == 2);
  CHECK_FALSE(f1.is_unit_ideal());
  const auto U = PresentationMatrix::lambda(L, 1, 1, {S::from_poly(R, 5, {1, 1})});
  CHECK(fitting_ideal(U, 0).is_unit_ideal());
}
