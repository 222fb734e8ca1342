#include <doctest.h>

#include <random>

#include "iwafitt/c_ideal.hpp"
#include "iwafitt/lambda_ideal.hpp"
#include "iwafitt/lambda_module.hpp"

using namespace iwafitt;
using namespace iwafitt::lambda;

namespace {

const HeightOnePrime PI = HeightOnePrime::pi();
const HeightOnePrime T = HeightOnePrime::linear(0);

PseudoClass cls(std::vector<std::pair<HeightOnePrime, int>> e) { return PseudoClass(std::move(e)); }

LambdaIdealFactored random_ideal(std::mt19937_64& gen, const std::vector<HeightOnePrime>& basis) {
  const int n = static_cast<int>(ring::bounded_draw(gen(), 1, 3));
  std::vector<std::vector<int>> g;
  for (int i = 0; i < n; ++i) {
    std::vector<int> v;
    for (size_t b = 0; b < basis.size(); ++b) v.push_back(static_cast<int>(ring::bounded_draw(gen(), 0, 3)));
    g.push_back(v);
  }
  return LambdaIdealFactored(basis, g);
}

ElementaryLambdaModule module(std::vector<ElementaryLambdaModule::Component> c) {
  return ElementaryLambdaModule(std::move(c));
}

}  // namespace

TEST_CASE("prime names and validation") {
  CHECK(PI.name() == "PI");
  CHECK(T.name() == "T");
  CHECK(HeightOnePrime::linear(3).name() == "T+3");
  CHECK(HeightOnePrime::distinguished({3, 0, 1}).name() == "T^2+3");
  CHECK(check_irreducible(HeightOnePrime::distinguished({3, 0, 1}), 3) == IrreducibilityStatus::Verified);
  // T^2 - 9 = (T-3)(T+3)
  CHECK(check_irreducible(HeightOnePrime::distinguished({-9, 0, 1}), 3) == IrreducibilityStatus::Reducible);
  // T^2 + 9: discriminant -36 = -4 * 9, unit part -4 is a non-residue mod 3
  CHECK(check_irreducible(HeightOnePrime::distinguished({9, 0, 1}), 3) == IrreducibilityStatus::Verified);
  CHECK(check_irreducible(HeightOnePrime::distinguished({3, 0, 0, 1}), 3) == IrreducibilityStatus::Trusted);
  CHECK_THROWS_AS(validate_basis({HeightOnePrime::linear(1)}, 3), Error);
  CHECK_THROWS_AS(validate_basis({T, T}, 3), Error);
  CHECK_THROWS_AS(HeightOnePrime::distinguished({3, 2}), Error);
}

TEST_CASE("ord, prec and sim examples") {
  const LambdaIdealFactored I({PI, T}, {{2, 0}, {1, 1}});
  CHECK(ord_at_prime(I, PI) == 1);
  CHECK(ord_at_prime(I, T) == 0);
  const auto f = HeightOnePrime::linear(3);
  CHECK(ord_at_prime(LambdaIdealFactored({f}, {{1}}), f) == 1);
  const LambdaIdealFactored p({PI}, {{1}});
  const LambdaIdealFactored pT({PI, T}, {{1, 0}, {0, 1}});
  CHECK(prec_leq(p, pT));
  CHECK_FALSE(prec_leq(pT, p));
  CHECK(prec_leq(I, I));
  CHECK(sim(I, p));
  CHECK(class_of(I) == cls({{PI, 1}}));
  CHECK(class_of(LambdaIdealFactored({f}, {{1}})) == cls({{f, 1}}));
  const LambdaIdealFactored J({PI, T}, {{2, 2}, {3, 2}});
  CHECK(class_of(J) == cls({{PI, 2}, {T, 2}}));
  CHECK(pseudo_square_root(J) == cls({{PI, 1}, {T, 1}}));
  CHECK_THROWS_AS(pseudo_square_root(LambdaIdealFactored({PI, T}, {{1, 1}})), Error);
  CHECK(pseudo_square_root(LambdaIdealFactored::principal(cls({{PI, 1}, {T, 1}}).squared())) ==
        cls({{PI, 1}, {T, 1}}));
  CHECK_THROWS_AS(LambdaIdealFactored({PI}, {}), Error);
}

TEST_CASE("sim properties on random ideals") {
  std::mt19937_64 gen(3);
  const std::vector<HeightOnePrime> basis{PI, T, HeightOnePrime::linear(3)};
  for (int t = 0; t < 300; ++t) {
    const auto a = random_ideal(gen, basis), b = random_ideal(gen, basis), c = random_ideal(gen, basis);
    CHECK(sim(a, a));
    CHECK(sim(a, b) == sim(b, a));
    if (sim(a, b) && sim(b, c)) CHECK(sim(a, c));
    CHECK(sim(a, LambdaIdealFactored::principal(class_of(a))));
    CHECK(class_of(LambdaIdealFactored::principal(class_of(a))) == class_of(a));
    CHECK(pseudo_square_root(a * a) == class_of(a));
    const auto a2 = LambdaIdealFactored::principal(class_of(a));
    const auto b2 = LambdaIdealFactored::principal(class_of(b));
    CHECK(sim(a + b, a2 + b2));
    CHECK(sim(a * b, a2 * b2));
  }
}

TEST_CASE("factoring series over a basis") {
  const ring::ModRing R(3, 12);
  const int m = 12;
  const auto g = series_of(cls({{PI, 2}, {T, 1}, {HeightOnePrime::distinguished({3, 0, 1}), 2}}), R, m);
  const auto u = TruncatedSeries::from_poly(R, m, {2, 5, 7});
  const std::vector<HeightOnePrime> basis{PI, T, HeightOnePrime::distinguished({3, 0, 1}), HeightOnePrime::linear(3)};
  CHECK(factor_over_basis(g * u, basis) == std::vector<int>{2, 1, 2, 0});
  CHECK_THROWS_AS(factor_over_basis(g * u, {T, HeightOnePrime::distinguished({3, 0, 1})}), Error);
  CHECK_THROWS_AS(factor_over_basis(TruncatedSeries::from_poly(R, m, {6, 0, 1}), basis), Error);
}

TEST_CASE("elementary Fitting classes") {
  const auto E = module({{PI, {1, 2}}});
  CHECK(elementary_fitting_class(E, 1) == cls({{PI, 1}}));
  const auto F = module({{PI, {1, 2}}, {T, {0, 3}}});
  CHECK(elementary_fitting_class(F, 0) == cls({{PI, 3}, {T, 3}}));
  CHECK(elementary_fitting_class(F, 2).is_trivial());
  const auto Y = module({{PI, {1, 2}}}).doubled();
  CHECK(elementary_fitting_class(Y, 0) == cls({{PI, 6}}));
  CHECK(elementary_fitting_class(Y, 2) == cls({{PI, 2}}));
  CHECK(odd_from_even(cls({{PI, 6}}), cls({{PI, 2}})) == cls({{PI, 4}}));
  CHECK(elementary_fitting_class(Y, 1) == cls({{PI, 4}}));
  CHECK(odd_from_even({}, {}).is_trivial());
  CHECK(odd_from_even(cls({{T, 2}}), {}) == cls({{T, 1}}));
  CHECK_THROWS_AS(odd_from_even(cls({{T, 1}}), {}), Error);
}

TEST_CASE("even/odd law on random doubled modules") {
  std::mt19937_64 gen(8);
  for (int t = 0; t < 100; ++t) {
    std::vector<ElementaryLambdaModule::Component> c;
    for (const auto& P : {PI, T, HeightOnePrime::linear(3)}) {
      std::vector<int> e;
      const int n = static_cast<int>(ring::bounded_draw(gen(), 0, 3));
      for (int i = 0; i < n; ++i) e.push_back(static_cast<int>(ring::bounded_draw(gen(), 0, 4)));
      std::sort(e.begin(), e.end());
      c.push_back({P, e});
    }
    const auto Y = module(c).doubled();
    for (int i = 0; 2 * i + 2 <= Y.length(); ++i)
      CHECK(elementary_fitting_class(Y, 2 * i + 1) ==
            odd_from_even(elementary_fitting_class(Y, 2 * i), elementary_fitting_class(Y, 2 * i + 2)));
    for (int i = 1; i <= Y.length(); ++i) {
      const auto Fi = elementary_fitting_class(Y, i);
      for (const auto& [P, e] : Fi.entries()) CHECK(e <= elementary_fitting_class(Y, i - 1).exponent_at(P));
    }
  }
}

TEST_CASE("specialization examples") {
  for (int j = 3; j <= 8; ++j) {
    CHECK(specialize_elementary(module({{T, {2}}}), T, 3, j, 0).exponent == 2 * j);
    CHECK(specialize_elementary(module({{PI, {1}}}), PI, 3, j, 0).exponent == j);
    CHECK(specialize_elementary(module({{T, {1}}}), PI, 3, j, 0).exponent == 1);
  }
  CHECK_THROWS_AS(specialize_elementary(module({{T, {1}}}), HeightOnePrime::linear(1), 3, 2, 0), Error);
}

TEST_CASE("slope law and parity audit") {
  const auto E = module({{PI, {1, 2}}, {T, {1, 1}}, {HeightOnePrime::linear(3), {0, 2}}});
  for (const auto& P : {PI, T})
    for (int i = 0; i <= 2; ++i) {
      const auto r = slope_check(E, P, 3, i, 3, 10);
      CHECK(r.bounded);
    }
  auto family = [](const ElementaryLambdaModule& M) {
    std::map<int, fitting::ElementaryDVRModule> f;
    for (int j = 3; j <= 8; ++j) f[j] = specialize_elementary(M, PI, 3, j, 0).module;
    return f;
  };
  const auto sq = parity_audit(family(module({{PI, {1}}}).doubled()));
  CHECK(sq.ok);
  CHECK(sq.slopes == std::map<int, int>{{1, 2}});
  const auto sq2 = parity_audit(family(module({{PI, {1, 2}}}).doubled()));
  CHECK(sq2.ok);
  CHECK(sq2.slopes == std::map<int, int>{{1, 2}, {2, 2}});
  CHECK_FALSE(parity_audit(family(module({{PI, {1}}}))).ok);
}

TEST_CASE("C-ideal pipeline") {
  const auto M = module({{PI, {1}}, {T, {1}}});
  const auto fam = make_synthetic_family(M, 1, 3, 42);
  std::map<int, LambdaIdealFactored> C;
  for (int i = 0; i <= 2 * M.length(); i += 2) C.emplace(i, construct_C(fam.elements, i, fam.e, fam.basis));
  CHECK(class_of(C.at(0)) == cls({{PI, 1}, {T, 1}}));
  const auto report = highfitt_consistency(M.doubled(), C);
  CHECK(report.all_pass());
  CHECK(report.checks.at(1).observed == cls({{PI, 1}, {T, 1}}));

  const auto X = module({{PI, {1}}}).doubled();
  std::map<int, LambdaIdealFactored> C2{{0, LambdaIdealFactored({PI}, {{1}})},
                                        {2, LambdaIdealFactored({PI}, {{0}})}};
  CHECK(highfitt_consistency(X, C2).all_pass());
  CHECK(highfitt_consistency(ElementaryLambdaModule(), {{0, LambdaIdealFactored({}, {{}})}}).all_pass());
  CHECK_THROWS_AS(construct_C(fam.elements, 0, 0, fam.basis), Error);
}

TEST_CASE("stabilization index") {
  const ring::ModRing R(3, 10);
  auto family = [&](const TruncatedSeries& g, int k_hi) {
    std::map<int, std::vector<TruncatedSeries>> f;
    for (int k = 1; k <= k_hi; ++k) f[k] = {g.with_precision(k)};
    return f;
  };
  CHECK(stabilization_index(family(TruncatedSeries::constant(R, 4, 1), 5), T, 3, 3) == 1);
  CHECK(stabilization_index(family(TruncatedSeries::constant(R, 4, 81), 7), T, 3, 3) == 4);
  CHECK_THROWS_AS(stabilization_index(family(TruncatedSeries::constant(R, 4, 81), 4), T, 3, 3), Error);
}
