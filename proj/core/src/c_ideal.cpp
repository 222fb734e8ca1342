#include "iwafitt/c_ideal.hpp"

#include <algorithm>
#include <random>

#include "iwafitt/euler.hpp"

namespace iwafitt::lambda {

namespace {

LambdaIdealFactored filtered(const std::vector<WeightedSeries>& elements, int max_nu,
                             const std::vector<HeightOnePrime>& basis) {
  std::vector<TruncatedSeries> gens;
  for (const auto& w : elements)
    if (w.nu <= max_nu) gens.push_back(w.value);
  if (gens.empty())
    fail(ErrorCode::InputError, "no generators of weight <= " + std::to_string(max_nu));
  return ideal_from_series(gens, basis);
}

}  // namespace

LambdaIdealFactored construct_C(const std::vector<WeightedSeries>& elements, int i, int e,
                                const std::vector<HeightOnePrime>& basis) {
  if (i < 0) fail(ErrorCode::InputError, "index i must be non-negative");
  return filtered(elements, i + e, basis);
}

LambdaIdealFactored construct_D(const std::vector<WeightedSeries>& values, int i,
                                const std::vector<HeightOnePrime>& basis) {
  if (i < 0) fail(ErrorCode::InputError, "index i must be non-negative");
  return filtered(values, i, basis);
}

ring::CappedValuation specialized_ord(const std::vector<TruncatedSeries>& gens, const HeightOnePrime& P,
                                      i64 p, int j) {
  if (gens.empty()) fail(ErrorCode::InputError, "no generators");
  const auto S = specialization_ring(P, p, j);
  ring::CappedValuation best{S.coefficients().K() * S.ramification(), S.coefficients().K() * S.ramification()};
  for (const auto& g : gens) {
    const auto v = S.valuation(g);
    best.value = std::min(best.value, v.value);
    best.cap = std::min(best.cap, v.cap);
  }
  return best;
}

int stabilization_index(const std::map<int, std::vector<TruncatedSeries>>& family, const HeightOnePrime& P,
                        i64 p, int j) {
  std::vector<int> ords;
  std::vector<int> ks;
  for (const auto& [k, gens] : family) {
    ks.push_back(k);
    ords.push_back(specialized_ord(gens, P, p, j).value);
  }
  return ks[euler::stabilization_start(ords)];
}

SyntheticFamily make_synthetic_family(const ElementaryLambdaModule& M, int e, i64 p, std::uint64_t seed) {
  if (e != 0 && e != 1) fail(ErrorCode::InputError, "parity e must be 0 or 1");
  SyntheticFamily out;
  out.M = M;
  out.e = e;
  std::vector<HeightOnePrime> primes{HeightOnePrime::pi(), HeightOnePrime::linear(0)};
  for (const auto& c : M.components()) primes.push_back(c.prime);
  out.basis = merge_bases({}, primes);
  validate_basis(out.basis, p);

  const PseudoClass top = elementary_fitting_class(M, 0);
  int deg = 1, mu = 1;
  for (const auto& [P, k] : top.entries()) {
    if (P.is_pi())
      mu += k;
    else
      deg += k * P.degree();
  }
  int K_max = 0;
  for (__int128 q = p; q < (static_cast<__int128>(1) << 62); q *= p) ++K_max;
  out.K = std::min(K_max, std::max(16, mu + 12));
  out.m = deg + 4;
  if (mu + 2 >= out.K) fail(ErrorCode::PrecisionOverflow, "hidden classes too deep for p = " + std::to_string(p));

  const ring::ModRing R(p, out.K);
  std::mt19937_64 gen(seed);
  auto unit = [&] {
    std::vector<i64> c(4);
    c[0] = ring::bounded_draw(gen(), 1, p - 1);
    for (size_t t = 1; t < c.size(); ++t) c[t] = ring::bounded_draw(gen(), 0, R.modulus() - 1);
    return TruncatedSeries::from_poly(R, out.m, c);
  };
  const auto p_series = TruncatedSeries::constant(R, out.m, p);
  const auto t_series = TruncatedSeries::monomial(R, out.m, 1);
  for (int s = 0; s <= M.length(); ++s) {
    const auto g = series_of(elementary_fitting_class(M, s), R, out.m);
    const int weight = 2 * s + e;
    out.elements.push_back({weight, g * p_series * unit()});
    out.elements.push_back({weight, g * t_series * unit()});
  }
  return out;
}

bool ConsistencyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ClassCheck& c) { return c.pass; });
}

ConsistencyReport highfitt_consistency(const ElementaryLambdaModule& X,
                                       const std::map<int, LambdaIdealFactored>& C) {
  ConsistencyReport r;
  const int ell = X.length();
  auto lookup = [&](int i) -> const LambdaIdealFactored* {
    auto it = C.find(i);
    return it == C.end() ? nullptr : &it->second;
  };
  for (int i = 0; i <= ell; ++i) {
    ClassCheck c;
    c.i = i;
    c.expected = elementary_fitting_class(X, i);
    if (i % 2 == 0) {
      c.rule = "even";
      const auto* Ci = lookup(i);
      if (Ci) {
        c.observed = class_of(*Ci).squared();
        c.pass = c.observed == c.expected;
      }
    } else {
      c.rule = "odd";
      const auto* lo = lookup(i - 1);
      const auto* hi = lookup(i + 1);
      if (lo && hi) {
        c.observed = class_of(*lo * *hi);
        bool agrees = false;
        try {
          agrees = odd_from_even(elementary_fitting_class(X, i - 1), elementary_fitting_class(X, i + 1)) ==
                   c.expected;
        } catch (const Error&) {
        }
        c.pass = agrees && c.observed == c.expected;
      }
    }
    r.checks.push_back(std::move(c));
  }
  return r;
}

}  // namespace iwafitt::lambda
