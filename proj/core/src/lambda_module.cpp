#include "iwafitt/lambda_module.hpp"

#include <algorithm>

namespace iwafitt::lambda {

ElementaryLambdaModule::ElementaryLambdaModule(std::vector<Component> components) {
  for (auto& c : components) {
    if (!std::is_sorted(c.exponents.begin(), c.exponents.end()))
      fail(ErrorCode::InputError, "exponent list at " + c.prime.name() + " is not non-decreasing");
    for (int k : c.exponents)
      if (k < 0) fail(ErrorCode::InputError, "negative exponent at " + c.prime.name());
    for (const auto& d : components_)
      if (d.prime == c.prime) fail(ErrorCode::InputError, "prime " + c.prime.name() + " listed twice");
    components_.push_back(std::move(c));
  }
}

int ElementaryLambdaModule::length() const noexcept {
  size_t n = 0;
  for (const auto& c : components_) n = std::max(n, c.exponents.size());
  return static_cast<int>(n);
}

std::vector<int> ElementaryLambdaModule::padded(const HeightOnePrime& P) const {
  std::vector<int> out(static_cast<size_t>(length()), 0);
  for (const auto& c : components_)
    if (c.prime == P) std::copy(c.exponents.begin(), c.exponents.end(), out.end() - static_cast<long>(c.exponents.size()));
  return out;
}

ElementaryLambdaModule ElementaryLambdaModule::doubled() const {
  std::vector<Component> out;
  for (const auto& c : components_) {
    std::vector<int> e;
    for (int k : c.exponents) {
      e.push_back(k);
      e.push_back(k);
    }
    out.push_back({c.prime, std::move(e)});
  }
  return ElementaryLambdaModule(std::move(out));
}

PseudoClass elementary_fitting_class(const ElementaryLambdaModule& E, int i) {
  if (i < 0) fail(ErrorCode::InputError, "Fitting index must be non-negative");
  const int ell = E.length();
  std::vector<std::pair<HeightOnePrime, int>> entries;
  for (const auto& c : E.components()) {
    const auto k = E.padded(c.prime);
    int sum = 0;
    for (int t = 0; t < ell - i; ++t) sum += k[static_cast<size_t>(t)];
    entries.emplace_back(c.prime, sum);
  }
  return PseudoClass(std::move(entries));
}

PseudoClass odd_from_even(const PseudoClass& F_even, const PseudoClass& F_next_even) {
  return (F_even * F_next_even).halved();
}

ring::SpecializationRing specialization_ring(const HeightOnePrime& P, i64 p, int j) {
  if (!P.is_pi() && !(P.is_linear() && P.poly()[0] % p == 0))
    fail(ErrorCode::InputError, "specialization is supported at (p) and at T + c with p | c only");
  // largest K with p^K < 2^62
  int K_max = 0;
  for (__int128 q = p; q < (static_cast<__int128>(1) << 62); q *= p) ++K_max;
  const int K = std::min(K_max, j + 12);
  if (!P.is_pi() && K <= j)
    fail(ErrorCode::PrecisionOverflow, "index j = " + std::to_string(j) + " too large for p = " + std::to_string(p));
  return P.is_pi() ? ring::SpecializationRing::at_pi(p, j, K)
                   : ring::SpecializationRing::at_linear(p, P.poly()[0], j, K);
}

namespace {

// valuation of s_j(Q) in O_j
int image_valuation(const ring::SpecializationRing& S, const HeightOnePrime& Q) {
  const ring::CappedValuation v =
      Q.is_pi() ? S.valuation(S.from_integer(S.coefficients().p())) : S.poly_valuation(Q.poly());
  if (!v.exact())
    fail(ErrorCode::SupportCollision,
         "image of " + Q.name() + " vanishes at working precision in O_" + std::to_string(S.index()));
  return v.value;
}

}  // namespace

SpecializedModule specialize_elementary(const ElementaryLambdaModule& E, const HeightOnePrime& P,
                                        i64 p, int j, int i) {
  const auto S = specialization_ring(P, p, j);
  std::vector<int> exps;
  for (const auto& c : E.components()) {
    const int v = image_valuation(S, c.prime);
    for (int k : c.exponents) exps.push_back(k * v);
  }
  SpecializedModule out;
  out.module = fitting::ElementaryDVRModule::from_exponents(std::move(exps));
  out.exponent = fitting::fitting_from_structure(out.module, i);
  out.precision = S.coefficients().K();
  return out;
}

SlopeReport slope_check(const ElementaryLambdaModule& E, const HeightOnePrime& P, i64 p, int i,
                        int j_lo, int j_hi) {
  if (j_lo < 1 || j_hi < j_lo) fail(ErrorCode::InputError, "empty specialization window");
  SlopeReport r;
  r.m = elementary_fitting_class(E, i).exponent_at(P);
  r.e_P = 1;
  int first_bound = -1;
  for (int j = j_lo; j <= j_hi; ++j) {
    const auto S = specialization_ring(P, p, j);
    int away = 0;
    for (const auto& c : E.components()) {
      if (c.prime == P) continue;
      const int v = image_valuation(S, c.prime);
      for (int k : c.exponents) away += k * v;
    }
    if (first_bound < 0) first_bound = away;
    if (away != first_bound) r.bounded = false;
    const int mj = specialize_elementary(E, P, p, j, i).exponent;
    r.values.emplace_back(j, mj);
    const int dev = mj - r.m * r.e_P * j;
    if (dev < 0 || dev > first_bound) r.bounded = false;
  }
  r.bound = first_bound;
  return r;
}

ParityReport parity_audit(const std::map<int, fitting::ElementaryDVRModule>& family) {
  ParityReport r;
  if (family.size() < 2) {
    r.ok = false;
    r.linear = false;
    return r;
  }
  const auto last = std::prev(family.end());
  const auto before = std::prev(last);
  const auto& a = before->second.exponents;
  const auto& b = last->second.exponents;
  const int dj = last->first - before->first;
  if (a.size() != b.size()) {
    r.linear = false;
    return r;
  }
  for (size_t t = 0; t < a.size(); ++t) {
    const int diff = b[t] - a[t];
    if (diff % dj != 0) {
      r.linear = false;
      return r;
    }
    if (diff > 0) ++r.slopes[diff / dj];
  }
  r.ok = std::all_of(r.slopes.begin(), r.slopes.end(), [](const auto& kv) { return kv.second % 2 == 0; });
  return r;
}

}  // namespace iwafitt::lambda
