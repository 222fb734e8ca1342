#include "iwafitt/specialization.hpp"

#include <algorithm>

namespace iwafitt::ring {

SpecializationRing::SpecializationRing(Kind kind, i64 c, int j, ModRing ring)
    : kind_(kind), c_(c), j_(j), ring_(ring) {
  if (j < 1) fail(ErrorCode::InputError, "specialization index j must be >= 1");
  if (kind_ == Kind::Linear) t_image_ = ring_.neg(ring_.add(ring_.reduce(c_), ring_.p_power(j_)));
}

SpecializationRing SpecializationRing::at_pi(i64 p, int j, int K) {
  return SpecializationRing(Kind::Pi, 0, j, ModRing(p, K));
}

SpecializationRing SpecializationRing::at_linear(i64 p, i64 c, int j, int K) {
  if (c % p != 0) fail(ErrorCode::InputError, "T + c is distinguished only when p | c");
  return SpecializationRing(Kind::Linear, c, j, ModRing(p, K));
}

int SpecializationRing::t_valuation() const noexcept {
  return kind_ == Kind::Pi ? 1 : ring_.valuation(t_image_);
}

IntPoly SpecializationRing::prime_generator() const {
  const i64 pj = ipow_checked(ring_.p(), j_);
  if (kind_ == Kind::Pi) {
    IntPoly g(static_cast<size_t>(j_) + 1, 0);
    g[0] = ring_.p();
    g[static_cast<size_t>(j_)] = 1;
    return g;
  }
  return IntPoly{c_ + pj, 1};
}

SpecializationRing::Element SpecializationRing::one() const { return from_integer(1); }

SpecializationRing::Element SpecializationRing::from_integer(i64 a) const {
  Element e(kind_ == Kind::Pi ? static_cast<size_t>(j_) : 1, 0);
  e[0] = ring_.reduce(a);
  return e;
}

SpecializationRing::Element SpecializationRing::add(const Element& a, const Element& b) const {
  Element r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = ring_.add(a[i], b[i]);
  return r;
}

SpecializationRing::Element SpecializationRing::mul(const Element& a, const Element& b) const {
  if (kind_ == Kind::Linear) return {ring_.mul(a[0], b[0])};
  const size_t n = static_cast<size_t>(j_);
  const i64 minus_p = ring_.neg(ring_.reduce(ring_.p()));
  Element r(n, 0);
  for (size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (size_t k = 0; k < n; ++k) {
      const i64 t = ring_.mul(a[i], b[k]);
      if (i + k < n)
        r[i + k] = ring_.add(r[i + k], t);
      else  // x^j = -p
        r[i + k - n] = ring_.add(r[i + k - n], ring_.mul(t, minus_p));
    }
  }
  return r;
}

SpecializationRing::Element SpecializationRing::image(const IntPoly& f) const {
  Element acc = from_integer(0);
  Element x = kind_ == Kind::Linear ? Element{t_image_} : from_integer(0);
  if (kind_ == Kind::Pi) {
    if (j_ == 1)
      x[0] = ring_.neg(ring_.reduce(ring_.p()));
    else
      x[1] = 1;
  }
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    acc = add(mul(acc, x), from_integer(f[static_cast<size_t>(i)]));
  return acc;
}

SpecializationRing::Element SpecializationRing::image(const TruncatedSeries& f) const {
  if (f.p() != ring_.p()) fail(ErrorCode::RingMismatch, "series and O_j over different primes");
  IntPoly coeffs(f.coeffs().begin(), f.coeffs().end());
  // Only the residues mod p^min(K_f, K) are meaningful.
  const int K_eff = std::min(f.K(), ring_.K());
  if (K_eff < ring_.K()) {
    const ModRing coarse(ring_.p(), K_eff);
    for (auto& c : coeffs) c = coarse.reduce(c);
  }
  return image(coeffs);
}

CappedValuation SpecializationRing::valuation(const Element& a) const {
  if (kind_ == Kind::Linear) return {ring_.valuation(a[0]), ring_.K()};
  const int cap = j_ * ring_.K();
  int v = cap;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    v = std::min(v, j_ * ring_.valuation(a[i]) + static_cast<int>(i));
  }
  return {v, cap};
}

CappedValuation SpecializationRing::valuation(const TruncatedSeries& f) const {
  const auto img = image(f);
  CappedValuation v = valuation(img);
  const int K_eff = std::min(f.K(), ring_.K());
  const int cap = std::min({v.cap, K_eff * ramification(), f.m() * t_valuation()});
  v.cap = cap;
  v.value = std::min(v.value, cap);
  return v;
}

}  // namespace iwafitt::ring
