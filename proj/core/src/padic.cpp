#include "iwafitt/padic.hpp"

#include <limits>

namespace iwafitt::ring {

namespace {
constexpr i64 kModulusCeiling = i64{1} << 62;
}

i64 ipow_checked(i64 p, int k) {
  if (p < 2) fail(ErrorCode::InputError, "prime must be >= 2, got " + std::to_string(p));
  if (k < 0) fail(ErrorCode::InputError, "negative exponent");
  i64 r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > kModulusCeiling / p)
      fail(ErrorCode::PrecisionOverflow,
           std::to_string(p) + "^" + std::to_string(k) + " exceeds the 62-bit modulus budget");
    r *= p;
  }
  return r;
}

int integer_valuation(i64 p, i64 x) {
  if (x == 0) return std::numeric_limits<int>::max();
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

ModRing::ModRing(i64 p, int K) : p_(p), K_(K), mod_(0) {
  if (K < 1) fail(ErrorCode::InputError, "precision K must be >= 1");
  mod_ = ipow_checked(p, K);
}

int ModRing::valuation(i64 x) const noexcept {
  x = reduce(x);
  if (x == 0) return K_;
  int v = 0;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return v;
}

i64 ModRing::inverse(i64 unit) const {
  unit = reduce(unit);
  if (unit % p_ == 0) fail(ErrorCode::InsufficientPrecision, "inverse of a non-unit mod p^K");
  // extended Euclid on (unit, mod)
  __int128 old_r = unit, r = mod_, old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return reduce(static_cast<i64>(old_s % mod_));
}

i64 ModRing::pow(i64 base, std::uint64_t e) const noexcept {
  i64 result = reduce(1);
  base = reduce(base);
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

i64 ModRing::p_power(int v) const {
  if (v >= K_) return 0;
  return ipow_checked(p_, v);
}

i64 ModRing::divide_by_p_power(i64 x, int v) const {
  x = reduce(x);
  if (v == 0) return x;
  const i64 pv = ipow_checked(p_, v);
  if (x % pv != 0) fail(ErrorCode::InputError, "element not divisible by p^" + std::to_string(v));
  return x / pv;
}

PadicNumber::PadicNumber(i64 p, i64 value, int K) : p_(p), value_(0), K_(K) {
  value_ = ModRing(p, K).reduce(value);
}

int PadicNumber::valuation() const noexcept { return ModRing(p_, K_).valuation(value_); }

void PadicNumber::check_compatible(const PadicNumber& o) const {
  if (p_ != o.p_ || K_ != o.K_)
    fail(ErrorCode::RingMismatch, "p-adic operands at different (p, K): " + to_string() + " vs " +
                                      o.to_string());
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
  check_compatible(o);
  return {p_, ModRing(p_, K_).add(value_, o.value_), K_};
}

PadicNumber PadicNumber::operator-(const PadicNumber& o) const {
  check_compatible(o);
  return {p_, ModRing(p_, K_).sub(value_, o.value_), K_};
}

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
  check_compatible(o);
  return {p_, ModRing(p_, K_).mul(value_, o.value_), K_};
}

PadicNumber PadicNumber::operator-() const { return {p_, ModRing(p_, K_).neg(value_), K_}; }

PadicNumber PadicNumber::truncate(int K_new) const {
  if (K_new > K_) fail(ErrorCode::InsufficientPrecision, "cannot raise precision by truncation");
  return {p_, value_, K_new};
}

std::string PadicNumber::to_string() const {
  return std::to_string(value_) + " mod " + std::to_string(p_) + "^" + std::to_string(K_);
}

int padic_valuation(const PadicNumber& x) { return x.valuation(); }

}  // namespace iwafitt::ring
