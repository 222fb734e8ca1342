#pragma once

#include <cstdint>
#include <compare>
#include <string>

#include "iwafitt/error.hpp"

namespace iwafitt::ring {

using i64 = std::int64_t;

/// p^k as a 64-bit integer; throws PrecisionOverflow past 2^62.
i64 ipow_checked(i64 p, int k);

/// v_p of a nonzero integer (sign ignored).
int integer_valuation(i64 p, i64 x);

/// The residue ring Z/p^K. All arithmetic goes through 128-bit products, so
/// p^K must stay below 2^62.
class ModRing {
 public:
  ModRing(i64 p, int K);

  i64 p() const noexcept { return p_; }
  int K() const noexcept { return K_; }
  i64 modulus() const noexcept { return mod_; }

  i64 reduce(i64 x) const noexcept {
    i64 r = x % mod_;
    return r < 0 ? r + mod_ : r;
  }
  i64 add(i64 a, i64 b) const noexcept {
    i64 s = a + b;
    return s >= mod_ ? s - mod_ : s;
  }
  i64 sub(i64 a, i64 b) const noexcept {
    i64 s = a - b;
    return s < 0 ? s + mod_ : s;
  }
  i64 neg(i64 a) const noexcept { return a == 0 ? 0 : mod_ - a; }
  i64 mul(i64 a, i64 b) const noexcept {
    return static_cast<i64>((static_cast<__int128>(a) * b) % mod_);
  }

  /// Largest v <= K with p^v | x; v = K exactly when x = 0.
  int valuation(i64 x) const noexcept;
  bool is_unit(i64 x) const noexcept { return x % p_ != 0; }
  /// Inverse of a unit; InsufficientPrecision for non-units.
  i64 inverse(i64 unit) const;
  i64 pow(i64 base, std::uint64_t e) const noexcept;
  i64 p_power(int v) const;

  /// x / p^v for x divisible by p^v as a canonical representative; the result
  /// is meaningful modulo p^{K-v}.
  i64 divide_by_p_power(i64 x, int v) const;

  friend bool operator==(const ModRing&, const ModRing&) = default;

 private:
  i64 p_;
  int K_;
  i64 mod_;
};

/// An element of Z/p^K viewed as a p-adic approximation.
class PadicNumber {
 public:
  PadicNumber(i64 p, i64 value, int K);

  i64 p() const noexcept { return p_; }
  i64 value() const noexcept { return value_; }
  int precision() const noexcept { return K_; }

  /// In [0, K]; the zero element reports K.
  int valuation() const noexcept;
  bool is_zero() const noexcept { return value_ == 0; }

  PadicNumber operator+(const PadicNumber& o) const;
  PadicNumber operator-(const PadicNumber& o) const;
  PadicNumber operator*(const PadicNumber& o) const;
  PadicNumber operator-() const;

  /// Reduce to a coarser precision K' <= K.
  PadicNumber truncate(int K_new) const;

  friend bool operator==(const PadicNumber&, const PadicNumber&) = default;

  std::string to_string() const;

 private:
  void check_compatible(const PadicNumber& o) const;

  i64 p_;
  i64 value_;
  int K_;
};

int padic_valuation(const PadicNumber& x);

/// Uniform draw in [lo, hi] from a 64-bit word. Used instead of
/// std::uniform_int_distribution so seeded output is identical across standard
/// libraries.
inline i64 bounded_draw(std::uint64_t word, i64 lo, i64 hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<i64>(word % span);
}

}  // namespace iwafitt::ring
