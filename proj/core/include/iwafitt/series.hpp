#pragma once

#include <span>
#include <string>
#include <vector>

#include "iwafitt/padic.hpp"

namespace iwafitt::ring {

/// Exact polynomial with integer coefficients, ascending degree.
using IntPoly = std::vector<i64>;

int degree(const IntPoly& f);
/// Monic, every non-leading coefficient divisible by p.
bool is_distinguished(const IntPoly& f, i64 p);
std::string poly_to_string(const IntPoly& f, const char* var = "T");

/// An element of Lambda/(p^K, T^m): m coefficients in Z/p^K.
class TruncatedSeries {
 public:
  TruncatedSeries(ModRing ring, int m);
  TruncatedSeries(ModRing ring, int m, std::span<const i64> coeffs);

  static TruncatedSeries constant(ModRing ring, int m, i64 c);
  static TruncatedSeries monomial(ModRing ring, int m, int degree, i64 c = 1);
  static TruncatedSeries from_poly(ModRing ring, int m, const IntPoly& f);

  const ModRing& ring() const noexcept { return ring_; }
  i64 p() const noexcept { return ring_.p(); }
  int K() const noexcept { return ring_.K(); }
  int m() const noexcept { return static_cast<int>(coeffs_.size()); }

  const std::vector<i64>& coeffs() const noexcept { return coeffs_; }
  i64 operator[](int i) const { return coeffs_.at(static_cast<size_t>(i)); }
  void set(int i, i64 v) { coeffs_.at(static_cast<size_t>(i)) = ring_.reduce(v); }

  bool is_zero() const noexcept;
  /// Constant term is a unit of Z_p.
  bool is_unit() const noexcept { return ring_.is_unit(coeffs_.front()); }
  /// Minimum coefficient valuation (the mu-invariant at this precision); K for zero.
  int mu() const noexcept;
  /// Index of the first unit coefficient, or -1.
  int first_unit_index() const noexcept;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator-() const;
  TruncatedSeries scaled(i64 c) const;

  /// Multiplicative inverse of a unit series.
  TruncatedSeries inverse() const;

  /// Reinterpret at another truncation degree (zero-extending or cutting).
  TruncatedSeries with_length(int m_new) const;
  /// Reduce to a coarser p-adic precision.
  TruncatedSeries with_precision(int K_new) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  void check_compatible(const TruncatedSeries& o) const;

  ModRing ring_;
  std::vector<i64> coeffs_;
};

}  // namespace iwafitt::ring
