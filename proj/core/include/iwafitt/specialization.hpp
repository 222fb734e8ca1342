#pragma once

#include <vector>

#include "iwafitt/series.hpp"

namespace iwafitt::ring {

/// A valuation together with the ceiling above which it is not resolved at the
/// working precision. value == cap means "at least cap".
struct CappedValuation {
  int value = 0;
  int cap = 0;
  bool exact() const noexcept { return value < cap; }
};

/// O_j = Lambda/P_j for the two supported families of height-one primes:
///  - P = (p):     P_j = (T^j + p), O_j = Z_p[x]/(x^j + p), x the image of T,
///                 totally ramified of degree j; valuations normalized so v(x) = 1.
///  - P = (T + c): P_j = (T + c + p^j), O_j = Z_p via T -> -c - p^j, v(p) = 1.
/// Elements are residue vectors: j coefficients mod p^K for (p), one for (T + c).
class SpecializationRing {
 public:
  enum class Kind { Pi, Linear };

  static SpecializationRing at_pi(i64 p, int j, int K);
  /// P = (T + c); c must be divisible by p.
  static SpecializationRing at_linear(i64 p, i64 c, int j, int K);

  Kind kind() const noexcept { return kind_; }
  int index() const noexcept { return j_; }
  const ModRing& coefficients() const noexcept { return ring_; }
  /// Ramification index of O_j over Z_p, i.e. v(p).
  int ramification() const noexcept { return kind_ == Kind::Pi ? j_ : 1; }
  /// Valuation of the image of T.
  int t_valuation() const noexcept;
  /// Generator of P_j as an exact polynomial.
  IntPoly prime_generator() const;

  using Element = std::vector<i64>;

  Element one() const;
  Element from_integer(i64 a) const;
  Element image(const IntPoly& f) const;
  Element image(const TruncatedSeries& f) const;
  Element mul(const Element& a, const Element& b) const;
  Element add(const Element& a, const Element& b) const;

  /// Valuation in O_j of an element known modulo p^K.
  CappedValuation valuation(const Element& a) const;
  /// Valuation of the image of an exact polynomial.
  CappedValuation poly_valuation(const IntPoly& f) const { return valuation(image(f)); }
  /// Valuation of the image of a truncated series; the T^m truncation also caps it.
  CappedValuation valuation(const TruncatedSeries& f) const;

 private:
  SpecializationRing(Kind kind, i64 c, int j, ModRing ring);

  Kind kind_;
  i64 c_;
  int j_;
  ModRing ring_;
  i64 t_image_ = 0;  // Linear only
};

}  // namespace iwafitt::ring
