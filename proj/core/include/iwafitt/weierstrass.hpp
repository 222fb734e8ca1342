#pragma once

#include "iwafitt/series.hpp"

namespace iwafitt::ring {

/// f = p^mu * dist * unit. The decomposition is valid modulo
/// (p^valid_K, T^valid_m); dividing out p^mu costs mu digits of precision in
/// dist and unit, which is why valid_K records K - mu.
struct WeierstrassForm {
  int mu = 0;
  IntPoly dist;  ///< ascending, monic; residues in [0, p^valid_K)
  TruncatedSeries unit;
  int valid_K = 0;
  int valid_m = 0;

  int degree() const { return static_cast<int>(dist.size()) - 1; }
  /// p^mu * dist * unit at the input precision.
  TruncatedSeries recompose(const ModRing& ring, int m) const;
};

/// Weierstrass preparation by the elementary algorithm: strip p^mu, find the
/// first unit coefficient d, then iterate q <- C^{-1}(1 - tau(q B)) where
/// g = B + T^d C. The truncated input is treated as a polynomial of degree < m.
WeierstrassForm weierstrass_prepare(const TruncatedSeries& f);

struct WeierstrassDivision {
  TruncatedSeries quotient;
  IntPoly remainder;  ///< degree < deg P, residues mod p^K
};

/// f = q P + r with deg r < deg P, P monic distinguished.
WeierstrassDivision weierstrass_divide(const TruncatedSeries& f, const IntPoly& P);

}  // namespace iwafitt::ring
