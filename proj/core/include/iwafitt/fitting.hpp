#pragma once

#include <vector>

#include "iwafitt/presentation.hpp"

namespace iwafitt::fitting {

/// Fitt_i of a presented module.
///
/// Over a principal ring the ideal is (p^exponent); exponent == K stands for
/// the zero ideal at this precision. Over truncated Lambda the ideal is kept as
/// a deduplicated list of nonzero minors (no normal form); an empty list is the
/// zero ideal and `unit_ideal` marks Fitt_i = Lambda.
struct FittingIdealResult {
  int index = 0;
  RingDescriptor ring;
  int exponent = 0;
  std::vector<TruncatedSeries> generators;
  bool unit_ideal = false;

  bool is_zero_ideal() const {
    return ring.is_principal() ? exponent >= ring.K : (!unit_ideal && generators.empty());
  }
  bool is_unit_ideal() const { return ring.is_principal() ? exponent == 0 : unit_ideal; }
};

/// Ideal generated by the (rows - i)-minors. Fitt_i = R once i >= rows, and
/// the zero ideal when rows - i exceeds the number of relations.
FittingIdealResult fitting_ideal(const PresentationMatrix& M, int i);

/// Fitting exponents for i = 0..rows over a principal ring, sharing one minor cache.
std::vector<int> fitting_exponents(const PresentationMatrix& M);

}  // namespace iwafitt::fitting
