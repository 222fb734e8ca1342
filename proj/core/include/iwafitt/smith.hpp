#pragma once

#include <vector>

#include "iwafitt/presentation.hpp"

namespace iwafitt::fitting {

using Matrix = std::vector<std::vector<i64>>;

/// U * A * V = D over Z/p^K with D diagonal, U and V invertible.
struct SmithResult {
  /// One exponent per generator (row), non-decreasing. K marks a zero
  /// divisor at this precision, including rows beyond the relation count.
  std::vector<int> exponents;
  Matrix U, V, D;
  int K = 0;

  /// Recomputes U*A*V and compares with D.
  bool verify(const PresentationMatrix& A) const;
};

/// Smith normal form by valuation pivoting: at each step the entry of minimal
/// valuation, ties broken by (row, col) order, moves to the pivot position and
/// clears its row and column.
SmithResult smith_normal_form(const PresentationMatrix& A);

/// Torsion module over a DVR as its sorted exponent list, oplus R/p^{k_j}.
struct ElementaryDVRModule {
  std::vector<int> exponents;  ///< non-decreasing, each >= 1

  static ElementaryDVRModule from_exponents(std::vector<int> e);
  int generators() const noexcept { return static_cast<int>(exponents.size()); }
  int length() const noexcept;
  friend bool operator==(const ElementaryDVRModule&, const ElementaryDVRModule&) = default;
};

/// Structure of coker(A): the nonzero SNF exponents. NotTorsion when a
/// divisor is zero at precision, unless `assume_torsion` keeps it as p^K.
ElementaryDVRModule dvr_structure(const PresentationMatrix& A, bool assume_torsion = false);

/// c_i: sum of the (n - i) smallest exponents; 0 once i >= n.
int fitting_from_structure(const ElementaryDVRModule& E, int i);

/// Fitt_i of a direct sum as the minimum over splittings s1 + s2 = i.
int direct_sum_fitting(const ElementaryDVRModule& E1, const ElementaryDVRModule& E2, int i);

ElementaryDVRModule merge(const ElementaryDVRModule& a, const ElementaryDVRModule& b);

}  // namespace iwafitt::fitting
