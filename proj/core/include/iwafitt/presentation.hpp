#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iwafitt/series.hpp"

namespace iwafitt::fitting {

using ring::i64;
using ring::ModRing;
using ring::TruncatedSeries;

enum class RingKind { ZpModPk, Dvr, Lambda };

std::string to_string(RingKind k);
RingKind ring_kind_from_string(const std::string& s);

/// Z/p^K (artinian, exact), Z_p at precision K, or Lambda/(p^K, T^m).
struct RingDescriptor {
  RingKind kind = RingKind::Dvr;
  i64 p = 3;
  int K = 12;
  int m = 1;  ///< truncation degree, Lambda only

  ModRing coefficients() const { return ModRing(p, K); }
  bool is_principal() const noexcept { return kind != RingKind::Lambda; }
  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

/// coker(R^cols -> R^rows): `rows` generators, `cols` relations, one relation
/// per column. An empty matrix presents a free module of rank `rows`.
class PresentationMatrix {
 public:
  static PresentationMatrix scalar(RingDescriptor ring, int rows, int cols, std::vector<i64> entries);
  static PresentationMatrix lambda(RingDescriptor ring, int rows, int cols,
                                   std::vector<TruncatedSeries> entries);
  /// diag(p^e_1, ..., p^e_n) over a principal ring.
  static PresentationMatrix diagonal(RingDescriptor ring, const std::vector<int>& exponents);

  const RingDescriptor& ring() const noexcept { return ring_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  i64 scalar_at(int r, int c) const;
  const TruncatedSeries& series_at(int r, int c) const;

  /// Extra relations; the resulting module is a quotient of this one.
  PresentationMatrix with_columns(const PresentationMatrix& extra) const;
  /// Block-diagonal presentation of the direct sum.
  PresentationMatrix direct_sum(const PresentationMatrix& other) const;
  /// Base change Z/p^K -> Z/p^K' (K' <= K); the ring kind is kept.
  PresentationMatrix reduced(int K_new) const;

 private:
  PresentationMatrix(RingDescriptor ring, int rows, int cols);

  RingDescriptor ring_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<i64> scalars_;
  std::vector<TruncatedSeries> series_;
};

}  // namespace iwafitt::fitting
