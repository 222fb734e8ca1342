#include "iwafitt/presentation.hpp"

namespace iwafitt::fitting {

std::string to_string(RingKind k) {
  switch (k) {
    case RingKind::ZpModPk: return "Zp_mod_pk";
    case RingKind::Dvr: return "dvr";
    case RingKind::Lambda: return "lambda";
  }
  return "?";
}

RingKind ring_kind_from_string(const std::string& s) {
  if (s == "Zp_mod_pk") return RingKind::ZpModPk;
  if (s == "dvr") return RingKind::Dvr;
  if (s == "lambda") return RingKind::Lambda;
  fail(ErrorCode::InputError, "unknown ring kind '" + s + "'");
}

PresentationMatrix::PresentationMatrix(RingDescriptor ring, int rows, int cols)
    : ring_(ring), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(ErrorCode::InputError, "negative matrix dimension");
  if (rows > 30 || cols > 30) fail(ErrorCode::InputError, "matrix dimensions above 30 are not supported");
  (void)ring_.coefficients();  // validates p and K
}

PresentationMatrix PresentationMatrix::scalar(RingDescriptor ring, int rows, int cols,
                                              std::vector<i64> entries) {
  if (!ring.is_principal())
    fail(ErrorCode::RingMismatch, "scalar entries given for a Lambda presentation");
  PresentationMatrix M(ring, rows, cols);
  if (entries.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
    fail(ErrorCode::InputError, "entry count does not match rows*cols");
  const ModRing R = ring.coefficients();
  for (auto& e : entries) e = R.reduce(e);
  M.scalars_ = std::move(entries);
  return M;
}

PresentationMatrix PresentationMatrix::lambda(RingDescriptor ring, int rows, int cols,
                                              std::vector<TruncatedSeries> entries) {
  if (ring.is_principal())
    fail(ErrorCode::RingMismatch, "series entries given for a principal-ring presentation");
  PresentationMatrix M(ring, rows, cols);
  if (entries.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
    fail(ErrorCode::InputError, "entry count does not match rows*cols");
  const ModRing R = ring.coefficients();
  for (const auto& e : entries)
    if (!(e.ring() == R) || e.m() != ring.m)
      fail(ErrorCode::RingMismatch, "series entry precision disagrees with the ring descriptor");
  M.series_ = std::move(entries);
  return M;
}

PresentationMatrix PresentationMatrix::diagonal(RingDescriptor ring, const std::vector<int>& exponents) {
  const int n = static_cast<int>(exponents.size());
  const ModRing R = ring.coefficients();
  std::vector<i64> e(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) e[static_cast<size_t>(i * n + i)] = R.p_power(exponents[static_cast<size_t>(i)]);
  return scalar(ring, n, n, std::move(e));
}

i64 PresentationMatrix::scalar_at(int r, int c) const {
  return scalars_.at(static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c));
}

const TruncatedSeries& PresentationMatrix::series_at(int r, int c) const {
  return series_.at(static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c));
}

PresentationMatrix PresentationMatrix::with_columns(const PresentationMatrix& extra) const {
  if (!(extra.ring_ == ring_) || extra.rows_ != rows_)
    fail(ErrorCode::RingMismatch, "appended relations must share ring and generator count");
  PresentationMatrix out(ring_, rows_, cols_ + extra.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (ring_.is_principal())
        out.scalars_.push_back(scalar_at(r, c));
      else
        out.series_.push_back(series_at(r, c));
    }
    for (int c = 0; c < extra.cols_; ++c) {
      if (ring_.is_principal())
        out.scalars_.push_back(extra.scalar_at(r, c));
      else
        out.series_.push_back(extra.series_at(r, c));
    }
  }
  return out;
}

PresentationMatrix PresentationMatrix::direct_sum(const PresentationMatrix& other) const {
  if (!(other.ring_ == ring_)) fail(ErrorCode::RingMismatch, "direct sum over different rings");
  PresentationMatrix out(ring_, rows_ + other.rows_, cols_ + other.cols_);
  const TruncatedSeries zero(ring_.coefficients(), ring_.m);
  for (int r = 0; r < out.rows_; ++r) {
    for (int c = 0; c < out.cols_; ++c) {
      const bool top = r < rows_, left = c < cols_;
      if (ring_.is_principal()) {
        i64 v = 0;
        if (top && left) v = scalar_at(r, c);
        if (!top && !left) v = other.scalar_at(r - rows_, c - cols_);
        out.scalars_.push_back(v);
      } else {
        if (top && left)
          out.series_.push_back(series_at(r, c));
        else if (!top && !left)
          out.series_.push_back(other.series_at(r - rows_, c - cols_));
        else
          out.series_.push_back(zero);
      }
    }
  }
  return out;
}

PresentationMatrix PresentationMatrix::reduced(int K_new) const {
  if (K_new > ring_.K) fail(ErrorCode::InsufficientPrecision, "base change must lower precision");
  RingDescriptor r = ring_;
  r.K = K_new;
  const ModRing R = r.coefficients();
  if (ring_.is_principal()) {
    std::vector<i64> e = scalars_;
    for (auto& x : e) x = R.reduce(x);
    return scalar(r, rows_, cols_, std::move(e));
  }
  std::vector<TruncatedSeries> e;
  e.reserve(series_.size());
  for (const auto& s : series_) e.push_back(s.with_precision(K_new));
  return lambda(r, rows_, cols_, std::move(e));
}

}  // namespace iwafitt::fitting
