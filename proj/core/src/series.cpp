#include "iwafitt/series.hpp"

#include <algorithm>

namespace iwafitt::ring {

int degree(const IntPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<size_t>(i)] != 0) return i;
  return -1;
}

bool is_distinguished(const IntPoly& f, i64 p) {
  const int d = degree(f);
  if (d < 0 || f[static_cast<size_t>(d)] != 1) return false;
  for (int i = 0; i < d; ++i)
    if (f[static_cast<size_t>(i)] % p != 0) return false;
  return true;
}

std::string poly_to_string(const IntPoly& f, const char* var) {
  const int d = degree(f);
  if (d < 0) return "0";
  std::string out;
  for (int i = d; i >= 0; --i) {
    const i64 c = f[static_cast<size_t>(i)];
    if (c == 0) continue;
    const i64 mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    if (i == 0 || mag != 1) out += std::to_string(mag);
    if (i >= 1) {
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

TruncatedSeries::TruncatedSeries(ModRing ring, int m) : ring_(ring), coeffs_() {
  if (m < 1) fail(ErrorCode::InputError, "truncation degree m must be >= 1");
  coeffs_.assign(static_cast<size_t>(m), 0);
}

TruncatedSeries::TruncatedSeries(ModRing ring, int m, std::span<const i64> coeffs)
    : TruncatedSeries(ring, m) {
  const auto n = std::min(coeffs.size(), coeffs_.size());
  for (size_t i = 0; i < n; ++i) coeffs_[i] = ring_.reduce(coeffs[i]);
}

TruncatedSeries TruncatedSeries::constant(ModRing ring, int m, i64 c) {
  TruncatedSeries s(ring, m);
  s.coeffs_[0] = ring.reduce(c);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(ModRing ring, int m, int degree, i64 c) {
  TruncatedSeries s(ring, m);
  if (degree < m) s.coeffs_[static_cast<size_t>(degree)] = ring.reduce(c);
  return s;
}

TruncatedSeries TruncatedSeries::from_poly(ModRing ring, int m, const IntPoly& f) {
  return TruncatedSeries(ring, m, std::span<const i64>(f));
}

bool TruncatedSeries::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](i64 c) { return c == 0; });
}

int TruncatedSeries::mu() const noexcept {
  int v = ring_.K();
  for (i64 c : coeffs_) v = std::min(v, ring_.valuation(c));
  return v;
}

int TruncatedSeries::first_unit_index() const noexcept {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (ring_.is_unit(coeffs_[i])) return static_cast<int>(i);
  return -1;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (!(ring_ == o.ring_) || coeffs_.size() != o.coeffs_.size())
    fail(ErrorCode::RingMismatch, "series at different precision (p, K, m)");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  check_compatible(o);
  TruncatedSeries r(ring_, m());
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = ring_.add(coeffs_[i], o.coeffs_[i]);
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  check_compatible(o);
  TruncatedSeries r(ring_, m());
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = ring_.sub(coeffs_[i], o.coeffs_[i]);
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  check_compatible(o);
  const size_t n = coeffs_.size();
  TruncatedSeries r(ring_, m());
  for (size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; i + j < n; ++j)
      r.coeffs_[i + j] = ring_.add(r.coeffs_[i + j], ring_.mul(coeffs_[i], o.coeffs_[j]));
  }
  return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(ring_, m());
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = ring_.neg(coeffs_[i]);
  return r;
}

TruncatedSeries TruncatedSeries::scaled(i64 c) const {
  TruncatedSeries r(ring_, m());
  c = ring_.reduce(c);
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = ring_.mul(coeffs_[i], c);
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (!is_unit()) fail(ErrorCode::InsufficientPrecision, "series inverse needs a unit constant term");
  const size_t n = coeffs_.size();
  const i64 c0inv = ring_.inverse(coeffs_[0]);
  TruncatedSeries r(ring_, m());
  r.coeffs_[0] = c0inv;
  for (size_t k = 1; k < n; ++k) {
    i64 acc = 0;
    for (size_t i = 1; i <= k; ++i) acc = ring_.add(acc, ring_.mul(coeffs_[i], r.coeffs_[k - i]));
    r.coeffs_[k] = ring_.mul(ring_.neg(acc), c0inv);
  }
  return r;
}

TruncatedSeries TruncatedSeries::with_length(int m_new) const {
  return TruncatedSeries(ring_, m_new, std::span<const i64>(coeffs_));
}

TruncatedSeries TruncatedSeries::with_precision(int K_new) const {
  if (K_new > ring_.K()) fail(ErrorCode::InsufficientPrecision, "cannot raise p-adic precision");
  return TruncatedSeries(ModRing(ring_.p(), K_new), m(), std::span<const i64>(coeffs_));
}

std::string TruncatedSeries::to_string() const {
  IntPoly f(coeffs_.begin(), coeffs_.end());
  return poly_to_string(f) + " + O(p^" + std::to_string(ring_.K()) + ", T^" +
         std::to_string(m()) + ")";
}

}  // namespace iwafitt::ring
