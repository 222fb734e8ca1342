#include "iwafitt/weierstrass.hpp"

namespace iwafitt::ring {

namespace {

// Coefficients [d, d + n) of s, as a length-n series.
TruncatedSeries upper_part(const TruncatedSeries& s, int d, int n) {
  TruncatedSeries r(s.ring(), n);
  for (int i = 0; i < n && d + i < s.m(); ++i) r.set(i, s[d + i]);
  return r;
}

TruncatedSeries lower_part(const TruncatedSeries& s, int d) {
  TruncatedSeries r(s.ring(), s.m());
  for (int i = 0; i < d && i < s.m(); ++i) r.set(i, s[i]);
  return r;
}

}  // namespace

TruncatedSeries WeierstrassForm::recompose(const ModRing& ring, int m) const {
  TruncatedSeries dist_s = TruncatedSeries::from_poly(ring, m, dist);
  TruncatedSeries unit_s(ring, m, std::span<const i64>(unit.coeffs()));
  return (dist_s * unit_s).scaled(ring.p_power(mu));
}

WeierstrassForm weierstrass_prepare(const TruncatedSeries& f) {
  if (f.is_zero())
    fail(ErrorCode::InsufficientPrecision, "series vanishes at precision p^" + std::to_string(f.K()));
  const int m = f.m();
  const int mu = f.mu();
  const int K_work = f.K() - mu;
  const ModRing work(f.p(), K_work);

  TruncatedSeries g(work, m);
  for (int i = 0; i < m; ++i) g.set(i, f.ring().divide_by_p_power(f[i], mu));

  const int d = g.first_unit_index();
  if (d < 0 || d >= m)
    fail(ErrorCode::InsufficientPrecision, "distinguished degree not below truncation m");

  // q = U^{-1} is a genuine series even for polynomial input; each d extra
  // coefficients of q buy one more p-adic digit of P.
  const int n = m + d * (K_work + 1);
  const int L = n + d;
  const TruncatedSeries g_ext = g.with_length(L);
  const TruncatedSeries B = lower_part(g_ext, d);
  const TruncatedSeries C_inv = upper_part(g_ext, d, n).inverse();
  const TruncatedSeries one = TruncatedSeries::constant(work, n, 1);

  TruncatedSeries q = C_inv;
  bool stable = false;
  for (int iter = 0; iter <= K_work + 2; ++iter) {
    TruncatedSeries next = C_inv * (one - upper_part(q.with_length(L) * B, d, n));
    if (next == q) {
      stable = true;
      break;
    }
    q = std::move(next);
  }
  if (!stable) fail(ErrorCode::InsufficientPrecision, "Weierstrass iteration did not stabilize");

  const TruncatedSeries qg = q.with_length(L) * g_ext;
  if (!(upper_part(qg, d, m) == TruncatedSeries::constant(work, m, 1)))
    fail(ErrorCode::InsufficientPrecision, "Weierstrass quotient failed its consistency check");

  WeierstrassForm out{mu, IntPoly(static_cast<size_t>(d) + 1, 0), q.with_length(m).inverse(), K_work, m};
  for (int i = 0; i < d; ++i) out.dist[static_cast<size_t>(i)] = qg[i];
  out.dist[static_cast<size_t>(d)] = 1;
  return out;
}

WeierstrassDivision weierstrass_divide(const TruncatedSeries& f, const IntPoly& P) {
  const int d = degree(P);
  if (d < 0 || P[static_cast<size_t>(d)] != 1)
    fail(ErrorCode::InputError, "divisor must be monic");
  if (!is_distinguished(P, f.p()))
    fail(ErrorCode::InputError, "divisor " + poly_to_string(P) + " is not distinguished");
  const int m = f.m();
  if (d >= m) fail(ErrorCode::InsufficientPrecision, "divisor degree not below truncation m");
  const ModRing& ring = f.ring();

  if (d == 0) return {f, IntPoly{}};

  const int L = m + d;
  const TruncatedSeries f_ext = f.with_length(L);
  const TruncatedSeries P_ext = TruncatedSeries::from_poly(ring, L, P);
  const TruncatedSeries B = lower_part(P_ext, d);
  const TruncatedSeries top = upper_part(f_ext, d, m);

  TruncatedSeries q = top;
  bool stable = false;
  for (int iter = 0; iter <= ring.K() + 2; ++iter) {
    TruncatedSeries next = top - upper_part(q.with_length(L) * B, d, m);
    if (next == q) {
      stable = true;
      break;
    }
    q = std::move(next);
  }
  if (!stable) fail(ErrorCode::InsufficientPrecision, "Weierstrass division did not stabilize");

  const TruncatedSeries rem = f_ext - q.with_length(L) * P_ext;
  IntPoly r(static_cast<size_t>(d), 0);
  for (int i = 0; i < d; ++i) r[static_cast<size_t>(i)] = rem[i];
  for (int i = d; i < L; ++i)
    if (rem[i] != 0) fail(ErrorCode::InsufficientPrecision, "division residue above deg P");
  return {q, r};
}

}  // namespace iwafitt::ring
