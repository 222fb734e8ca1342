#include "iwafitt/smith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace iwafitt::fitting {

namespace {

Matrix identity(int n) {
  Matrix I(static_cast<size_t>(n), std::vector<i64>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) I[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return I;
}

Matrix multiply(const ModRing& R, const Matrix& a, const Matrix& b, int inner) {
  const size_t n = a.size();
  const size_t m = b.empty() ? 0 : b.front().size();
  Matrix c(n, std::vector<i64>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (int k = 0; k < inner; ++k) {
      const i64 x = a[i][static_cast<size_t>(k)];
      if (x == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] = R.add(c[i][j], R.mul(x, b[static_cast<size_t>(k)][j]));
    }
  return c;
}

}  // namespace

bool SmithResult::verify(const PresentationMatrix& A) const {
  const ModRing R = A.ring().coefficients();
  Matrix a(static_cast<size_t>(A.rows()), std::vector<i64>(static_cast<size_t>(A.cols()), 0));
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < A.cols(); ++c) a[static_cast<size_t>(r)][static_cast<size_t>(c)] = A.scalar_at(r, c);
  const Matrix ua = multiply(R, U, a, A.rows());
  const Matrix uav = multiply(R, ua, V, A.cols());
  if (uav != D) return false;
  for (size_t r = 0; r < D.size(); ++r)
    for (size_t c = 0; c < D[r].size(); ++c)
      if (r != c && D[r][c] != 0) return false;
  return true;
}

SmithResult smith_normal_form(const PresentationMatrix& A) {
  if (!A.ring().is_principal())
    fail(ErrorCode::RingMismatch, "Smith normal form needs a principal coefficient ring");
  const ModRing R = A.ring().coefficients();
  const int n = A.rows(), k = A.cols();
  Matrix D(static_cast<size_t>(n), std::vector<i64>(static_cast<size_t>(k), 0));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < k; ++c) D[static_cast<size_t>(r)][static_cast<size_t>(c)] = A.scalar_at(r, c);
  Matrix U = identity(n), V = identity(k);

  auto at = [&](int r, int c) -> i64& { return D[static_cast<size_t>(r)][static_cast<size_t>(c)]; };
  auto row_op = [&](Matrix& M, int dst, int src, i64 f, int width) {  // row dst -= f * row src
    for (int c = 0; c < width; ++c)
      M[static_cast<size_t>(dst)][static_cast<size_t>(c)] =
          R.sub(M[static_cast<size_t>(dst)][static_cast<size_t>(c)], R.mul(f, M[static_cast<size_t>(src)][static_cast<size_t>(c)]));
  };
  auto col_op = [&](Matrix& M, int dst, int src, i64 f, int height) {  // col dst -= f * col src
    for (int r = 0; r < height; ++r)
      M[static_cast<size_t>(r)][static_cast<size_t>(dst)] =
          R.sub(M[static_cast<size_t>(r)][static_cast<size_t>(dst)], R.mul(f, M[static_cast<size_t>(r)][static_cast<size_t>(src)]));
  };

  SmithResult out;
  out.K = R.K();
  const int steps = std::min(n, k);
  for (int t = 0; t < steps; ++t) {
    int best_v = R.K(), br = -1, bc = -1;
    for (int r = t; r < n; ++r)
      for (int c = t; c < k; ++c) {
        const int v = R.valuation(at(r, c));
        if (v < best_v) {
          best_v = v;
          br = r;
          bc = c;
        }
      }
    if (br < 0) break;  // remaining block vanishes at precision
    if (br != t) {
      std::swap(D[static_cast<size_t>(br)], D[static_cast<size_t>(t)]);
      std::swap(U[static_cast<size_t>(br)], U[static_cast<size_t>(t)]);
    }
    if (bc != t) {
      for (auto& row : D) std::swap(row[static_cast<size_t>(bc)], row[static_cast<size_t>(t)]);
      for (auto& row : V) std::swap(row[static_cast<size_t>(bc)], row[static_cast<size_t>(t)]);
    }
    // Normalize the pivot to p^v: scale row t by the inverse unit part.
    const i64 unit = R.divide_by_p_power(at(t, t), best_v);
    const i64 unit_inv = R.inverse(unit);
    for (int c = 0; c < k; ++c) at(t, c) = R.mul(at(t, c), unit_inv);
    for (int c = 0; c < n; ++c)
      U[static_cast<size_t>(t)][static_cast<size_t>(c)] = R.mul(U[static_cast<size_t>(t)][static_cast<size_t>(c)], unit_inv);

    for (int r = t + 1; r < n; ++r) {
      if (at(r, t) == 0) continue;
      const i64 f = R.divide_by_p_power(at(r, t), best_v);
      row_op(D, r, t, f, k);
      row_op(U, r, t, f, n);
    }
    for (int c = t + 1; c < k; ++c) {
      if (at(t, c) == 0) continue;
      const i64 f = R.divide_by_p_power(at(t, c), best_v);
      col_op(D, c, t, f, n);
      col_op(V, c, t, f, k);
    }
  }

  out.exponents.reserve(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) out.exponents.push_back(t < k ? R.valuation(at(t, t)) : R.K());
  std::sort(out.exponents.begin(), out.exponents.end());
  out.U = std::move(U);
  out.V = std::move(V);
  out.D = std::move(D);
  return out;
}

ElementaryDVRModule ElementaryDVRModule::from_exponents(std::vector<int> e) {
  e.erase(std::remove(e.begin(), e.end(), 0), e.end());
  for (int x : e)
    if (x < 0) fail(ErrorCode::InputError, "negative exponent in elementary module");
  std::sort(e.begin(), e.end());
  return ElementaryDVRModule{std::move(e)};
}

int ElementaryDVRModule::length() const noexcept {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

ElementaryDVRModule dvr_structure(const PresentationMatrix& A, bool assume_torsion) {
  const SmithResult snf = smith_normal_form(A);
  std::vector<int> e;
  for (int x : snf.exponents) {
    if (x == 0) continue;
    if (x >= snf.K && !assume_torsion)
      fail(ErrorCode::NotTorsion, "a divisor vanishes at precision p^" + std::to_string(snf.K) +
                                      " (free summand or insufficient precision)");
    e.push_back(x);
  }
  return ElementaryDVRModule::from_exponents(std::move(e));
}

int fitting_from_structure(const ElementaryDVRModule& E, int i) {
  if (i < 0) fail(ErrorCode::InputError, "Fitting index must be non-negative");
  const int n = E.generators();
  if (i >= n) return 0;
  return std::accumulate(E.exponents.begin(), E.exponents.begin() + (n - i), 0);
}

int direct_sum_fitting(const ElementaryDVRModule& E1, const ElementaryDVRModule& E2, int i) {
  int best = std::numeric_limits<int>::max();
  for (int s1 = 0; s1 <= i; ++s1)
    best = std::min(best, fitting_from_structure(E1, s1) + fitting_from_structure(E2, i - s1));
  return best;
}

ElementaryDVRModule merge(const ElementaryDVRModule& a, const ElementaryDVRModule& b) {
  std::vector<int> e = a.exponents;
  e.insert(e.end(), b.exponents.begin(), b.exponents.end());
  return ElementaryDVRModule::from_exponents(std::move(e));
}

}  // namespace iwafitt::fitting
