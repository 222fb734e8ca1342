#include "iwafitt/fitting.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

namespace iwafitt::fitting {

namespace {

struct ScalarOps {
  ModRing R;
  using Value = i64;
  Value one() const { return 1 % R.modulus(); }
  Value zero() const { return 0; }
  Value add(Value a, Value b) const { return R.add(a, b); }
  Value sub(Value a, Value b) const { return R.sub(a, b); }
  Value mul(Value a, Value b) const { return R.mul(a, b); }
  bool is_zero(Value a) const { return a == 0; }
};

struct SeriesOps {
  ModRing R;
  int m;
  using Value = TruncatedSeries;
  Value one() const { return TruncatedSeries::constant(R, m, 1); }
  Value zero() const { return TruncatedSeries(R, m); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  bool is_zero(const Value& a) const { return a.is_zero(); }
};

/// Minors by Laplace expansion along the first selected row, memoized on
/// (row-set, column-set). Sub-minors are shared between every minor size.
template <class Ops>
class MinorCache {
 public:
  using Value = typename Ops::Value;

  MinorCache(Ops ops, const PresentationMatrix& M) : ops_(std::move(ops)), M_(M) {}

  const Value& minor(std::uint32_t rows, std::uint32_t cols) {
    const std::uint64_t key = (static_cast<std::uint64_t>(rows) << 32) | cols;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Value acc = rows == 0 ? ops_.one() : ops_.zero();
    if (rows != 0) {
      const int r0 = std::countr_zero(rows);
      const std::uint32_t rest = rows & (rows - 1);
      int position = 0;
      for (std::uint32_t cs = cols; cs; cs &= cs - 1, ++position) {
        const int c = std::countr_zero(cs);
        Value a = entry(r0, c);
        if (ops_.is_zero(a)) continue;
        const Value& sub = minor(rest, cols & ~(std::uint32_t{1} << c));
        if (ops_.is_zero(sub)) continue;
        Value term = ops_.mul(a, sub);
        acc = (position % 2 == 0) ? ops_.add(acc, term) : ops_.sub(acc, term);
      }
    }
    return memo_.emplace(key, std::move(acc)).first->second;
  }

 private:
  Value entry(int r, int c) const {
    if constexpr (std::is_same_v<Value, i64>)
      return M_.scalar_at(r, c);
    else
      return M_.series_at(r, c);
  }

  Ops ops_;
  const PresentationMatrix& M_;
  std::unordered_map<std::uint64_t, Value> memo_;
};

/// Calls fn(mask) for every n-bit mask with exactly r bits; stops when fn returns false.
template <class Fn>
bool for_each_subset(int n, int r, Fn&& fn) {
  if (r == 0) return fn(std::uint32_t{0});
  if (r > n) return true;
  std::uint32_t mask = (std::uint32_t{1} << r) - 1;
  const std::uint32_t limit = std::uint32_t{1} << n;
  while (mask < limit) {
    if (!fn(mask)) return false;
    // Gosper's hack: next mask with the same popcount
    const std::uint32_t c = mask & (~mask + 1);
    const std::uint32_t rr = mask + c;
    mask = (((rr ^ mask) >> 2) / c) | rr;
  }
  return true;
}

int principal_exponent(MinorCache<ScalarOps>& cache, const ModRing& R, int rows, int cols, int size) {
  int best = R.K();
  for_each_subset(rows, size, [&](std::uint32_t rs) {
    return for_each_subset(cols, size, [&](std::uint32_t cs) {
      best = std::min(best, R.valuation(cache.minor(rs, cs)));
      return best > 0;  // a unit minor already gives the whole ring
    });
  });
  return best;
}

}  // namespace

FittingIdealResult fitting_ideal(const PresentationMatrix& M, int i) {
  if (i < 0) fail(ErrorCode::RingMismatch, "Fitting index must be non-negative");
  FittingIdealResult out;
  out.index = i;
  out.ring = M.ring();
  const int size = M.rows() - i;
  const ModRing R = M.ring().coefficients();

  if (size <= 0) {
    out.exponent = 0;
    out.unit_ideal = true;
    return out;
  }
  if (size > M.cols()) {
    out.exponent = R.K();
    return out;
  }

  if (M.ring().is_principal()) {
    MinorCache<ScalarOps> cache(ScalarOps{R}, M);
    out.exponent = principal_exponent(cache, R, M.rows(), M.cols(), size);
    return out;
  }

  MinorCache<SeriesOps> cache(SeriesOps{R, M.ring().m}, M);
  for_each_subset(M.rows(), size, [&](std::uint32_t rs) {
    return for_each_subset(M.cols(), size, [&](std::uint32_t cs) {
      const TruncatedSeries& d = cache.minor(rs, cs);
      if (d.is_zero()) return true;
      if (d.is_unit()) {
        out.unit_ideal = true;
        return false;
      }
      if (std::find(out.generators.begin(), out.generators.end(), d) == out.generators.end())
        out.generators.push_back(d);
      return true;
    });
  });
  if (out.unit_ideal) out.generators = {TruncatedSeries::constant(R, M.ring().m, 1)};
  return out;
}

std::vector<int> fitting_exponents(const PresentationMatrix& M) {
  if (!M.ring().is_principal())
    fail(ErrorCode::RingMismatch, "exponent sequence needs a principal coefficient ring");
  const ModRing R = M.ring().coefficients();
  MinorCache<ScalarOps> cache(ScalarOps{R}, M);
  std::vector<int> out;
  for (int i = 0; i <= M.rows(); ++i) {
    const int size = M.rows() - i;
    if (size <= 0)
      out.push_back(0);
    else if (size > M.cols())
      out.push_back(R.K());
    else
      out.push_back(principal_exponent(cache, R, M.rows(), M.cols(), size));
  }
  return out;
}

}  // namespace iwafitt::fitting
