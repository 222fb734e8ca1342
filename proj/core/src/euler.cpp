#include "iwafitt/euler.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <limits>
#include <numeric>
#include <random>

#include "iwafitt/error.hpp"
#include "iwafitt/padic.hpp"

namespace iwafitt::euler {

using ring::bounded_draw;

int EulerSystemData::ideal_valuation(IndexSet n) const {
  int v = k;
  for (size_t b = 0; b < pool.size(); ++b)
    if (n >> b & 1) v = std::min(v, pool[b].k_l);
  return v;
}

void EulerSystemData::validate() const {
  if (k < 1) fail(ErrorCode::InputError, "ring length k must be >= 1");
  if (epsilon != 0 && epsilon != 1) fail(ErrorCode::InputError, "parity must be 0 or 1");
  if (pool.size() > static_cast<size_t>(kMaxPool)) fail(ErrorCode::InputError, "pool larger than 63 labels");
  for (const auto& l : pool)
    if (l.k_l < 1) fail(ErrorCode::InputError, "label " + l.id + " has k_l < 1");
  const IndexSet universe = pool.size() == 64 ? ~IndexSet{0} : (IndexSet{1} << pool.size()) - 1;
  auto check = [&](IndexSet n, int v, const char* what) {
    if (n & ~universe) fail(ErrorCode::InputError, std::string(what) + " index uses a label outside the pool");
    if (v < 0 || v > k) fail(ErrorCode::InputError, std::string(what) + " index outside [0, k]");
  };
  for (const auto& [n, v] : ind_lambda) check(n, v, "lambda");
  for (const auto& [n, v] : ind_kappa) check(n, v, "kappa");
  for (const auto& [key, v] : loc_ord) {
    check(key.first, v, "loc_ord");
    if (key.second < 0 || static_cast<size_t>(key.second) >= pool.size() || !(key.first >> key.second & 1))
      fail(ErrorCode::InputError, "loc_ord prime must divide its index");
  }
  for (const auto& [key, v] : loc_unr) {
    check(key.first, v, "loc_unr");
    if (key.second < 0 || static_cast<size_t>(key.second) >= pool.size() || (key.first >> key.second & 1))
      fail(ErrorCode::InputError, "loc_unr prime must not divide its index");
  }
}

namespace {

int stratum_min(const std::map<IndexSet, int>& m, int j, const EulerSystemData* capped, const char* what) {
  int best = std::numeric_limits<int>::max();
  bool found = false;
  for (const auto& [n, v] : m) {
    if (nu(n) != j) continue;
    found = true;
    best = std::min(best, capped ? std::min(v, capped->ideal_valuation(n)) : v);
  }
  if (!found) fail(ErrorCode::EmptyStratum, std::string("no ") + what + " index of weight " + std::to_string(j));
  return best;
}

std::vector<int> strata(const std::map<IndexSet, int>& m) {
  std::vector<int> out;
  for (const auto& [n, v] : m) out.push_back(nu(n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

int partial_j(const EulerSystemData& data, int j) { return stratum_min(data.ind_lambda, j, &data, "lambda"); }

int partial_global(const EulerSystemData& data) {
  const auto js = lambda_strata(data);
  if (js.empty()) fail(ErrorCode::EmptyStratum, "no lambda indices");
  int best = data.k;
  for (int j : js) best = std::min(best, partial_j(data, j));
  return best;
}

int partial_j_kappa(const EulerSystemData& data, int j) { return stratum_min(data.ind_kappa, j, nullptr, "kappa"); }

int partial_global_kappa(const EulerSystemData& data) {
  const auto js = kappa_strata(data);
  if (js.empty()) fail(ErrorCode::EmptyStratum, "no kappa indices");
  int best = std::numeric_limits<int>::max();
  for (int j : js) best = std::min(best, partial_j_kappa(data, j));
  return best;
}

std::vector<int> lambda_strata(const EulerSystemData& data) { return strata(data.ind_lambda); }
std::vector<int> kappa_strata(const EulerSystemData& data) { return strata(data.ind_kappa); }

SelmerShape SelmerShape::make(int e, std::vector<int> d) {
  if (e != 0 && e != 1) fail(ErrorCode::InputError, "shape parity e must be 0 or 1");
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) fail(ErrorCode::InputError, "negative shape exponent");
    if (i > 0 && d[i] > d[i - 1]) fail(ErrorCode::InputError, "shape exponents must be non-increasing");
  }
  while (!d.empty() && d.back() == 0) d.pop_back();
  return SelmerShape{e, std::move(d)};
}

SelmerShape SelmerShape::parse(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) fail(ErrorCode::InputError, "shape must look like e:d0,d1,...");
  auto to_int = [&](std::string_view t) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size())
      fail(ErrorCode::InputError, "bad integer '" + std::string(t) + "' in shape");
    return v;
  };
  const int e = to_int(std::string_view(s).substr(0, colon));
  std::vector<int> d;
  std::string_view rest = std::string_view(s).substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    d.push_back(to_int(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return make(e, std::move(d));
}

std::string SelmerShape::to_string() const {
  std::string s = std::to_string(e) + ":";
  for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

int SelmerShape::tail_sum(int from) const {
  int s = 0;
  for (size_t i = static_cast<size_t>(std::max(from, 0)); i < d.size(); ++i) s += d[i];
  return s;
}

int artsel_rhs(const SelmerShape& shape, int k, int delta, int j) {
  if (((j - shape.e) % 2 + 2) % 2 != 0)
    fail(ErrorCode::ParityMismatch, "stratum " + std::to_string(j) + " has the wrong parity for e = " +
                                        std::to_string(shape.e));
  return std::min(k, delta + shape.tail_sum((j - shape.e) / 2));
}

int artkappa_rhs(const SelmerShape& shape, int k, int delta, int j) {
  if (j % 2 != 0) fail(ErrorCode::ParityMismatch, "kappa strata have even weight");
  return std::min(k, delta + shape.tail_sum(j / 2));
}

int SimState::length() const { return std::accumulate(d.begin(), d.end(), 0); }

std::vector<PrimeLabel> make_pool(int size, int nongeneric, int k_min, std::uint64_t seed) {
  if (size < 0 || size > kMaxPool) fail(ErrorCode::InputError, "pool size must be in [0, 63]");
  if (nongeneric < 0 || nongeneric > size) fail(ErrorCode::InputError, "nongeneric count out of range");
  std::mt19937_64 gen(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<PrimeLabel> pool;
  for (int i = 0; i < size; ++i) {
    char id[8];
    std::snprintf(id, sizeof id, "l%02d", i);
    pool.push_back({id, static_cast<int>(bounded_draw(gen(), k_min, k_min + 2)), true});
  }
  std::vector<int> order(static_cast<size_t>(size));
  std::iota(order.begin(), order.end(), 0);
  for (int i = size - 1; i > 0; --i)
    std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(bounded_draw(gen(), 0, i))]);
  for (int i = 0; i < nongeneric; ++i) pool[static_cast<size_t>(order[static_cast<size_t>(i)])].generic = false;
  return pool;
}

int default_nu_max(const SelmerShape& shape, int pool_size) {
  const int want = std::max(4, 2 * static_cast<int>(shape.d.size()) + shape.e + 2);
  return std::min(want, pool_size);
}

namespace {

template <class Fn>
void for_each_index(int pool_size, int nu_max, Fn&& fn) {
  for (int r = 0; r <= std::min(nu_max, pool_size); ++r) {
    if (r == 0) {
      fn(IndexSet{0});
      continue;
    }
    IndexSet mask = (IndexSet{1} << r) - 1;
    const IndexSet limit = IndexSet{1} << pool_size;
    while (mask < limit) {
      fn(mask);
      const IndexSet c = mask & (~mask + 1);
      const IndexSet rr = mask + c;
      mask = (((rr ^ mask) >> 2) / c) | rr;
    }
  }
}

}  // namespace

SimResult simulate_system(const SelmerShape& shape, int k, const std::vector<PrimeLabel>& pool_in,
                          std::uint64_t seed, int nu_max) {
  if (k < 1) fail(ErrorCode::InputError, "ring length k must be >= 1");
  if (pool_in.size() > static_cast<size_t>(kMaxPool)) fail(ErrorCode::InputError, "pool larger than 63 labels");
  std::vector<PrimeLabel> pool = pool_in;
  std::sort(pool.begin(), pool.end(), [](const PrimeLabel& a, const PrimeLabel& b) { return a.id < b.id; });
  for (size_t i = 0; i < pool.size(); ++i) {
    if (pool[i].k_l < k)
      fail(ErrorCode::InputError, "label " + pool[i].id + " is not " + std::to_string(k) + "-admissible");
    if (i > 0 && pool[i].id == pool[i - 1].id) fail(ErrorCode::InputError, "duplicate label " + pool[i].id);
  }
  const int P = static_cast<int>(pool.size());
  if (nu_max <= 0) nu_max = default_nu_max(shape, P);
  const int generic = static_cast<int>(std::count_if(pool.begin(), pool.end(), [](const PrimeLabel& l) { return l.generic; }));
  if (generic < nu_max)
    fail(ErrorCode::PoolExhausted, "need " + std::to_string(nu_max) + " generic labels, pool has " +
                                       std::to_string(generic));

  std::mt19937_64 gen(seed);
  SimResult out;
  out.delta_sim = static_cast<int>(bounded_draw(gen(), 0, std::min(k, 3)));
  out.nu_max = nu_max;
  std::vector<int> offset(pool.size());
  for (auto& t : offset) t = static_cast<int>(bounded_draw(gen(), 1, 3));

  auto& data = out.data;
  data.epsilon = 1 - shape.e;
  data.k = k;
  data.pool = pool;

  for_each_index(P, nu_max, [&](IndexSet n) {
    SimState s{shape.e, shape.d};
    for (int b = 0; b < P; ++b) {
      if (!(n >> b & 1)) continue;
      if (s.e == 1) {
        s.e = 0;  // indefinite -> definite keeps M_n
      } else {
        s.e = 1;
        if (!s.d.empty()) {
          const size_t t = pool[static_cast<size_t>(b)].generic
                               ? 0
                               : std::min(static_cast<size_t>(offset[static_cast<size_t>(b)]), s.d.size() - 1);
          s.d.erase(s.d.begin() + static_cast<long>(t));
        }
      }
    }
    const int ind = std::min(k, out.delta_sim + s.length());
    (s.e == 0 ? data.ind_lambda : data.ind_kappa)[n] = ind;
    out.states.emplace(n, std::move(s));
  });

  for (const auto& [n, s] : out.states) {
    if (nu(n) + 1 > nu_max) continue;
    for (int b = 0; b < P; ++b) {
      if (n >> b & 1) continue;
      const IndexSet nl = n | (IndexSet{1} << b);
      if (s.e == 0)
        data.loc_ord[{nl, b}] = std::min(data.ind_lambda.at(n), data.ideal_valuation(nl));
      else
        data.loc_unr[{n, b}] = data.ind_lambda.at(nl);
    }
  }
  return out;
}

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const StratumCheck& c) { return c.pass; });
}

VerifyReport verify_artsel(const EulerSystemData& data, const SelmerShape& shape) {
  VerifyReport r;
  if (data.ind_lambda.empty()) return r;
  const int delta = partial_global(data);
  for (int j : lambda_strata(data)) {
    const int obs = partial_j(data, j);
    const int exp = artsel_rhs(shape, data.k, delta, j);
    r.checks.push_back({"lambda", j, obs, exp, obs == exp});
  }
  return r;
}

VerifyReport verify_artkappa(const EulerSystemData& data, const SelmerShape& shape) {
  VerifyReport r;
  if (shape.e != 1 || data.ind_kappa.empty()) return r;
  const int delta = partial_global_kappa(data);
  const auto lam = lambda_strata(data);
  for (int j : kappa_strata(data)) {
    const int obs = partial_j_kappa(data, j);
    const int exp = artkappa_rhs(shape, data.k, delta, j);
    r.checks.push_back({"kappa", j, obs, exp, obs == exp});
    if (std::find(lam.begin(), lam.end(), j + 1) != lam.end()) {
      const int next = partial_j(data, j + 1);
      r.checks.push_back({"bridge", j, obs, next, obs == next});
    }
  }
  return r;
}

ReciprocityReport reciprocity_check(const EulerSystemData& data) {
  ReciprocityReport r;
  auto name = [&](IndexSet n) {
    std::string s = "{";
    for (size_t b = 0; b < data.pool.size(); ++b)
      if (n >> b & 1) s += (s.size() > 1 ? "," : "") + data.pool[b].id;
    return s + "}";
  };
  for (const auto& [key, v] : data.loc_ord) {
    const auto [nl, b] = key;
    const IndexSet n = nl & ~(IndexSet{1} << b);
    auto it = data.ind_lambda.find(n);
    if (it == data.ind_lambda.end()) {
      r.violations.push_back("first law: no lambda index at " + name(n));
      continue;
    }
    const int lhs = std::min(it->second, data.ideal_valuation(nl));
    if (lhs != v)
      r.violations.push_back("first law at n=" + name(n) + ", l=" + data.pool[static_cast<size_t>(b)].id + ": " +
                             std::to_string(lhs) + " != " + std::to_string(v));
  }
  for (const auto& [key, v] : data.loc_unr) {
    const auto [n, b] = key;
    const IndexSet nl = n | (IndexSet{1} << b);
    auto it = data.ind_lambda.find(nl);
    if (it == data.ind_lambda.end()) {
      r.violations.push_back("second law: no lambda index at " + name(nl));
      continue;
    }
    const int rhs = std::min(v, data.ideal_valuation(nl));
    if (it->second != rhs)
      r.violations.push_back("second law at n=" + name(n) + ", l=" + data.pool[static_cast<size_t>(b)].id + ": " +
                             std::to_string(it->second) + " != " + std::to_string(rhs));
  }
  return r;
}

std::size_t stabilization_start(const std::vector<int>& values) {
  if (values.size() < 2 || values[values.size() - 1] != values[values.size() - 2])
    fail(ErrorCode::NoStabilization, "no stabilized tail within the supplied range");
  std::size_t i = values.size() - 1;
  while (i > 0 && values[i - 1] == values.back()) --i;
  return i;
}

int delta_limit(const std::vector<int>& values) { return values[stabilization_start(values)]; }

SelmerShape reconstruct_shape(const std::map<int, int>& delta, int e) {
  if (e != 0 && e != 1) fail(ErrorCode::InputError, "parity e must be 0 or 1");
  if (delta.empty()) fail(ErrorCode::InputError, "empty delta map");
  int expect = e;
  for (const auto& [j, v] : delta) {
    if (j != expect)
      fail(ErrorCode::InputError, "delta map must list j = " + std::to_string(e) + ", " + std::to_string(e + 2) +
                                      ", ... without gaps");
    expect += 2;
  }
  std::vector<int> vals;
  for (const auto& [j, v] : delta) vals.push_back(v);
  for (size_t i = 1; i < vals.size(); ++i)
    if (vals[i] > vals[i - 1]) fail(ErrorCode::NotMonotone, "delta values increase with j");
  if (vals.size() >= 2 && vals[vals.size() - 1] != vals[vals.size() - 2])
    fail(ErrorCode::NotMonotone, "delta values are not eventually constant");
  std::vector<int> d;
  for (size_t i = 0; i + 1 < vals.size(); ++i) d.push_back(vals[i] - vals[i + 1]);
  for (size_t i = 1; i < d.size(); ++i)
    if (d[i] > d[i - 1]) fail(ErrorCode::NotMonotone, "reconstructed d is not non-increasing");
  return SelmerShape::make(e, std::move(d));
}

int sha_exponent(const std::map<int, int>& delta, int e, int i) {
  if (i < 0) fail(ErrorCode::InputError, "Fitting index must be non-negative");
  if (i % 2 != 0) fail(ErrorCode::ParityMismatch, "the exponent formula is stated for even i");
  if (delta.empty()) fail(ErrorCode::InputError, "empty delta map");
  const int limit = delta.rbegin()->second;
  const int j = i + e;
  if (j > delta.rbegin()->first) return 0;
  auto it = delta.find(j);
  if (it == delta.end()) fail(ErrorCode::InputError, "delta map lacks j = " + std::to_string(j));
  return 2 * (it->second - limit);
}

std::map<int, int> simulated_deltas(const SelmerShape& shape, int k_lo, int k_hi, int pool_size,
                                    std::uint64_t seed, int* delta_sim) {
  if (k_lo < 1 || k_hi <= k_lo) fail(ErrorCode::InputError, "need at least two precisions k");
  const auto pool = make_pool(pool_size, 0, 2 * k_hi, seed);
  std::map<int, std::vector<int>> series;
  for (int k = k_lo; k <= k_hi; ++k) {
    const auto sim = simulate_system(shape, k, pool, seed);
    if (delta_sim) *delta_sim = sim.delta_sim;
    for (int j : lambda_strata(sim.data)) series[j].push_back(partial_j(sim.data, j));
  }
  std::map<int, int> out;
  for (const auto& [j, vals] : series) out[j] = delta_limit(vals);
  return out;
}

}  // namespace iwafitt::euler
