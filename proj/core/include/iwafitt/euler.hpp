#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace iwafitt::euler {

/// An admissible prime label with I_l = (p^{k_l}).
struct PrimeLabel {
  std::string id;
  int k_l = 1;
  bool generic = true;
  friend bool operator==(const PrimeLabel&, const PrimeLabel&) = default;
};

/// Square-free index n as a bitmask over the pool (bit b = pool[b]).
using IndexSet = std::uint64_t;
inline int nu(IndexSet n) noexcept { return __builtin_popcountll(n); }

inline constexpr int kMaxPool = 63;

/// Divisibility indices of a bipartite Euler system. lambda lives on definite
/// n (nu(n) = epsilon + 1 mod 2), kappa on the rest.
struct EulerSystemData {
  int epsilon = 0;
  int k = 1;
  std::vector<PrimeLabel> pool;
  std::map<IndexSet, int> ind_lambda;
  std::map<IndexSet, int> ind_kappa;
  /// (n l, l) -> ind of phi_ord(loc_l(kappa_{nl}))
  std::map<std::pair<IndexSet, int>, int> loc_ord;
  /// (n, l) -> ind of phi_unr(loc_l(kappa_n))
  std::map<std::pair<IndexSet, int>, int> loc_unr;

  /// Valuation of I_n, capped at k; I_1 = 0 gives k.
  int ideal_valuation(IndexSet n) const;
  /// InputError unless every index is in [0, k] and every set fits the pool.
  void validate() const;
  friend bool operator==(const EulerSystemData&, const EulerSystemData&) = default;
};

/// d^{(j)}(lambda) = min over nu(n) = j of length R/(I_n + (lambda_n)).
int partial_j(const EulerSystemData& data, int j);
int partial_global(const EulerSystemData& data);
int partial_j_kappa(const EulerSystemData& data, int j);
int partial_global_kappa(const EulerSystemData& data);
/// Weights j present in the lambda (resp. kappa) map.
std::vector<int> lambda_strata(const EulerSystemData& data);
std::vector<int> kappa_strata(const EulerSystemData& data);

/// R^e oplus (oplus_i (R/m^{d_i})^2), d non-increasing with trailing zeros trimmed.
struct SelmerShape {
  int e = 0;
  std::vector<int> d;

  static SelmerShape make(int e, std::vector<int> d);
  /// "e:d0,d1,..." (the list may be empty: "1:")
  static SelmerShape parse(const std::string& s);
  std::string to_string() const;
  int tail_sum(int from) const;
  int total() const { return tail_sum(0); }
  friend bool operator==(const SelmerShape&, const SelmerShape&) = default;
};

/// min{k, delta + sum_{i >= (j-e)/2} d_i}; ParityMismatch if j - e is odd.
int artsel_rhs(const SelmerShape& shape, int k, int delta, int j);
/// min{k, delta + sum_{i >= j/2} d_i} for the kappa strata (j even).
int artkappa_rhs(const SelmerShape& shape, int k, int delta, int j);

struct SimState {
  int e = 0;
  std::vector<int> d;
  int length() const;
  friend bool operator==(const SimState&, const SimState&) = default;
};

struct SimResult {
  EulerSystemData data;
  std::map<IndexSet, SimState> states;
  int delta_sim = 0;
  int nu_max = 0;
};

/// Labels "l00", "l01", ... with k_l drawn in [k_min, k_min + 2]; `nongeneric`
/// of them (chosen by the seed) are tagged nongeneric.
std::vector<PrimeLabel> make_pool(int size, int nongeneric, int k_min, std::uint64_t seed);

/// Default depth: max(4, 2 * support + e), limited by the pool.
int default_nu_max(const SelmerShape& shape, int pool_size);

/// Brute-force level-raising model over every n with nu(n) <= nu_max.
/// PoolExhausted if fewer than nu_max generic labels are available.
SimResult simulate_system(const SelmerShape& shape, int k, const std::vector<PrimeLabel>& pool,
                          std::uint64_t seed, int nu_max = 0);

struct StratumCheck {
  std::string family;  ///< "lambda", "kappa" or "bridge"
  int j = 0;
  int observed = 0;
  int expected = 0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<StratumCheck> checks;
  bool all_pass() const;
};

VerifyReport verify_artsel(const EulerSystemData& data, const SelmerShape& shape);
/// Only meaningful for e = 1; returns an empty report otherwise.
VerifyReport verify_artkappa(const EulerSystemData& data, const SelmerShape& shape);

struct ReciprocityReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// min(ind_lambda(n), v(I_{nl})) = loc_ord(nl, l) and
/// ind_lambda(nl) = min(loc_unr(n, l), v(I_{nl})) for every recorded pair.
ReciprocityReport reciprocity_check(const EulerSystemData& data);

/// First value of the stabilized tail (at least two equal trailing entries).
int delta_limit(const std::vector<int>& values_by_k);
/// Index into `values_by_k` where the stabilized tail begins.
std::size_t stabilization_start(const std::vector<int>& values_by_k);

/// d_i = delta^(2i+e) - delta^(2i+2+e). NotMonotone if the map or the
/// resulting d is not non-increasing, or the map is not eventually constant.
SelmerShape reconstruct_shape(const std::map<int, int>& delta_values, int e);
/// 2 (delta^(i+e) - delta); ParityMismatch for odd i.
int sha_exponent(const std::map<int, int>& delta_values, int e, int i);

/// delta^(j) for every lambda stratum, by simulating k = k_lo..k_hi on one pool
/// (labels are 2 k_hi admissible) and taking the stabilized value per stratum.
std::map<int, int> simulated_deltas(const SelmerShape& shape, int k_lo, int k_hi, int pool_size,
                                    std::uint64_t seed, int* delta_sim = nullptr);

}  // namespace iwafitt::euler
