#pragma once

#include <map>
#include <vector>

#include "iwafitt/lambda_ideal.hpp"
#include "iwafitt/smith.hpp"
#include "iwafitt/specialization.hpp"

namespace iwafitt::lambda {

/// oplus_s oplus_t Lambda/p_s^{k_{s,t}}, one non-decreasing exponent list per prime.
class ElementaryLambdaModule {
 public:
  struct Component {
    HeightOnePrime prime;
    std::vector<int> exponents;
  };

  ElementaryLambdaModule() = default;
  explicit ElementaryLambdaModule(std::vector<Component> components);

  const std::vector<Component>& components() const noexcept { return components_; }
  /// Common padded length of the exponent lists.
  int length() const noexcept;
  /// Exponent list at a prime, left-padded with zeros to length().
  std::vector<int> padded(const HeightOnePrime& P) const;
  /// M oplus M
  ElementaryLambdaModule doubled() const;

 private:
  std::vector<Component> components_;
};

/// [Fitt_i(E)]: the exponent at p_s is the sum of the first (length - i) padded entries.
PseudoClass elementary_fitting_class(const ElementaryLambdaModule& E, int i);

/// sqrt(F_{2i} * F_{2i+2}); NotASquare if the product has an odd exponent.
PseudoClass odd_from_even(const PseudoClass& F_even, const PseudoClass& F_next_even);

/// The specialization target for P in {(p), (T + c)} at index j, with a working
/// precision chosen large enough for the bounded part.
ring::SpecializationRing specialization_ring(const HeightOnePrime& P, i64 p, int j);

struct SpecializedModule {
  fitting::ElementaryDVRModule module;
  int exponent = 0;  ///< m_j, the Fitt_i exponent over O_j
  int precision = 0;
};

/// E tensored down to O_j = Lambda/P_j. Each cyclic factor Lambda/p_s^k becomes
/// O_j/(s_j(p_s))^k; SupportCollision if s_j(p_s) vanishes at working precision.
SpecializedModule specialize_elementary(const ElementaryLambdaModule& E, const HeightOnePrime& P,
                                        i64 p, int j, int i);

struct SlopeReport {
  int m = 0;           ///< exponent of [Fitt_i(E)] at P
  int e_P = 1;         ///< ramification of O_j over Z_p relative to j
  int bound = 0;       ///< C: total specialized length of the components away from P
  std::vector<std::pair<int, int>> values;  ///< (j, m_j)
  bool bounded = true; ///< 0 <= m_j - m e_P j <= C on the whole window
};

SlopeReport slope_check(const ElementaryLambdaModule& E, const HeightOnePrime& P, i64 p, int i,
                        int j_lo, int j_hi);

struct ParityReport {
  std::map<int, int> slopes;  ///< positive slope -> multiplicity
  bool ok = false;
  bool linear = true;  ///< the tail of the family was linear in j
};

/// Reads per-position slopes from the two largest j of the family and checks
/// that every positive slope has even multiplicity.
ParityReport parity_audit(const std::map<int, fitting::ElementaryDVRModule>& family);

}  // namespace iwafitt::lambda
