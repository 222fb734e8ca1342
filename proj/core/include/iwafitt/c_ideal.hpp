#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "iwafitt/lambda_module.hpp"

namespace iwafitt::lambda {

/// A lambda-element (or kappa-functional value) tagged with the weight nu(n)
/// of its index.
struct WeightedSeries {
  int nu = 0;
  TruncatedSeries value;
};

/// Generators of weight nu <= i + e, factored over the basis.
LambdaIdealFactored construct_C(const std::vector<WeightedSeries>& elements, int i, int e,
                                const std::vector<HeightOnePrime>& basis);
/// Generators of weight nu <= i.
LambdaIdealFactored construct_D(const std::vector<WeightedSeries>& values, int i,
                                const std::vector<HeightOnePrime>& basis);

/// Specialized order of an ideal in O_j: min over generators, capped at the
/// generators' precision.
ring::CappedValuation specialized_ord(const std::vector<TruncatedSeries>& gens, const HeightOnePrime& P,
                                      i64 p, int j);

/// Least k (from the supplied ascending keys) after which the specialized
/// order stays constant; NoStabilization if the last two differ.
int stabilization_index(const std::map<int, std::vector<TruncatedSeries>>& family, const HeightOnePrime& P,
                        i64 p, int j);

/// Lambda-elements for X = M oplus M: weight i + e (i even) carries generators
/// g * p * u and g * T * u' with g the hidden class of [Fitt_{i/2}(M)].
struct SyntheticFamily {
  ElementaryLambdaModule M;
  int e = 0;
  std::vector<HeightOnePrime> basis;
  std::vector<WeightedSeries> elements;
  int K = 0;
  int m = 0;
};

SyntheticFamily make_synthetic_family(const ElementaryLambdaModule& M, int e, i64 p, std::uint64_t seed);

struct ClassCheck {
  int i = 0;
  std::string rule;  ///< "even" or "odd"
  PseudoClass expected;
  PseudoClass observed;
  bool pass = false;
};

struct ConsistencyReport {
  std::vector<ClassCheck> checks;
  bool all_pass() const;
};

/// Even i: [Fitt_i(X)] = [C_i]^2. Odd i: [Fitt_i(X)] = [C_{i-1} C_{i+1}], and
/// both agree with odd_from_even. C must cover every even i <= length(X).
ConsistencyReport highfitt_consistency(const ElementaryLambdaModule& X,
                                       const std::map<int, LambdaIdealFactored>& C);

}  // namespace iwafitt::lambda
