#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "iwafitt/series.hpp"

namespace iwafitt::lambda {

using ring::i64;
using ring::IntPoly;
using ring::TruncatedSeries;

/// A height-one prime of Lambda: (p) or a monic distinguished polynomial the
/// caller declares irreducible.
class HeightOnePrime {
 public:
  static HeightOnePrime pi() { return HeightOnePrime(); }
  static HeightOnePrime distinguished(IntPoly f);
  /// T + c
  static HeightOnePrime linear(i64 c) { return distinguished({c, 1}); }

  bool is_pi() const noexcept { return poly_.empty(); }
  const IntPoly& poly() const noexcept { return poly_; }
  int degree() const noexcept { return is_pi() ? 0 : static_cast<int>(poly_.size()) - 1; }
  bool is_linear() const noexcept { return degree() == 1; }
  /// "PI", "T", "T+3", "T^2+3", ...
  std::string name() const;

  friend bool operator==(const HeightOnePrime&, const HeightOnePrime&) = default;
  friend std::strong_ordering operator<=>(const HeightOnePrime& a, const HeightOnePrime& b);

 private:
  HeightOnePrime() = default;
  IntPoly poly_;
};

enum class IrreducibilityStatus { Verified, Trusted, Reducible };

/// Degree <= 2 primes are checked (Eisenstein, then the discriminant over Q_p);
/// higher degrees come back as Trusted.
IrreducibilityStatus check_irreducible(const HeightOnePrime& P, i64 p);

/// Throws InputError unless every prime is distinguished for p, pairwise
/// distinct, and not provably reducible.
void validate_basis(const std::vector<HeightOnePrime>& basis, i64 p);

/// The principal representative of a ~-class, as sorted (prime, exponent)
/// pairs with zero exponents dropped. The trivial class is the empty vector.
class PseudoClass {
 public:
  PseudoClass() = default;
  explicit PseudoClass(std::vector<std::pair<HeightOnePrime, int>> entries);

  const std::vector<std::pair<HeightOnePrime, int>>& entries() const noexcept { return entries_; }
  int exponent_at(const HeightOnePrime& P) const;
  bool is_trivial() const noexcept { return entries_.empty(); }

  PseudoClass operator*(const PseudoClass& o) const;
  PseudoClass squared() const { return *this * *this; }
  /// The halved class, or NotASquare if an exponent is odd.
  PseudoClass halved() const;

  std::string to_string() const;
  friend bool operator==(const PseudoClass&, const PseudoClass&) = default;

 private:
  std::vector<std::pair<HeightOnePrime, int>> entries_;
};

/// An ideal given by generators, each a unit times a product of basis primes.
class LambdaIdealFactored {
 public:
  LambdaIdealFactored(std::vector<HeightOnePrime> basis, std::vector<std::vector<int>> generators);
  static LambdaIdealFactored principal(const PseudoClass& c);

  const std::vector<HeightOnePrime>& basis() const noexcept { return basis_; }
  const std::vector<std::vector<int>>& generators() const noexcept { return generators_; }

  /// Same ideal over a larger basis (the new primes get exponent zero).
  LambdaIdealFactored over(const std::vector<HeightOnePrime>& basis) const;

  LambdaIdealFactored operator+(const LambdaIdealFactored& o) const;
  LambdaIdealFactored operator*(const LambdaIdealFactored& o) const;

 private:
  std::vector<HeightOnePrime> basis_;
  std::vector<std::vector<int>> generators_;
};

std::vector<HeightOnePrime> merge_bases(const std::vector<HeightOnePrime>& a,
                                        const std::vector<HeightOnePrime>& b);

/// min over generators of the exponent at P (0 if P is not in the basis).
int ord_at_prime(const LambdaIdealFactored& I, const HeightOnePrime& P);
/// I < J: ord_P(I) >= ord_P(J) at every prime of the merged support.
bool prec_leq(const LambdaIdealFactored& I, const LambdaIdealFactored& J);
bool sim(const LambdaIdealFactored& I, const LambdaIdealFactored& J);
PseudoClass class_of(const LambdaIdealFactored& I);
/// [I] with J ~ I^2; NotASquare when some ord is odd.
PseudoClass pseudo_square_root(const LambdaIdealFactored& J);
bool admits_pseudo_square_root(const LambdaIdealFactored& J);

/// Factor a series over the declared basis: p^mu is read off as the (p)
/// exponent, the distinguished part is trial-divided by each declared
/// polynomial, and the residual must be 1. UnfactoredResidual otherwise.
/// The result is only certified at the series' precision.
std::vector<int> factor_over_basis(const TruncatedSeries& f, const std::vector<HeightOnePrime>& basis);

/// Series generators reduced to factored form; zero series are dropped.
LambdaIdealFactored ideal_from_series(const std::vector<TruncatedSeries>& gens,
                                      const std::vector<HeightOnePrime>& basis);

/// The series prod P^e at precision (p^K, T^m).
TruncatedSeries series_of(const PseudoClass& c, const ring::ModRing& R, int m);

}  // namespace iwafitt::lambda
