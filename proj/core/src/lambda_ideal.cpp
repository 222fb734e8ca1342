#include "iwafitt/lambda_ideal.hpp"

#include <algorithm>
#include <map>

#include "iwafitt/weierstrass.hpp"

namespace iwafitt::lambda {

HeightOnePrime HeightOnePrime::distinguished(IntPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.size() < 2 || f.back() != 1)
    fail(ErrorCode::InputError, "height-one prime must be PI or a monic polynomial of degree >= 1");
  HeightOnePrime P;
  P.poly_ = std::move(f);
  return P;
}

std::string HeightOnePrime::name() const { return is_pi() ? "PI" : ring::poly_to_string(poly_); }

std::strong_ordering operator<=>(const HeightOnePrime& a, const HeightOnePrime& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  // compare from the top coefficient down so T < T+3 < T+6
  for (size_t i = a.poly_.size(); i-- > 0;)
    if (a.poly_[i] != b.poly_[i]) return a.poly_[i] <=> b.poly_[i];
  return std::strong_ordering::equal;
}

namespace {

// Is the p-adic integer x (nonzero) a square in Z_p?
bool is_padic_square(i64 x, i64 p) {
  if (x == 0) return true;
  const int v = ring::integer_valuation(p, x);
  if (v % 2 != 0) return false;
  i64 u = x;
  for (int i = 0; i < v; ++i) u /= p;
  if (p == 2) return ((u % 8) + 8) % 8 == 1;
  // Euler's criterion
  const ring::ModRing Fp(p, 1);
  return Fp.pow(Fp.reduce(u), static_cast<std::uint64_t>((p - 1) / 2)) == 1;
}

}  // namespace

IrreducibilityStatus check_irreducible(const HeightOnePrime& P, i64 p) {
  if (P.is_pi() || P.degree() == 1) return IrreducibilityStatus::Verified;
  if (P.degree() > 2) return IrreducibilityStatus::Trusted;
  const i64 c = P.poly()[0], b = P.poly()[1];
  if (ring::integer_valuation(p, c) == 1) return IrreducibilityStatus::Verified;  // Eisenstein
  const __int128 disc = static_cast<__int128>(b) * b - static_cast<__int128>(4) * c;
  if (disc > INT64_MAX || disc < INT64_MIN) return IrreducibilityStatus::Trusted;
  return is_padic_square(static_cast<i64>(disc), p) ? IrreducibilityStatus::Reducible
                                                    : IrreducibilityStatus::Verified;
}

void validate_basis(const std::vector<HeightOnePrime>& basis, i64 p) {
  for (size_t i = 0; i < basis.size(); ++i) {
    const auto& P = basis[i];
    if (!P.is_pi() && !ring::is_distinguished(P.poly(), p))
      fail(ErrorCode::InputError, P.name() + " is not distinguished for p = " + std::to_string(p));
    if (check_irreducible(P, p) == IrreducibilityStatus::Reducible)
      fail(ErrorCode::InputError, P.name() + " is reducible over Z_p");
    for (size_t j = 0; j < i; ++j)
      if (basis[j] == P) fail(ErrorCode::InputError, "prime " + P.name() + " declared twice");
  }
}

PseudoClass::PseudoClass(std::vector<std::pair<HeightOnePrime, int>> entries) {
  std::map<HeightOnePrime, int> acc;
  for (auto& [P, e] : entries) {
    if (e < 0) fail(ErrorCode::InputError, "negative exponent in a class");
    acc[P] += e;
  }
  for (auto& [P, e] : acc)
    if (e != 0) entries_.emplace_back(P, e);
}

int PseudoClass::exponent_at(const HeightOnePrime& P) const {
  for (const auto& [Q, e] : entries_)
    if (Q == P) return e;
  return 0;
}

PseudoClass PseudoClass::operator*(const PseudoClass& o) const {
  auto all = entries_;
  all.insert(all.end(), o.entries_.begin(), o.entries_.end());
  return PseudoClass(std::move(all));
}

PseudoClass PseudoClass::halved() const {
  std::vector<std::pair<HeightOnePrime, int>> out;
  for (const auto& [P, e] : entries_) {
    if (e % 2 != 0)
      fail(ErrorCode::NotASquare, "exponent " + std::to_string(e) + " at " + P.name() + " is odd");
    out.emplace_back(P, e / 2);
  }
  return PseudoClass(std::move(out));
}

std::string PseudoClass::to_string() const {
  if (entries_.empty()) return "(1)";
  std::string s = "(";
  for (size_t i = 0; i < entries_.size(); ++i) {
    const auto& [P, e] = entries_[i];
    if (i) s += " * ";
    const std::string n = P.is_pi() ? "p" : P.name();
    s += (P.degree() > 0 && n.size() > 1 && n != "T") ? "(" + n + ")" : n;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s + ")";
}

LambdaIdealFactored::LambdaIdealFactored(std::vector<HeightOnePrime> basis,
                                         std::vector<std::vector<int>> generators)
    : basis_(std::move(basis)), generators_(std::move(generators)) {
  if (generators_.empty()) fail(ErrorCode::InputError, "the zero ideal is not a valid factored ideal");
  for (size_t i = 0; i < basis_.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (basis_[i] == basis_[j]) fail(ErrorCode::InputError, "prime " + basis_[i].name() + " declared twice");
  for (const auto& g : generators_) {
    if (g.size() != basis_.size())
      fail(ErrorCode::InputError, "generator exponent vector length does not match the basis");
    for (int e : g)
      if (e < 0) fail(ErrorCode::InputError, "negative exponent in a generator");
  }
}

LambdaIdealFactored LambdaIdealFactored::principal(const PseudoClass& c) {
  std::vector<HeightOnePrime> basis;
  std::vector<int> g;
  for (const auto& [P, e] : c.entries()) {
    basis.push_back(P);
    g.push_back(e);
  }
  return LambdaIdealFactored(std::move(basis), {std::move(g)});
}

LambdaIdealFactored LambdaIdealFactored::over(const std::vector<HeightOnePrime>& basis) const {
  std::vector<std::vector<int>> gens;
  for (const auto& g : generators_) {
    std::vector<int> v(basis.size(), 0);
    for (size_t i = 0; i < basis_.size(); ++i) {
      auto it = std::find(basis.begin(), basis.end(), basis_[i]);
      if (it == basis.end()) fail(ErrorCode::InputError, "target basis lacks " + basis_[i].name());
      v[static_cast<size_t>(it - basis.begin())] = g[i];
    }
    gens.push_back(std::move(v));
  }
  return LambdaIdealFactored(basis, std::move(gens));
}

std::vector<HeightOnePrime> merge_bases(const std::vector<HeightOnePrime>& a,
                                        const std::vector<HeightOnePrime>& b) {
  std::vector<HeightOnePrime> out = a;
  for (const auto& P : b)
    if (std::find(out.begin(), out.end(), P) == out.end()) out.push_back(P);
  return out;
}

LambdaIdealFactored LambdaIdealFactored::operator+(const LambdaIdealFactored& o) const {
  const auto basis = merge_bases(basis_, o.basis_);
  auto a = over(basis), b = o.over(basis);
  auto gens = a.generators_;
  for (auto& g : b.generators_)
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  return LambdaIdealFactored(basis, std::move(gens));
}

LambdaIdealFactored LambdaIdealFactored::operator*(const LambdaIdealFactored& o) const {
  const auto basis = merge_bases(basis_, o.basis_);
  auto a = over(basis), b = o.over(basis);
  std::vector<std::vector<int>> gens;
  for (const auto& x : a.generators_)
    for (const auto& y : b.generators_) {
      std::vector<int> g(basis.size());
      for (size_t i = 0; i < g.size(); ++i) g[i] = x[i] + y[i];
      if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));
    }
  return LambdaIdealFactored(basis, std::move(gens));
}

int ord_at_prime(const LambdaIdealFactored& I, const HeightOnePrime& P) {
  const auto& basis = I.basis();
  auto it = std::find(basis.begin(), basis.end(), P);
  if (it == basis.end()) return 0;
  const auto idx = static_cast<size_t>(it - basis.begin());
  int best = I.generators().front()[idx];
  for (const auto& g : I.generators()) best = std::min(best, g[idx]);
  return best;
}

bool prec_leq(const LambdaIdealFactored& I, const LambdaIdealFactored& J) {
  for (const auto& P : merge_bases(I.basis(), J.basis()))
    if (ord_at_prime(I, P) < ord_at_prime(J, P)) return false;
  return true;
}

bool sim(const LambdaIdealFactored& I, const LambdaIdealFactored& J) {
  return prec_leq(I, J) && prec_leq(J, I);
}

PseudoClass class_of(const LambdaIdealFactored& I) {
  std::vector<std::pair<HeightOnePrime, int>> entries;
  for (const auto& P : I.basis()) entries.emplace_back(P, ord_at_prime(I, P));
  return PseudoClass(std::move(entries));
}

PseudoClass pseudo_square_root(const LambdaIdealFactored& J) { return class_of(J).halved(); }

bool admits_pseudo_square_root(const LambdaIdealFactored& J) {
  for (const auto& [P, e] : class_of(J).entries())
    if (e % 2 != 0) return false;
  return true;
}

std::vector<int> factor_over_basis(const TruncatedSeries& f, const std::vector<HeightOnePrime>& basis) {
  std::vector<int> exps(basis.size(), 0);
  const ring::WeierstrassForm wf = ring::weierstrass_prepare(f);
  if (wf.mu > 0) {
    auto it = std::find_if(basis.begin(), basis.end(), [](const HeightOnePrime& P) { return P.is_pi(); });
    if (it == basis.end())
      fail(ErrorCode::UnfactoredResidual, "p divides the series but (p) is not in the basis");
    exps[static_cast<size_t>(it - basis.begin())] = wf.mu;
  }
  const ring::ModRing work(f.p(), wf.valid_K);
  IntPoly residual = wf.dist;
  for (size_t b = 0; b < basis.size(); ++b) {
    const auto& P = basis[b];
    if (P.is_pi()) continue;
    while (ring::degree(residual) >= P.degree()) {
      const int m = ring::degree(residual) + 1;
      const auto division =
          ring::weierstrass_divide(TruncatedSeries::from_poly(work, m, residual), P.poly());
      if (std::any_of(division.remainder.begin(), division.remainder.end(), [](i64 c) { return c != 0; }))
        break;
      const int qdeg = ring::degree(residual) - P.degree();
      IntPoly q(static_cast<size_t>(qdeg) + 1);
      for (int i = 0; i <= qdeg; ++i) q[static_cast<size_t>(i)] = division.quotient[i];
      residual = std::move(q);
      ++exps[b];
    }
  }
  if (ring::degree(residual) != 0)
    fail(ErrorCode::UnfactoredResidual,
         "distinguished residual " + ring::poly_to_string(residual) + " is not a product of basis primes");
  return exps;
}

LambdaIdealFactored ideal_from_series(const std::vector<TruncatedSeries>& gens,
                                      const std::vector<HeightOnePrime>& basis) {
  std::vector<std::vector<int>> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto e = factor_over_basis(g, basis);
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
  }
  if (out.empty()) fail(ErrorCode::InputError, "no nonzero generators at this precision");
  return LambdaIdealFactored(basis, std::move(out));
}

TruncatedSeries series_of(const PseudoClass& c, const ring::ModRing& R, int m) {
  TruncatedSeries acc = TruncatedSeries::constant(R, m, 1);
  for (const auto& [P, e] : c.entries()) {
    const TruncatedSeries factor = P.is_pi() ? TruncatedSeries::constant(R, m, R.p())
                                             : TruncatedSeries::from_poly(R, m, P.poly());
    for (int k = 0; k < e; ++k) acc = acc * factor;
  }
  return acc;
}

}  // namespace iwafitt::lambda
