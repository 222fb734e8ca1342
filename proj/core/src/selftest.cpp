#include "iwafitt/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "iwafitt/c_ideal.hpp"
#include "iwafitt/euler.hpp"
#include "iwafitt/fitting.hpp"
#include "iwafitt/lambda_module.hpp"
#include "iwafitt/smith.hpp"

namespace iwafitt::selftest {

namespace {

using fitting::ElementaryDVRModule;
using fitting::PresentationMatrix;
using fitting::RingDescriptor;
using fitting::RingKind;
using lambda::HeightOnePrime;
using lambda::LambdaIdealFactored;
using lambda::PseudoClass;
using ring::bounded_draw;
using ring::i64;

/// Counts instances and keeps the first failure message.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_++ == 0) first_ = what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  bool ok() const { return failures_ == 0; }
  std::string detail() const {
    std::ostringstream os;
    os << checks_ << " checks, " << failures_ << " failed";
    if (!notes_.empty()) os << "; " << notes_;
    if (failures_) os << "; first failure: " << first_;
    return os.str();
  }

 private:
  long checks_ = 0, failures_ = 0;
  std::string first_, notes_;
};

PresentationMatrix random_dvr_matrix(std::mt19937_64& gen, const RingDescriptor& ring, int rows, int cols) {
  const ring::ModRing R = ring.coefficients();
  std::vector<i64> e;
  for (int i = 0; i < rows * cols; ++i) {
    if (bounded_draw(gen(), 0, 4) == 0) {
      e.push_back(0);
      continue;
    }
    const int v = static_cast<int>(bounded_draw(gen(), 0, 4));
    e.push_back(R.mul(bounded_draw(gen(), 1, R.modulus() - 1), R.p_power(v)));
  }
  return PresentationMatrix::scalar(ring, rows, cols, std::move(e));
}

std::string vec(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// 1
Tally minors_vs_snf() {
  Tally t;
  std::mt19937_64 gen(101);
  const i64 primes[] = {3, 5, 7};
  for (int inst = 0; inst < 200; ++inst) {
    const RingDescriptor ring{RingKind::Dvr, primes[inst % 3], 12, 1};
    const int n = static_cast<int>(bounded_draw(gen(), 1, 6));
    const int k = static_cast<int>(bounded_draw(gen(), 1, 6));
    const auto M = random_dvr_matrix(gen, ring, n, k);
    const auto E = fitting::dvr_structure(M, true);
    for (int i = 0; i <= 6; ++i) {
      const int minors = fitting::fitting_ideal(M, i).exponent;
      const int formula = std::min(12, fitting::fitting_from_structure(E, i));
      t.check(minors == formula, "instance " + std::to_string(inst) + ", i=" + std::to_string(i) + ": minors " +
                                     std::to_string(minors) + " vs structure " + std::to_string(formula));
    }
  }
  return t;
}

// 2
Tally dvr_spot_values() {
  Tally t;
  const auto M = PresentationMatrix::diagonal({RingKind::Dvr, 3, 12, 1}, {1, 2, 3});
  const auto ex = fitting::fitting_exponents(M);
  t.check(ex == std::vector<int>{6, 3, 1, 0}, "diag(p,p^2,p^3) gave " + vec(ex));
  const auto E = fitting::ElementaryDVRModule::from_exponents({1, 2, 3});
  for (int i = 0; i <= 3; ++i)
    t.check(fitting::fitting_from_structure(E, i) == ex[static_cast<size_t>(i)], "c_" + std::to_string(i));
  return t;
}

// 3
Tally fitting_properties() {
  Tally t;
  std::mt19937_64 gen(303);
  for (int inst = 0; inst < 120; ++inst) {
    const RingDescriptor ring{RingKind::Dvr, inst % 2 ? 5 : 3, 10, 1};
    const int n = static_cast<int>(bounded_draw(gen(), 1, 5));
    const int k = static_cast<int>(bounded_draw(gen(), 1, 5));
    const auto M = random_dvr_matrix(gen, ring, n, k);
    const auto base = fitting::fitting_exponents(M);
    const std::string id = "instance " + std::to_string(inst);
    for (int i = 1; i <= n; ++i)
      t.check(base[static_cast<size_t>(i)] <= base[static_cast<size_t>(i - 1)], id + ": chain at i=" + std::to_string(i));

    const int K2 = static_cast<int>(bounded_draw(gen(), 1, 9));
    const auto low = fitting::fitting_exponents(M.reduced(K2));
    for (int i = 0; i <= n; ++i)
      t.check(low[static_cast<size_t>(i)] == std::min(K2, base[static_cast<size_t>(i)]), id + ": base change");

    const int r = static_cast<int>(bounded_draw(gen(), 1, 3));
    const auto more = fitting::fitting_exponents(M.with_columns(random_dvr_matrix(gen, ring, n, r)));
    for (int i = 0; i <= n; ++i)
      t.check(more[static_cast<size_t>(i)] <= base[static_cast<size_t>(i)], id + ": surjection");
    // R^r -> N -> B -> 0: Fitt_j(B) is contained in Fitt_{r+j}(N)
    for (int j = 0; j + r <= n; ++j)
      t.check(more[static_cast<size_t>(j)] >= base[static_cast<size_t>(j + r)], id + ": product inclusion");

    const auto N = random_dvr_matrix(gen, ring, static_cast<int>(bounded_draw(gen(), 1, 3)), 3);
    const auto sum = fitting::fitting_exponents(M.direct_sum(N));
    const auto E1 = fitting::dvr_structure(M, true), E2 = fitting::dvr_structure(N, true);
    for (int i = 0; i <= M.rows() + N.rows(); ++i) {
      const int split = std::min(10, fitting::direct_sum_fitting(E1, E2, i));
      t.check(sum[static_cast<size_t>(i)] == split, id + ": direct sum at i=" + std::to_string(i));
      t.check(split == std::min(10, fitting::fitting_from_structure(fitting::merge(E1, E2), i)), id + ": merged list");
    }
  }
  for (int a = 0; a <= 8; ++a)
    t.check(fitting::fitting_ideal(PresentationMatrix::diagonal({RingKind::Dvr, 7, 8, 1}, {a}), 0).exponent == a,
            "Fitt_0(R/p^a)");
  return t;
}

const std::vector<HeightOnePrime>& ideal_basis() {
  static const std::vector<HeightOnePrime> b{HeightOnePrime::pi(), HeightOnePrime::linear(0),
                                             HeightOnePrime::linear(3), HeightOnePrime::distinguished({3, 0, 1})};
  return b;
}

LambdaIdealFactored random_ideal(std::mt19937_64& gen) {
  const auto& basis = ideal_basis();
  std::vector<std::vector<int>> gens(static_cast<size_t>(bounded_draw(gen(), 1, 3)));
  for (auto& g : gens)
    for (size_t b = 0; b < basis.size(); ++b) g.push_back(static_cast<int>(bounded_draw(gen(), 0, 2)));
  return LambdaIdealFactored(basis, std::move(gens));
}

// 4
Tally ideal_calculus() {
  Tally t;
  std::mt19937_64 gen(404);
  for (int inst = 0; inst < 500; ++inst) {
    const auto a = random_ideal(gen), b = random_ideal(gen), c = random_ideal(gen);
    const std::string id = "triple " + std::to_string(inst);
    t.check(lambda::sim(a, a), id + ": reflexive");
    t.check(lambda::sim(a, b) == lambda::sim(b, a), id + ": symmetric");
    if (lambda::sim(a, b) && lambda::sim(b, c)) t.check(lambda::sim(a, c), id + ": transitive");
    // random triples are rarely related, so also chain a ~ (f) ~ a + (f) with (f) the representative
    const auto ra = LambdaIdealFactored::principal(lambda::class_of(a));
    const bool chained = lambda::sim(a, ra) && lambda::sim(ra, a + ra);
    t.check(chained, id + ": representative chain");
    if (chained) t.check(lambda::sim(a, a + ra), id + ": transitive via representative");
  }
  for (int inst = 0; inst < 100; ++inst) {
    const auto I = random_ideal(gen);
    t.check(lambda::pseudo_square_root(I * I) == lambda::class_of(I), "sqrt of a square, instance " + std::to_string(inst));
  }
  const auto& B = ideal_basis();
  const LambdaIdealFactored p2_pT({B[0], B[1]}, {{2, 0}, {1, 1}});
  t.check(lambda::sim(p2_pT, LambdaIdealFactored({B[0]}, {{1}})), "(p^2, pT) ~ (p)");
  bool rejected = false;
  try {
    lambda::pseudo_square_root(LambdaIdealFactored({B[0], B[1]}, {{1, 1}}));
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::NotASquare;
  }
  t.check(rejected, "(pT) has no pseudo-square root");
  return t;
}

lambda::ElementaryLambdaModule random_module(std::mt19937_64& gen, const std::vector<HeightOnePrime>& primes,
                                             int max_len, int max_exp) {
  std::vector<lambda::ElementaryLambdaModule::Component> comps;
  for (const auto& P : primes) {
    const int n = static_cast<int>(bounded_draw(gen(), 0, max_len));
    if (n == 0) continue;
    std::vector<int> e;
    for (int i = 0; i < n; ++i) e.push_back(static_cast<int>(bounded_draw(gen(), 1, max_exp)));
    std::sort(e.begin(), e.end());
    comps.push_back({P, std::move(e)});
  }
  return lambda::ElementaryLambdaModule(std::move(comps));
}

// 5
Tally even_odd_law() {
  Tally t;
  std::mt19937_64 gen(505);
  for (int inst = 0; inst < 100; ++inst) {
    const auto M = random_module(gen, ideal_basis(), 3, 4);
    const auto Y = M.doubled();
    for (int i = 0; 2 * i + 2 <= Y.length(); ++i) {
      const auto direct = lambda::elementary_fitting_class(Y, 2 * i + 1);
      const auto law = lambda::odd_from_even(lambda::elementary_fitting_class(Y, 2 * i),
                                             lambda::elementary_fitting_class(Y, 2 * i + 2));
      t.check(direct == law, "module " + std::to_string(inst) + ", i=" + std::to_string(i) + ": " +
                                 direct.to_string() + " vs " + law.to_string());
    }
  }
  return t;
}

// 6
Tally slope_law() {
  Tally t;
  std::mt19937_64 gen(606);
  const i64 p = 3;
  const auto& B = ideal_basis();
  const HeightOnePrime probes[] = {B[0], B[1]};
  for (int inst = 0; inst < 50; ++inst) {
    const auto M = random_module(gen, B, 3, 3);
    const std::string id = "module " + std::to_string(inst);
    for (const auto& P : probes) {
      for (int i = 0; i <= M.length(); ++i) {
        const auto r = lambda::slope_check(M, P, p, i, 3, 10);
        t.check(r.bounded, id + " at " + P.name() + ", i=" + std::to_string(i) + ": deviation exceeds C=" +
                               std::to_string(r.bound));
      }
      std::map<int, ElementaryDVRModule> fam;
      for (int j = 3; j <= 10; ++j) fam[j] = lambda::specialize_elementary(M.doubled(), P, p, j, 0).module;
      t.check(lambda::parity_audit(fam).ok, id + ": parity of the doubled module at " + P.name());
    }
  }
  std::map<int, ElementaryDVRModule> witness;
  const lambda::ElementaryLambdaModule single({{B[0], {1}}});
  for (int j = 3; j <= 10; ++j) witness[j] = lambda::specialize_elementary(single, B[0], p, j, 0).module;
  t.check(!lambda::parity_audit(witness).ok, "Lambda/(p) alone must fail the parity audit");
  return t;
}

euler::SelmerShape random_shape(std::mt19937_64& gen, int e, int max_support, int max_total) {
  const int supp = static_cast<int>(bounded_draw(gen(), 0, max_support));
  std::vector<int> d;
  int total = 0;
  for (int i = 0; i < supp; ++i) {
    const int cap = std::min(d.empty() ? 3 : d.back(), max_total - total);
    if (cap < 1) break;
    d.push_back(static_cast<int>(bounded_draw(gen(), 1, cap)));
    total += d.back();
  }
  return euler::SelmerShape::make(e, std::move(d));
}

// 7
Tally artsel_oracle() {
  Tally t;
  for (int inst = 0; inst < 500; ++inst) {
    std::mt19937_64 gen(700 + static_cast<std::uint64_t>(inst));
    const int e = inst % 2;
    const int k = static_cast<int>(bounded_draw(gen(), 1, 6));
    // nu <= 4 sees the full tail only when 2 * support + e <= 4
    const auto shape = random_shape(gen, e, (4 - e) / 2, 6);
    const int pool_size = static_cast<int>(bounded_draw(gen(), 6, 10));
    const int nongeneric = static_cast<int>(bounded_draw(gen(), 0, pool_size - 4));
    const auto pool = euler::make_pool(pool_size, nongeneric, k, gen());
    const auto sim = euler::simulate_system(shape, k, pool, gen(), 4);
    const std::string id = "run " + std::to_string(inst) + " shape " + shape.to_string() + " k=" + std::to_string(k);
    for (const auto& c : euler::verify_artsel(sim.data, shape).checks)
      t.check(c.pass, id + ": lambda stratum " + std::to_string(c.j) + " observed " + std::to_string(c.observed) +
                          " expected " + std::to_string(c.expected));
    if (e == 1) {
      const auto kap = euler::verify_artkappa(sim.data, shape);
      t.check(!kap.checks.empty(), id + ": no kappa strata");
      for (const auto& c : kap.checks)
        t.check(c.pass, id + ": " + c.family + " check at j=" + std::to_string(c.j));
    }
  }
  return t;
}

// 8
Tally dvr_round_trip() {
  Tally t;
  for (int inst = 0; inst < 40; ++inst) {
    std::mt19937_64 gen(800 + static_cast<std::uint64_t>(inst));
    const int e = inst % 2;
    const auto shape = random_shape(gen, e, 3, 6);
    // saturation threshold: k_lo > delta_sim + sum d (delta_sim <= 3)
    const int k_lo = 4 + shape.total();
    int delta_sim = 0;
    const auto deltas = euler::simulated_deltas(shape, k_lo, k_lo + 4, 10, gen(), &delta_sim);
    const std::string id = "shape " + shape.to_string();
    euler::SelmerShape back;
    try {
      back = euler::reconstruct_shape(deltas, e);
    } catch (const Error& err) {
      t.check(false, id + ": " + err.what());
      continue;
    }
    t.check(back == shape, id + ": reconstructed " + back.to_string());
    std::vector<int> doubled;
    for (int d : shape.d) doubled.insert(doubled.end(), {d, d});
    const auto X = ElementaryDVRModule::from_exponents(doubled);
    for (int i = 0; i <= 2 * static_cast<int>(shape.d.size()) + 2; i += 2) {
      const int sha = euler::sha_exponent(deltas, e, i);
      t.check(sha == fitting::fitting_from_structure(X, i), id + ": sha exponent at i=" + std::to_string(i));
      t.check(sha == 2 * (deltas.count(i + e) ? deltas.at(i + e) - delta_sim : 0), id + ": 2(delta^(i+e) - delta)");
    }
  }
  return t;
}

// 9
Tally reciprocity() {
  Tally t;
  int perturbations = 0;
  for (int inst = 0; inst < 100; ++inst) {
    std::mt19937_64 gen(900 + static_cast<std::uint64_t>(inst));
    const int e = inst % 2;
    const int k = static_cast<int>(bounded_draw(gen(), 1, 6));
    const auto shape = random_shape(gen, e, (4 - e) / 2, 6);
    const auto pool = euler::make_pool(static_cast<int>(bounded_draw(gen(), 5, 8)), 1, k, gen());
    const auto sim = euler::simulate_system(shape, k, pool, gen(), 4);
    const std::string id = "run " + std::to_string(inst);
    t.check(euler::reciprocity_check(sim.data).ok(), id + ": simulator output violates a law");

    auto bump = [&](int v) { return v == k ? k - 1 : v + 1; };
    auto perturb = [&](auto member, const char* what) {
      const auto& m = sim.data.*member;
      if (m.empty() || k == 0) return;
      auto it = m.begin();
      std::advance(it, static_cast<long>(bounded_draw(gen(), 0, static_cast<i64>(m.size()) - 1)));
      auto data = sim.data;
      (data.*member)[it->first] = bump(it->second);
      ++perturbations;
      t.check(!euler::reciprocity_check(data).ok(), id + ": undetected perturbation of " + what);
    };
    for (int r = 0; r < 5; ++r) {
      perturb(&euler::EulerSystemData::ind_lambda, "ind_lambda");
      perturb(&euler::EulerSystemData::loc_ord, "loc_ord");
      perturb(&euler::EulerSystemData::loc_unr, "loc_unr");
    }
  }
  t.note(std::to_string(perturbations) + " perturbations");
  return t;
}

// 10
Tally pipeline_consistency() {
  Tally t;
  std::mt19937_64 gen(1010);
  const auto& B = ideal_basis();
  int probes = 0;
  for (int inst = 0; inst < 100; ++inst) {
    const auto M = random_module(gen, B, 2, 2);
    const int e = inst % 2;
    const auto fam = lambda::make_synthetic_family(M, e, 3, gen());
    std::map<int, LambdaIdealFactored> C;
    const auto X = M.doubled();
    for (int i = 0; i <= X.length(); i += 2) C.emplace(i, lambda::construct_C(fam.elements, i, e, fam.basis));
    const std::string id = "pair " + std::to_string(inst);
    for (const auto& c : lambda::highfitt_consistency(X, C).checks)
      t.check(c.pass, id + ": " + c.rule + " i=" + std::to_string(c.i) + " expected " + c.expected.to_string() +
                          " observed " + c.observed.to_string());

    // stabilization: the weight-e generators probed at (T), j = 3
    std::vector<lambda::TruncatedSeries> gens;
    for (const auto& w : fam.elements)
      if (w.nu <= e) gens.push_back(w.value);
    const auto full = lambda::specialized_ord(gens, B[1], 3, 3);
    if (!full.exact() || full.value + 3 > fam.K) continue;
    const int k0 = std::max(1, full.value);  // unramified probe: ord(k) = min(v, k)
    std::map<int, std::vector<lambda::TruncatedSeries>> family;
    for (int k = 1; k <= k0 + 3; ++k) {
      auto& g = family[k];
      for (const auto& s : gens) g.push_back(s.with_precision(k));
    }
    ++probes;
    t.check(lambda::stabilization_index(family, B[1], 3, 3) == k0, id + ": stabilization index");
  }
  // a generator with a p^4 defect stabilizes at k = 4
  const ring::ModRing R(3, 12);
  std::map<int, std::vector<lambda::TruncatedSeries>> defect;
  for (int k = 1; k <= 8; ++k)
    defect[k] = {(lambda::TruncatedSeries::constant(R, 6, 81) * lambda::TruncatedSeries::from_poly(R, 6, {2, 1}))
                     .with_precision(k)};
  t.check(lambda::stabilization_index(defect, B[1], 3, 3) == 4, "p^4 defect");
  t.note(std::to_string(probes) + " stabilization probes");
  return t;
}

struct Criterion {
  int id;
  const char* tag;
  const char* title;
  Tally (*run)();
};

const Criterion kCriteria[] = {
    {1, "fitting", "minors agree with Smith normal form", minors_vs_snf},
    {2, "fitting", "DVR Fitting spot values", dvr_spot_values},
    {3, "fitting", "Fitting ideal properties", fitting_properties},
    {4, "lambda", "ideal calculus", ideal_calculus},
    {5, "lambda", "even/odd law", even_odd_law},
    {6, "lambda", "specialization slope and parity", slope_law},
    {7, "euler", "index formulas against the simulator", artsel_oracle},
    {8, "euler", "shape reconstruction round trip", dvr_round_trip},
    {9, "euler", "reciprocity laws", reciprocity},
    {10, "euler", "Fitting class pipeline and stabilization", pipeline_consistency},
};

}  // namespace

bool filter_matches(const std::string& filter, int id, const std::string& tag) {
  if (filter.empty()) return true;
  std::stringstream ss(filter);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == tag || tok == std::to_string(id) || tok == "all") return true;
  }
  return false;
}

std::vector<CriterionResult> run(const std::string& filter) {
  std::vector<CriterionResult> out;
  for (const auto& c : kCriteria) {
    if (!filter_matches(filter, c.id, c.tag)) continue;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r{c.id, c.tag, c.title, false, "", 0.0};
    try {
      const Tally t = c.run();
      r.pass = t.ok();
      r.detail = t.detail();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace iwafitt::selftest
