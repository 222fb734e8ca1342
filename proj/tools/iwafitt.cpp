#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "iwafitt/selftest.hpp"
#include "json_io.hpp"

namespace {

using namespace iwafitt;
using cli::json;
using cli::Node;
using ring::i64;

struct Flags {
  std::string in;
  std::string out;
  std::string format = "json";
  std::string shape;
  std::string filter;
  int index = -1;
  int stratum = -1;
  int K = 0;
  int m = 0;
  int k = 0;
  int pool = 0;
  int nongeneric = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool timing = false;
};

struct Report {
  json precision = json::object();
  json result = json::object();
  std::optional<bool> pass;
  std::vector<std::string> warnings;
  bool uses_seed = false;
};

using Handler = std::function<Report(const Flags&)>;

enum Opt : unsigned {
  kIn = 1u << 0,
  kInOptional = 1u << 1,
  kIndex = 1u << 2,
  kStratum = 1u << 3,
  kSeed = 1u << 4,
  kPrecK = 1u << 5,
  kTruncM = 1u << 6,
  kLengthK = 1u << 7,
  kPool = 1u << 8,
  kShape = 1u << 9,
  kFilter = 1u << 10,
  kNongeneric = 1u << 11,
};

int require(int value, const char* flag) {
  if (value < 0) throw cli::InputError("", std::string(flag) + " is required");
  return value;
}

json precision_of(const ring::TruncatedSeries& f) { return {{"p", f.p()}, {"K", f.K()}, {"m", f.m()}}; }

// irreducibility status of every non-(p) prime, as report warnings
void basis_warnings(const std::vector<lambda::HeightOnePrime>& basis, const Node& root, Report& r) {
  for (const auto& P : basis) {
    if (P.is_pi()) continue;
    if (!root.has("p")) {
      r.warnings.push_back("irreducibility of " + P.name() + " unchecked (no \"p\" given)");
      continue;
    }
    if (lambda::check_irreducible(P, root.at("p").as_int()) == lambda::IrreducibilityStatus::Trusted)
      r.warnings.push_back("irreducibility of " + P.name() + " trusted, not verified");
  }
}

std::vector<lambda::HeightOnePrime> module_primes(const lambda::ElementaryLambdaModule& M) {
  std::vector<lambda::HeightOnePrime> out;
  for (const auto& c : M.components()) out.push_back(c.prime);
  return out;
}

std::pair<int, int> read_window(const Node& root) {
  if (!root.has("window")) return {3, 10};
  const Node w = root.at("window");
  if (w.size() != 2) w.error("expected [j_lo, j_hi]");
  return {w.at(0).as_int(1, 40), w.at(1).as_int(1, 40)};
}

// ---- fitt ----

Report cmd_fitt(const Flags& f) {
  const json doc = cli::load_document(f.in);
  const auto M = cli::read_matrix(Node(doc, ""), f.K);
  const auto& ring = M.ring();
  Report r;
  r.precision = {{"ring", fitting::to_string(ring.kind)}, {"p", ring.p}, {"K", ring.K}};
  if (!ring.is_principal()) r.precision["m"] = ring.m;
  auto ideal_json = [&](const fitting::FittingIdealResult& F) {
    json j{{"index", F.index}};
    if (ring.is_principal()) {
      j["exponent"] = F.exponent;
    } else {
      j["unit_ideal"] = F.unit_ideal;
      json gens = json::array();
      for (const auto& g : F.generators) gens.push_back(cli::series_json(g));
      j["generators"] = std::move(gens);
    }
    return j;
  };
  if (f.index >= 0) {
    r.result = ideal_json(fitting::fitting_ideal(M, f.index));
  } else if (ring.is_principal()) {
    r.result["exponents"] = fitting::fitting_exponents(M);
  } else {
    json all = json::array();
    for (int i = 0; i <= M.rows(); ++i) all.push_back(ideal_json(fitting::fitting_ideal(M, i)));
    r.result["ideals"] = std::move(all);
  }
  return r;
}

// ---- series ----

Report cmd_series_prepare(const Flags& f) {
  const json doc = cli::load_document(f.in);
  const auto s = cli::read_series(Node(doc, ""), {f.K, f.m});
  const auto W = ring::weierstrass_prepare(s);
  Report r;
  r.precision = precision_of(s);
  r.precision["valid_K"] = W.valid_K;
  r.precision["valid_m"] = W.valid_m;
  r.result = {{"mu", W.mu}, {"degree", W.degree()}, {"dist", W.dist}, {"unit", cli::series_json(W.unit)}};
  return r;
}

Report cmd_series_divide(const Flags& f) {
  const json doc = cli::load_document(f.in);
  const Node root(doc, "");
  const auto s = cli::read_series(root.at("series"), {f.K, f.m});
  const Node dn = root.at("divisor");
  const auto P = dn.as_int_list();
  const auto D = cli::at_node(dn, [&] { return ring::weierstrass_divide(s, P); });
  Report r;
  r.precision = precision_of(s);
  r.result = {{"quotient", cli::series_json(D.quotient)}, {"remainder", D.remainder}};
  return r;
}

// ---- ideal ----

Report ideal_report() {
  Report r;
  r.precision = {{"exact", true}};
  return r;
}

Report cmd_ideal_ord(const Flags& f) {
  const json doc = cli::load_document(f.in);
  const Node root(doc, "");
  const auto I = cli::read_ideal(root);
  Report r = ideal_report();
  basis_warnings(I.basis(), root, r);
  json ord = json::object();
  for (const auto& P : I.basis()) ord[P.name()] = lambda::ord_at_prime(I, P);
  r.result["ord"] = std::move(ord);
  return r;
}

Report cmd_ideal_compare(const Flags& f, bool sim) {
  const json doc = cli::load_document(f.in);
  const Node root(doc, "");
  const auto I = cli::read_ideal(root.at("I"));
  const auto J = cli::read_ideal(root.at("J"));
  Report r = ideal_report();
  basis_warnings(I.basis(), root.at("I"), r);
  basis_warnings(J.basis(), root.at("J"), r);
  r.result["class_I"] = cli::class_json(lambda::class_of(I));
  r.result["class_J"] = cli::class_json(lambda::class_of(J));
  r.result[sim ? "sim" : "prec"] = sim ? lambda::sim(I, J) : lambda::prec_leq(I, J);
  return r;
}

Report cmd_ideal_principal(const Flags& f) {
  const json doc = cli::load_document(f.in);
  const Node root(doc, "");
  const auto I = cli::read_ideal(root);
  Report r = ideal_report();
  basis_warnings(I.basis(), root, r);
  const auto c = lambda::class_of(I);
  r.result = {{"class", cli::class_json(c)}, {"representative", c.to_string()}};
  return r;
}

Report cmd_ideal_sqrt(const Flags& f) {
  const json doc = cli::load_document(f.in);
  const Node root(doc, "");
  const auto I = cli::read_ideal(root);
  Report r = ideal_report();
  basis_warnings(I.basis(), root, r);
  r.result["class"] = cli::class_json(cli::at_node(root, [&] { return lambda::pseudo_square_root(I); }));
  return r;
}

// ---- lambda-module ----

Report cmd_module_fitt_class(const Flags& f) {
  const json doc = cli::load_document(f.in);
  const Node root(doc, "");
  const auto M = cli::read_module(root);
  Report r = ideal_report();
  basis_warnings(module_primes(M), root, r);
  r.result["length"] = M.length();
  if (f.index >= 0) {
    r.result["index"] = f.index;
    r.result["class"] = cli::class_json(lambda::elementary_fitting_class(M, f.index));
  } else {
    json all = json::array();
    for (int i = 0; i <= M.length(); ++i)
      all.push_back({{"index", i}, {"class", cli::class_json(lambda::elementary_fitting_class(M, i))}});
    r.result["classes"] = std::move(all);
  }
  return r;
}

struct ModuleAt {
  lambda::ElementaryLambdaModule M;
  lambda::HeightOnePrime P = lambda::HeightOnePrime::pi();
  i64 p = 0;
};

ModuleAt read_module_at(const Node& root, Report& r) {
  ModuleAt out{cli::read_module(root), cli::read_prime(root.at("at")), root.at("p").as_int()};
  basis_warnings(module_primes(out.M), root, r);
  return out;
}

Report cmd_module_specialize(const Flags& f) {
  const json doc = cli::load_document(f.in);
  const Node root(doc, "");
  Report r;
  const auto [M, P, p] = read_module_at(root, r);
  const int j = require(f.stratum, "--stratum");
  const int i = std::max(f.index, 0);
  const auto S = cli::at_node(root, [&] { return lambda::specialize_elementary(M, P, p, j, i); });
  r.precision = {{"ring", "O_j"}, {"p", p}, {"K", S.precision}, {"ramification", P.is_pi() ? j : 1}};
  r.result = {{"at", P.name()}, {"j", j}, {"index", i}, {"module", S.module.exponents}, {"exponent", S.exponent}};
  return r;
}

Report cmd_module_slope(const Flags& f) {
  const json doc = cli::load_document(f.in);
  const Node root(doc, "");
  Report r;
  const auto [M, P, p] = read_module_at(root, r);
  const auto [lo, hi] = read_window(root);
  const int i = std::max(f.index, 0);
  const auto S = cli::at_node(root, [&] { return lambda::slope_check(M, P, p, i, lo, hi); });
  r.precision = {{"ring", "O_j"}, {"p", p}, {"K", lambda::specialization_ring(P, p, hi).coefficients().K()}};
  json values = json::array();
  for (const auto& [j, mj] : S.values) values.push_back({{"j", j}, {"m_j", mj}});
  r.result = {{"at", P.name()}, {"index", i},      {"m", S.m},           {"e_P", S.e_P},
              {"bound", S.bound}, {"window", {lo, hi}}, {"values", values}, {"bounded", S.bounded}};
  r.pass = S.bounded;
  return r;
}

Report cmd_module_parity(const Flags& f) {
  const json doc = cli::load_document(f.in);
  const Node root(doc, "");
  Report r = ideal_report();
  std::map<int, fitting::ElementaryDVRModule> family;
  if (root.has("family")) {
    const Node fam = root.at("family");
    for (const auto& key : fam.keys()) {
      const Node e = fam.at(key);
      const int j = cli::int_key(fam, key);
      family[j] = cli::at_node(e, [&] { return fitting::ElementaryDVRModule::from_exponents(e.as_int_list(0, 1 << 20)); });
    }
  } else {
    const auto [M, P, p] = read_module_at(root, r);
    const auto [lo, hi] = read_window(root);
    const int i = std::max(f.index, 0);
    for (int j = lo; j <= hi; ++j)
      family[j] = cli::at_node(root, [&] { return lambda::specialize_elementary(M, P, p, j, i).module; });
    r.precision = {{"ring", "O_j"}, {"p", p}, {"K", lambda::specialization_ring(P, p, hi).coefficients().K()}};
  }
  const auto A = lambda::parity_audit(family);
  json slopes = json::object();
  for (const auto& [s, mult] : A.slopes) slopes[std::to_string(s)] = mult;
  r.result = {{"slopes", slopes}, {"linear", A.linear}, {"ok", A.ok}};
  r.pass = A.ok;
  return r;
}

// ---- euler ----

euler::SelmerShape shape_flag(const Flags& f) {
  if (f.shape.empty()) throw cli::InputError("", "--shape is required");
  try {
    return euler::SelmerShape::parse(f.shape);
  } catch (const Error& e) {
    throw cli::InputError("", std::string("--shape: ") + e.what());
  }
}

euler::SimResult simulate(const Flags& f, const euler::SelmerShape& shape) {
  const int k = require(f.k > 0 ? f.k : -1, "--k");
  const int pool_size = f.pool > 0 ? f.pool : 8;
  const auto pool = euler::make_pool(pool_size, f.nongeneric, k, f.seed);
  return euler::simulate_system(shape, k, pool, f.seed);
}

Report cmd_euler_simulate(const Flags& f) {
  const auto shape = shape_flag(f);
  const auto sim = simulate(f, shape);
  Report r;
  r.uses_seed = true;
  r.precision = {{"k", sim.data.k}};
  r.result = {{"shape", shape.to_string()},
              {"delta_sim", sim.delta_sim},
              {"nu_max", sim.nu_max},
              {"data", cli::system_json(sim.data)}};
  return r;
}

Report cmd_euler_verify(const Flags& f) {
  Report r;
  euler::EulerSystemData data;
  euler::SelmerShape shape;
  if (!f.in.empty()) {
    const json doc = cli::load_document(f.in);
    const Node top(doc, "");
    // a simulate report is accepted as is
    const Node root = top.has("result") ? top.at("result") : top;
    data = cli::read_system(root.has("data") ? root.at("data") : root);
    if (!f.shape.empty()) {
      shape = shape_flag(f);
    } else {
      const Node sn = root.at("shape");
      shape = cli::at_node(sn, [&] { return euler::SelmerShape::parse(sn.as_string()); });
    }
  } else {
    shape = shape_flag(f);
    auto sim = simulate(f, shape);
    r.uses_seed = true;
    r.result["delta_sim"] = sim.delta_sim;
    r.result["nu_max"] = sim.nu_max;
    data = std::move(sim.data);
  }
  r.precision = {{"k", data.k}};
  if (shape.e != 1 - data.epsilon) throw cli::InputError("", "shape parity disagrees with epsilon");
  auto checks = euler::verify_artsel(data, shape);
  const auto kap = euler::verify_artkappa(data, shape);
  checks.checks.insert(checks.checks.end(), kap.checks.begin(), kap.checks.end());
  const auto rec = euler::reciprocity_check(data);
  r.result["shape"] = shape.to_string();
  r.result["checks"] = cli::checks_json(checks);
  r.result["reciprocity"] = {{"ok", rec.ok()}, {"violations", rec.violations}};
  r.pass = checks.all_pass() && rec.ok();
  return r;
}

Report cmd_euler_reconstruct(const Flags& f) {
  Report r;
  std::map<int, int> delta;
  int e = 0;
  std::optional<euler::SelmerShape> expected;
  if (!f.shape.empty()) expected = shape_flag(f);
  if (!f.in.empty()) {
    const json doc = cli::load_document(f.in);
    const Node root(doc, "");
    e = root.at("e").as_int(0, 1);
    delta = cli::read_int_map(root.at("delta"));
    r.precision = {{"exact", true}};
  } else {
    if (!expected) throw cli::InputError("", "--shape or --in is required");
    e = expected->e;
    const int k_lo = f.k > 0 ? f.k : 4 + expected->total();
    const int pool_size = f.pool > 0 ? f.pool : 10;
    int delta_sim = 0;
    delta = euler::simulated_deltas(*expected, k_lo, k_lo + 4, pool_size, f.seed, &delta_sim);
    r.uses_seed = true;
    r.precision = {{"k_range", {k_lo, k_lo + 4}}};
    r.result["delta_sim"] = delta_sim;
  }
  json dj = json::object();
  for (const auto& [j, v] : delta) dj[std::to_string(j)] = v;
  r.result["delta"] = std::move(dj);
  const auto shape = euler::reconstruct_shape(delta, e);
  r.result["shape"] = shape.to_string();
  json sha = json::array();
  for (const auto& [j, v] : delta)
    if (j >= e && (j - e) % 2 == 0) sha.push_back({{"i", j - e}, {"exponent", euler::sha_exponent(delta, e, j - e)}});
  r.result["sha"] = std::move(sha);
  if (expected) {
    r.result["expected"] = expected->to_string();
    r.pass = shape == *expected;
  }
  return r;
}

Report cmd_euler_c_ideal(const Flags& f) {
  const json doc = cli::load_document(f.in);
  const Node root(doc, "");
  Report r;
  const int e = root.has("e") ? root.at("e").as_int(0, 1) : 0;
  if (root.has("elements")) {
    const int i = require(f.index, "--index");
    const auto basis = cli::read_basis(root.at("basis"));
    cli::at_node(root.at("basis"), [&] { lambda::validate_basis(basis, root.at("p").as_int()); });
    basis_warnings(basis, root, r);
    const auto R = cli::read_coefficient_ring(root, f.K);
    const int m = root.at("m").as_int(1, 4096);
    const Node en = root.at("elements");
    std::vector<lambda::WeightedSeries> elems;
    for (std::size_t t = 0; t < en.size(); ++t)
      elems.push_back({en.at(t).at("nu").as_int(0, 63), cli::read_coeffs(en.at(t).at("coeffs"), R, m)});
    const bool kappa = root.has("family") && root.at("family").as_string() == "D";
    const auto C = cli::at_node(en, [&] {
      return kappa ? lambda::construct_D(elems, i, basis) : lambda::construct_C(elems, i, e, basis);
    });
    r.precision = {{"p", R.p()}, {"K", R.K()}, {"m", m}};
    r.result = {{"index", i}, {"class", cli::class_json(lambda::class_of(C))}};
    return r;
  }
  const auto M = cli::read_module(root);
  const i64 p = root.at("p").as_int();
  const auto fam = cli::at_node(root, [&] { return lambda::make_synthetic_family(M, e, p, f.seed); });
  basis_warnings(fam.basis, root, r);
  r.uses_seed = true;
  r.precision = {{"p", p}, {"K", fam.K}, {"m", fam.m}};
  const auto X = M.doubled();
  std::map<int, lambda::LambdaIdealFactored> C;
  for (int i = 0; i <= X.length(); i += 2) C.emplace(i, lambda::construct_C(fam.elements, i, e, fam.basis));
  const auto rep = lambda::highfitt_consistency(X, C);
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"i", c.i},
                      {"rule", c.rule},
                      {"expected", cli::class_json(c.expected)},
                      {"observed", cli::class_json(c.observed)},
                      {"pass", c.pass}});
  r.result = {{"e", e}, {"length", X.length()}, {"checks", checks}};
  r.pass = rep.all_pass();
  return r;
}

Report cmd_euler_stabilize(const Flags& f) {
  const json doc = cli::load_document(f.in);
  const Node root(doc, "");
  const int j = require(f.stratum, "--stratum");
  const auto R = cli::read_coefficient_ring(root);
  const int m = root.at("m").as_int(1, 4096);
  const auto P = cli::read_prime(root.at("at"));
  const Node fn = root.at("family");
  std::map<int, std::vector<lambda::TruncatedSeries>> family;
  for (const auto& key : fn.keys()) {
    const Node gens = fn.at(key);
    const int k = cli::int_key(fn, key);
    if (k < 1 || k > R.K()) gens.error("k must lie in [1, K]");
    const ring::ModRing Rk(R.p(), k);
    for (std::size_t t = 0; t < gens.size(); ++t) family[k].push_back(cli::read_coeffs(gens.at(t), Rk, m));
    if (family[k].empty()) gens.error("no generators");
  }
  Report r;
  r.precision = {{"p", R.p()}, {"K", R.K()}, {"m", m}};
  json ords = json::object();
  for (const auto& [k, gens] : family)
    ords[std::to_string(k)] = cli::at_node(fn, [&] { return lambda::specialized_ord(gens, P, R.p(), j).value; });
  const int k0 = cli::at_node(fn, [&] { return lambda::stabilization_index(family, P, R.p(), j); });
  r.result = {{"at", P.name()}, {"j", j}, {"ords", ords}, {"k0", k0}};
  return r;
}

// ---- selftest ----

Report cmd_selftest(const Flags& f) {
  Report r;
  r.precision = {{"exact", true}};
  json rows = json::array();
  bool all = true;
  for (const auto& c : selftest::run(f.filter)) {
    json row{{"id", c.id}, {"tag", c.tag}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}};
    if (f.timing) row["seconds"] = c.seconds;
    rows.push_back(std::move(row));
    all = all && c.pass;
  }
  if (rows.empty()) throw cli::InputError("", "--filter selects no criteria");
  r.result["criteria"] = std::move(rows);
  r.pass = all;
  return r;
}

// ---- driver ----

void emit(const json& doc, const Flags& f) {
  const std::string text = f.format == "text" ? cli::render_text(doc) : doc.dump(2) + "\n";
  if (f.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(f.out);
  if (!os) {
    std::cerr << "iwafitt: cannot write " << f.out << "\n";
    std::exit(2);
  }
  os << text;
}

int dispatch(const std::string& name, const Handler& h, Flags f, bool seed_allowed) {
  if (seed_allowed && !f.seed_given) {
    if (const char* env = std::getenv("IWAFITT_SEED"); env && *env) {
      try {
        std::size_t used = 0;
        f.seed = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        std::cerr << "iwafitt: IWAFITT_SEED is not an unsigned integer\n";
        return 2;
      }
    }
  }
  json doc;
  doc["command"] = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Report r = h(f);
    if (r.uses_seed) doc["seed"] = f.seed;
    doc["precision"] = std::move(r.precision);
    doc["result"] = std::move(r.result);
    if (r.pass) doc["pass"] = *r.pass;
    if (!r.warnings.empty()) doc["warnings"] = r.warnings;
    if (f.timing)
      doc["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(doc, f);
    return r.pass.value_or(true) ? 0 : 1;
  } catch (const cli::InputError& e) {
    doc["error"] = {{"code", e.code()}, {"path", e.path()}, {"message", e.what()}};
    std::cerr << "iwafitt: " << e.what() << " at " << (e.path().empty() ? "/" : e.path()) << "\n";
  } catch (const Error& e) {
    doc["error"] = {{"code", std::string(to_string(e.code()))}, {"path", ""}, {"message", e.what()}};
    std::cerr << "iwafitt: " << e.what() << "\n";
  }
  emit(doc, f);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fitting ideals, Lambda-ideal classes and Euler system indices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "iwafitt 0.1.0");

  Flags flags;
  int status = 0;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& path, const std::string& desc,
                  unsigned opts, Handler h) {
    auto* sub = parent->add_subcommand(name, desc);
    if (opts & kIn) sub->add_option("--in", flags.in, "input JSON (file, '-' for stdin, or inline)")->required();
    if (opts & kInOptional) sub->add_option("--in", flags.in, "input JSON (file, '-' for stdin, or inline)");
    if (opts & kIndex) sub->add_option("--index", flags.index, "Fitting index i")->check(CLI::NonNegativeNumber);
    if (opts & kStratum) sub->add_option("--stratum", flags.stratum, "stratum / specialization index j")->check(CLI::PositiveNumber);
    if (opts & kSeed)
      sub->add_option_function<std::uint64_t>(
          "--seed", [&](const std::uint64_t& s) { flags.seed = s, flags.seed_given = true; },
          "RNG seed (default $IWAFITT_SEED, then 0)");
    if (opts & kPrecK) sub->add_option("--K", flags.K, "p-adic precision override")->check(CLI::Range(1, 62));
    if (opts & kTruncM) sub->add_option("--m", flags.m, "T-adic truncation override")->check(CLI::Range(1, 4096));
    if (opts & kLengthK) sub->add_option("--k", flags.k, "length k of R = O/m^k")->check(CLI::Range(1, 62));
    if (opts & kPool) sub->add_option("--pool", flags.pool, "number of prime labels")->check(CLI::Range(1, 63));
    if (opts & kNongeneric)
      sub->add_option("--nongeneric", flags.nongeneric, "nongeneric labels in the pool")->check(CLI::Range(0, 63));
    if (opts & kShape) sub->add_option("--shape", flags.shape, "Selmer shape e:d0,d1,...");
    if (opts & kFilter) sub->add_option("--filter", flags.filter, "criteria: tag, number or comma list");
    sub->add_option("--out", flags.out, "write the report here instead of stdout");
    sub->add_option("--format", flags.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timing", flags.timing, "add wall-clock seconds to the report");
    const bool seeded = opts & kSeed;
    sub->callback([&status, &flags, path, h, seeded] { status = dispatch(path, h, flags, seeded); });
  };
  auto group = [&](const std::string& name, const std::string& desc) {
    auto* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    return g;
  };

  leaf(&app, "fitt", "fitt", "Fitting ideal of a presented module", kIn | kIndex | kPrecK, cmd_fitt);

  auto* series = group("series", "truncated power series");
  leaf(series, "prepare", "series prepare", "Weierstrass preparation", kIn | kPrecK | kTruncM, cmd_series_prepare);
  leaf(series, "divide", "series divide", "Weierstrass division", kIn | kPrecK | kTruncM, cmd_series_divide);

  auto* ideal = group("ideal", "factored Lambda-ideals");
  leaf(ideal, "ord", "ideal ord", "ord at every basis prime", kIn, cmd_ideal_ord);
  leaf(ideal, "prec", "ideal prec", "I < J", kIn, [](const Flags& f) { return cmd_ideal_compare(f, false); });
  leaf(ideal, "sim", "ideal sim", "I ~ J", kIn, [](const Flags& f) { return cmd_ideal_compare(f, true); });
  leaf(ideal, "principal", "ideal principal", "principal representative", kIn, cmd_ideal_principal);
  leaf(ideal, "sqrt", "ideal sqrt", "pseudo-square root", kIn, cmd_ideal_sqrt);

  auto* mod = group("lambda-module", "elementary Lambda-modules");
  leaf(mod, "fitt-class", "lambda-module fitt-class", "class of Fitt_i", kIn | kIndex, cmd_module_fitt_class);
  leaf(mod, "specialize", "lambda-module specialize", "Fitt_i over O_j", kIn | kIndex | kStratum,
       cmd_module_specialize);
  leaf(mod, "slope", "lambda-module slope", "slope law over a window of j", kIn | kIndex, cmd_module_slope);
  leaf(mod, "parity", "lambda-module parity", "multiplicity parity of slopes", kIn | kIndex, cmd_module_parity);

  auto* eul = group("euler", "bipartite Euler system indices");
  leaf(eul, "simulate", "euler simulate", "simulate a system of given shape",
       kSeed | kLengthK | kPool | kShape | kNongeneric, cmd_euler_simulate);
  leaf(eul, "verify", "euler verify", "check the stratum formulas and reciprocity",
       kInOptional | kSeed | kLengthK | kPool | kShape | kNongeneric, cmd_euler_verify);
  leaf(eul, "reconstruct", "euler reconstruct", "shape and Sha exponents from delta values",
       kInOptional | kSeed | kLengthK | kPool | kShape, cmd_euler_reconstruct);
  leaf(eul, "c-ideal", "euler c-ideal", "C_i classes and their consistency", kIn | kIndex | kSeed | kPrecK,
       cmd_euler_c_ideal);
  leaf(eul, "stabilize", "euler stabilize", "least k with stable specialized order", kIn | kStratum,
       cmd_euler_stabilize);

  leaf(&app, "selftest", "selftest", "run the acceptance criteria", kFilter, cmd_selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return status;
}
