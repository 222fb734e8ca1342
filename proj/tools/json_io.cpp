#include "json_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

namespace iwafitt::cli {

namespace {

std::string child(const std::string& path, const std::string& key) {
  std::string esc;
  for (char c : key) {
    if (c == '~')
      esc += "~0";
    else if (c == '/')
      esc += "~1";
    else
      esc += c;
  }
  return path + "/" + esc;
}

}  // namespace

bool Node::has(const std::string& key) const { return value_->is_object() && value_->contains(key); }

Node Node::at(const std::string& key) const {
  if (!value_->is_object()) error("expected an object");
  auto it = value_->find(key);
  if (it == value_->end()) throw InputError(child(path_, key), "missing key \"" + key + "\"");
  return Node(*it, child(path_, key));
}

Node Node::at(std::size_t index) const {
  if (!value_->is_array()) error("expected an array");
  if (index >= value_->size()) throw InputError(child(path_, std::to_string(index)), "index out of range");
  return Node((*value_)[index], child(path_, std::to_string(index)));
}

std::size_t Node::size() const {
  if (!value_->is_array()) error("expected an array");
  return value_->size();
}

std::vector<std::string> Node::keys() const {
  if (!value_->is_object()) error("expected an object");
  std::vector<std::string> out;
  for (auto it = value_->begin(); it != value_->end(); ++it) out.push_back(it.key());
  return out;
}

i64 Node::as_int() const {
  if (value_->is_number_unsigned()) {
    const auto u = value_->get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<i64>::max())) error("integer out of range");
    return static_cast<i64>(u);
  }
  if (!value_->is_number_integer()) error("expected an integer");
  return value_->get<i64>();
}

int Node::as_int(int lo, int hi) const {
  const i64 v = as_int();
  if (v < lo || v > hi) error("expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

bool Node::as_bool() const {
  if (!value_->is_boolean()) error("expected true or false");
  return value_->get<bool>();
}

std::string Node::as_string() const {
  if (!value_->is_string()) error("expected a string");
  return value_->get<std::string>();
}

std::vector<i64> Node::as_int_list() const {
  std::vector<i64> out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).as_int());
  return out;
}

std::vector<int> Node::as_int_list(int lo, int hi) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).as_int(lo, hi));
  return out;
}

json load_document(const std::string& arg) {
  std::string text;
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    text = arg;
  } else if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(arg);
    if (!f) throw InputError("", "cannot read " + arg);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("", std::string("malformed JSON: ") + e.what());
  }
}

ring::ModRing read_coefficient_ring(const Node& n, int K_override) {
  const i64 p = n.at("p").as_int();
  const int K = n.at("K").as_int(1, 62);
  if (K_override > K) n.at("K").error("--K exceeds the document precision");
  return at_node(n, [&] { return ring::ModRing(p, K_override > 0 ? K_override : K); });
}

ring::TruncatedSeries read_coeffs(const Node& n, const ring::ModRing& R, int m) {
  const auto c = n.as_int_list();
  if (c.size() > static_cast<std::size_t>(m)) n.error("more coefficients than the truncation m");
  return ring::TruncatedSeries(R, m, c);
}

ring::TruncatedSeries read_series(const Node& n, SeriesPrecision over) {
  const auto R = read_coefficient_ring(n, over.K);
  const int m_doc = n.at("m").as_int(1, 4096);
  const int m = over.m > 0 ? over.m : m_doc;
  auto f = read_coeffs(n.at("coeffs"), R, m_doc);
  return m == m_doc ? f : f.with_length(m);
}

fitting::PresentationMatrix read_matrix(const Node& n, int K_override) {
  const Node rn = n.at("ring");
  fitting::RingDescriptor ring;
  ring.kind = at_node(rn.at("kind"), [&] { return fitting::ring_kind_from_string(rn.at("kind").as_string()); });
  const auto R = read_coefficient_ring(rn, K_override);
  ring.p = R.p();
  ring.K = R.K();
  if (ring.kind == fitting::RingKind::Lambda) ring.m = rn.at("m").as_int(1, 4096);
  const int rows = n.at("rows").as_int(0, 16);
  const int cols = n.at("cols").as_int(0, 16);
  const Node entries = n.at("entries");
  if (entries.size() != static_cast<std::size_t>(rows) && !(cols == 0 && entries.size() == 0))
    entries.error("expected " + std::to_string(rows) + " rows");
  std::vector<i64> scalars;
  std::vector<ring::TruncatedSeries> series;
  for (std::size_t r = 0; r < entries.size(); ++r) {
    const Node row = entries.at(r);
    if (row.size() != static_cast<std::size_t>(cols)) row.error("expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (ring.is_principal())
        scalars.push_back(row.at(c).as_int());
      else
        series.push_back(read_coeffs(row.at(c), R, ring.m));
    }
  }
  return at_node(n, [&] {
    return ring.is_principal() ? fitting::PresentationMatrix::scalar(ring, rows, cols, std::move(scalars))
                               : fitting::PresentationMatrix::lambda(ring, rows, cols, std::move(series));
  });
}

lambda::HeightOnePrime read_prime(const Node& n) {
  if (n.raw().is_string()) {
    const auto s = n.as_string();
    if (s == "PI") return lambda::HeightOnePrime::pi();
    if (s == "T") return lambda::HeightOnePrime::linear(0);
    n.error("unknown prime token \"" + s + "\" (use \"PI\", \"T\" or {\"dist\": [...]})");
  }
  const Node d = n.at("dist");
  return at_node(d, [&] { return lambda::HeightOnePrime::distinguished(d.as_int_list()); });
}

std::vector<lambda::HeightOnePrime> read_basis(const Node& n) {
  std::vector<lambda::HeightOnePrime> out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    auto P = read_prime(n.at(i));
    for (const auto& Q : out)
      if (Q == P) n.at(i).error("prime " + P.name() + " listed twice");
    out.push_back(std::move(P));
  }
  return out;
}

lambda::LambdaIdealFactored read_ideal(const Node& n) {
  const Node bn = n.at("basis");
  const auto basis = read_basis(bn);
  if (n.has("p")) at_node(bn, [&] { lambda::validate_basis(basis, n.at("p").as_int()); });
  const Node gn = n.at("generators");
  if (gn.size() == 0) gn.error("the zero ideal is not allowed");
  std::vector<std::vector<int>> gens;
  for (std::size_t i = 0; i < gn.size(); ++i) {
    const Node g = gn.at(i);
    if (g.raw().is_object()) {
      const auto R = read_coefficient_ring(n);
      const auto f = read_coeffs(g.at("coeffs"), R, n.at("m").as_int(1, 4096));
      if (f.is_zero()) g.error("zero generator");
      gens.push_back(at_node(g, [&] { return lambda::factor_over_basis(f, basis); }));
      continue;
    }
    if (g.size() != basis.size()) g.error("expected " + std::to_string(basis.size()) + " exponents");
    gens.push_back(g.as_int_list(0, 1 << 20));
  }
  return at_node(n, [&] { return lambda::LambdaIdealFactored(basis, std::move(gens)); });
}

lambda::ElementaryLambdaModule read_module(const Node& n) {
  const Node cn = n.at("components");
  std::vector<lambda::ElementaryLambdaModule::Component> comps;
  for (std::size_t i = 0; i < cn.size(); ++i) {
    const Node c = cn.at(i);
    comps.push_back({read_prime(c.at("prime")), c.at("exponents").as_int_list(0, 1 << 20)});
  }
  if (n.has("p")) {
    std::vector<lambda::HeightOnePrime> primes;
    for (const auto& c : comps) primes.push_back(c.prime);
    at_node(cn, [&] { lambda::validate_basis(primes, n.at("p").as_int()); });
  }
  return at_node(cn, [&] { return lambda::ElementaryLambdaModule(std::move(comps)); });
}

namespace {

euler::IndexSet read_index_set(const Node& n, const std::map<std::string, int>& bit) {
  euler::IndexSet s = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const auto id = n.at(i).as_string();
    auto it = bit.find(id);
    if (it == bit.end()) n.at(i).error("unknown label " + id);
    const auto b = euler::IndexSet{1} << it->second;
    if (s & b) n.at(i).error("label " + id + " repeated");
    s |= b;
  }
  return s;
}

int read_label(const Node& n, const std::map<std::string, int>& bit) {
  auto it = bit.find(n.as_string());
  if (it == bit.end()) n.error("unknown label " + n.as_string());
  return it->second;
}

json index_set_json(euler::IndexSet n, const std::vector<euler::PrimeLabel>& pool) {
  json out = json::array();
  for (std::size_t b = 0; b < pool.size(); ++b)
    if (n >> b & 1) out.push_back(pool[b].id);
  return out;
}

}  // namespace

euler::EulerSystemData read_system(const Node& n) {
  euler::EulerSystemData d;
  d.epsilon = n.at("epsilon").as_int(0, 1);
  d.k = n.at("k").as_int(1, 62);
  const Node pn = n.at("pool");
  if (pn.size() > static_cast<std::size_t>(euler::kMaxPool)) pn.error("pool larger than 63 labels");
  std::map<std::string, int> bit;
  for (std::size_t i = 0; i < pn.size(); ++i) {
    const Node l = pn.at(i);
    euler::PrimeLabel label{l.at("id").as_string(), l.at("k_l").as_int(1, 62),
                            l.has("generic") ? l.at("generic").as_bool() : true};
    if (!bit.emplace(label.id, static_cast<int>(i)).second) l.at("id").error("duplicate label " + label.id);
    d.pool.push_back(std::move(label));
  }
  auto read_indices = [&](const char* key, std::map<euler::IndexSet, int>& dst) {
    if (!n.has(key)) return;
    const Node arr = n.at(key);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const Node e = arr.at(i);
      const auto s = read_index_set(e.at("n"), bit);
      if (!dst.emplace(s, e.at("ind").as_int(0, d.k)).second) e.at("n").error("index set repeated");
    }
  };
  auto read_loc = [&](const char* key, std::map<std::pair<euler::IndexSet, int>, int>& dst) {
    if (!n.has(key)) return;
    const Node arr = n.at(key);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const Node e = arr.at(i);
      const auto s = read_index_set(e.at("n"), bit);
      const int l = read_label(e.at("l"), bit);
      if (!dst.emplace(std::pair{s, l}, e.at("ind").as_int(0, d.k)).second) e.error("entry repeated");
    }
  };
  read_indices("ind_lambda", d.ind_lambda);
  read_indices("ind_kappa", d.ind_kappa);
  read_loc("loc_ord", d.loc_ord);
  read_loc("loc_unr", d.loc_unr);
  at_node(n, [&] { d.validate(); });
  return d;
}

int int_key(const Node& obj, const std::string& key) {
  int k = 0;
  std::size_t used = 0;
  try {
    k = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size()) obj.at(key).error("key is not an integer");
  return k;
}

std::map<int, int> read_int_map(const Node& n) {
  std::map<int, int> out;
  for (const auto& key : n.keys()) out[int_key(n, key)] = n.at(key).as_int(-(1 << 20), 1 << 20);
  return out;
}

json prime_json(const lambda::HeightOnePrime& P) {
  if (P.is_pi()) return "PI";
  return json{{"dist", P.poly()}};
}

json class_json(const lambda::PseudoClass& c) {
  json out = json::object();
  for (const auto& [P, e] : c.entries()) out[P.name()] = e;
  return out;
}

json series_json(const ring::TruncatedSeries& f) { return f.coeffs(); }

json system_json(const euler::EulerSystemData& data) {
  json out;
  out["epsilon"] = data.epsilon;
  out["k"] = data.k;
  json pool = json::array();
  for (const auto& l : data.pool) pool.push_back({{"id", l.id}, {"k_l", l.k_l}, {"generic", l.generic}});
  out["pool"] = std::move(pool);
  auto indices = [&](const std::map<euler::IndexSet, int>& m) {
    json arr = json::array();
    for (const auto& [n, v] : m) arr.push_back({{"n", index_set_json(n, data.pool)}, {"ind", v}});
    return arr;
  };
  auto locs = [&](const std::map<std::pair<euler::IndexSet, int>, int>& m) {
    json arr = json::array();
    for (const auto& [key, v] : m)
      arr.push_back({{"n", index_set_json(key.first, data.pool)},
                     {"l", data.pool[static_cast<std::size_t>(key.second)].id},
                     {"ind", v}});
    return arr;
  };
  out["ind_lambda"] = indices(data.ind_lambda);
  out["ind_kappa"] = indices(data.ind_kappa);
  out["loc_ord"] = locs(data.loc_ord);
  out["loc_unr"] = locs(data.loc_unr);
  return out;
}

json checks_json(const euler::VerifyReport& r) {
  json arr = json::array();
  for (const auto& c : r.checks)
    arr.push_back(
        {{"family", c.family}, {"j", c.j}, {"observed", c.observed}, {"expected", c.expected}, {"pass", c.pass}});
  return arr;
}

namespace {

void render(const json& v, const std::string& key, std::ostringstream& os) {
  const bool flat = v.is_primitive() || (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) {
                                           return x.is_primitive();
                                         }));
  if (flat || v.empty()) {
    os << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    return;
  }
  const std::string prefix = key.empty() ? "" : key + ".";
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) render(v[i], prefix + std::to_string(i), os);
    return;
  }
  for (auto it = v.begin(); it != v.end(); ++it) render(it.value(), prefix + it.key(), os);
}

}  // namespace

std::string render_text(const json& doc) {
  std::ostringstream os;
  render(doc, "", os);
  return os.str();
}

}  // namespace iwafitt::cli
