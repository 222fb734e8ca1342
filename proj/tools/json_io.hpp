#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "iwafitt/c_ideal.hpp"
#include "iwafitt/euler.hpp"
#include "iwafitt/fitting.hpp"
#include "iwafitt/lambda_module.hpp"
#include "iwafitt/weierstrass.hpp"

namespace iwafitt::cli {

using json = nlohmann::ordered_json;
using ring::i64;

/// Malformed request, located by a JSON pointer ("" is the document root).
class InputError : public std::runtime_error {
 public:
  InputError(std::string path, const std::string& what, std::string code = "InputError")
      : std::runtime_error(what), path_(std::move(path)), code_(std::move(code)) {}
  const std::string& path() const noexcept { return path_; }
  const std::string& code() const noexcept { return code_; }

 private:
  std::string path_;
  std::string code_;
};

/// Read-only view of a JSON value that remembers where it came from.
class Node {
 public:
  Node(const json& value, std::string path) : value_(&value), path_(std::move(path)) {}

  const json& raw() const noexcept { return *value_; }
  const std::string& path() const noexcept { return path_; }
  std::string where() const { return path_.empty() ? "/" : path_; }

  bool has(const std::string& key) const;
  Node at(const std::string& key) const;
  Node at(std::size_t index) const;
  std::size_t size() const;
  std::vector<std::string> keys() const;

  i64 as_int() const;
  int as_int(int lo, int hi) const;
  bool as_bool() const;
  std::string as_string() const;
  std::vector<i64> as_int_list() const;
  std::vector<int> as_int_list(int lo, int hi) const;

  [[noreturn]] void error(const std::string& what) const { throw InputError(where(), what); }

 private:
  const json* value_;
  std::string path_;
};

/// `arg` is a file path, "-" for stdin, or an inline JSON document.
json load_document(const std::string& arg);

/// Runs `fn`, turning library errors into an InputError at `node`.
template <class Fn>
auto at_node(const Node& node, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw InputError(node.where(), e.what(), std::string(to_string(e.code())));
  }
}

struct SeriesPrecision {
  int K = 0;  ///< 0 keeps the document's value
  int m = 0;
};

ring::ModRing read_coefficient_ring(const Node& n, int K_override = 0);
ring::TruncatedSeries read_series(const Node& n, SeriesPrecision over = {});
/// Bare coefficient list at a known precision.
ring::TruncatedSeries read_coeffs(const Node& n, const ring::ModRing& R, int m);

fitting::PresentationMatrix read_matrix(const Node& n, int K_override = 0);

lambda::HeightOnePrime read_prime(const Node& n);
std::vector<lambda::HeightOnePrime> read_basis(const Node& n);
/// {"basis", "generators"}. A generator is an exponent vector, or
/// {"coeffs": [...]} factored over the basis (needs "p", "K", "m").
lambda::LambdaIdealFactored read_ideal(const Node& n);
lambda::ElementaryLambdaModule read_module(const Node& n);

euler::EulerSystemData read_system(const Node& n);
/// An object key that must spell an integer.
int int_key(const Node& obj, const std::string& key);
std::map<int, int> read_int_map(const Node& n);

json prime_json(const lambda::HeightOnePrime& P);
json class_json(const lambda::PseudoClass& c);
json series_json(const ring::TruncatedSeries& f);
json system_json(const euler::EulerSystemData& data);
json checks_json(const euler::VerifyReport& r);

/// "key: value" lines, nested keys joined by '.'.
std::string render_text(const json& doc);

}  // namespace iwafitt::cli
