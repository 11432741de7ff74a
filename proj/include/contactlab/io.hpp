#ifndef CONTACTLAB_IO_HPP
#define CONTACTLAB_IO_HPP

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "contactlab/kform.hpp"
#include "contactlab/lie_algebra.hpp"

namespace contactlab {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// The on-disk JSON surface. Rationals travel as strings ("p" or "p/q",
/// q > 0) so no float ever touches the data. Brackets store lhs < rhs only.
struct AlgebraFile {
  std::string name;
  int dim = 0;
  std::vector<std::string> basis;
  struct Bracket {
    int lhs = 0, rhs = 0;
    std::map<int, Rational> result;
  };
  std::vector<Bracket> brackets;
  std::optional<std::map<int, Rational>> contact_form;
  std::optional<std::map<int, Rational>> primitive;  // symplectic potential, realize inputs only
};

namespace io_detail {

inline std::map<int, Rational> parse_sparse_vec(const nlohmann::json& j, int dim, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object of index -> rational-string");
  std::map<int, Rational> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int idx;
    try {
      std::size_t pos = 0;
      idx = std::stoi(it.key(), &pos);
      if (pos != it.key().size()) throw std::invalid_argument("");
    } catch (...) {
      throw ParseError(where + ": key \"" + it.key() + "\" is not an index");
    }
    if (idx < 0 || idx >= dim)
      throw ParseError(where + ": index " + std::to_string(idx) + " out of range for dim " + std::to_string(dim));
    if (!it.value().is_string()) throw ParseError(where + "[" + it.key() + "]: rational must be a string");
    Rational r;
    try {
      r = Rational::parse(it.value().get<std::string>());
    } catch (const std::exception& ex) {
      throw ParseError(where + "[" + it.key() + "]: " + ex.what());
    }
    if (!r.is_zero()) out[idx] = r;
  }
  return out;
}

inline nlohmann::ordered_json sparse_vec_json(const std::map<int, Rational>& m) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v.str();
  return j;
}

}  // namespace io_detail

inline AlgebraFile algebra_file_from_json(const nlohmann::json& j) {
  AlgebraFile f;
  if (!j.is_object()) throw ParseError("top level: expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) throw ParseError("field \"dim\": missing or not an integer");
  f.dim = j["dim"].get<int>();
  if (f.dim < 0) throw ParseError("field \"dim\": negative");
  f.name = j.value("name", std::string("unnamed"));
  if (j.contains("basis")) {
    if (!j["basis"].is_array()) throw ParseError("field \"basis\": expected an array of labels");
    for (const auto& b : j["basis"]) f.basis.push_back(b.get<std::string>());
    if (static_cast<int>(f.basis.size()) != f.dim) throw ParseError("field \"basis\": length != dim");
  } else {
    for (int i = 0; i < f.dim; ++i) f.basis.push_back("e" + std::to_string(i + 1));
  }
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw ParseError("field \"brackets\": expected an array");
    int record = 0;
    for (const auto& br : j["brackets"]) {
      std::string where = "brackets[" + std::to_string(record++) + "]";
      if (!br.is_object() || !br.contains("lhs") || !br.contains("rhs") || !br.contains("result"))
        throw ParseError(where + ": expected {lhs, rhs, result}");
      AlgebraFile::Bracket b;
      b.lhs = br["lhs"].get<int>();
      b.rhs = br["rhs"].get<int>();
      if (b.lhs < 0 || b.rhs < 0 || b.lhs >= f.dim || b.rhs >= f.dim)
        throw ParseError(where + ": index out of range");
      if (b.lhs >= b.rhs) throw ParseError(where + ": requires lhs < rhs");
      b.result = io_detail::parse_sparse_vec(br["result"], f.dim, where + ".result");
      f.brackets.push_back(std::move(b));
    }
  }
  if (j.contains("contact_form"))
    f.contact_form = io_detail::parse_sparse_vec(j["contact_form"], f.dim, "contact_form");
  if (j.contains("primitive")) f.primitive = io_detail::parse_sparse_vec(j["primitive"], f.dim, "primitive");
  return f;
}

inline nlohmann::ordered_json algebra_file_to_json(const AlgebraFile& f) {
  nlohmann::ordered_json j;
  j["name"] = f.name;
  j["dim"] = f.dim;
  j["basis"] = f.basis;
  auto brackets = nlohmann::ordered_json::array();
  std::vector<AlgebraFile::Bracket> sorted = f.brackets;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.lhs, a.rhs) < std::make_pair(b.lhs, b.rhs);
  });
  for (const auto& b : sorted) {
    nlohmann::ordered_json jb;
    jb["lhs"] = b.lhs;
    jb["rhs"] = b.rhs;
    jb["result"] = io_detail::sparse_vec_json(b.result);
    brackets.push_back(std::move(jb));
  }
  j["brackets"] = std::move(brackets);
  if (f.contact_form) j["contact_form"] = io_detail::sparse_vec_json(*f.contact_form);
  if (f.primitive) j["primitive"] = io_detail::sparse_vec_json(*f.primitive);
  return j;
}

inline AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(path + ": " + ex.what());
  }
  return algebra_file_from_json(j);
}

inline void save_algebra_file(const AlgebraFile& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << algebra_file_to_json(f).dump(2) << "\n";
}

inline LieAlgebra to_lie_algebra(const AlgebraFile& f) {
  LieAlgebra L(f.dim, f.basis);
  for (const auto& b : f.brackets) {
    Vec v(f.dim);
    for (const auto& [k, c] : b.result) v[k] = c;
    L.set_bracket(b.lhs, b.rhs, std::move(v));
  }
  return L;
}

inline std::optional<KForm> contact_form_of(const AlgebraFile& f) {
  if (!f.contact_form) return std::nullopt;
  KForm eta(f.dim, 1);
  for (const auto& [k, c] : *f.contact_form) eta.add_term({k}, c);
  return eta;
}

inline std::optional<KForm> primitive_of(const AlgebraFile& f) {
  if (!f.primitive) return std::nullopt;
  KForm a(f.dim, 1);
  for (const auto& [k, c] : *f.primitive) a.add_term({k}, c);
  return a;
}

inline AlgebraFile to_algebra_file(const LieAlgebra& L, const std::optional<KForm>& eta,
                                   const std::string& name) {
  AlgebraFile f;
  f.name = name;
  f.dim = L.dim();
  f.basis = L.labels();
  for (const auto& [key, v] : L.structure()) {
    AlgebraFile::Bracket b;
    b.lhs = key.first;
    b.rhs = key.second;
    for (int k = 0; k < L.dim(); ++k)
      if (!v[k].is_zero()) b.result[k] = v[k];
    f.brackets.push_back(std::move(b));
  }
  if (eta) {
    std::map<int, Rational> form;
    for (int k = 0; k < L.dim(); ++k) {
      Rational c = eta->coeff({k});
      if (!c.is_zero()) form[k] = c;
    }
    f.contact_form = std::move(form);
  }
  return f;
}

/// FNV-1a 64 over the canonical serialization; deterministic input digest.
inline std::string digest(const AlgebraFile& f) {
  std::string s = algebra_file_to_json(f).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace contactlab

#endif
