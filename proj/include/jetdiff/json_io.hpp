// json_io.hpp — stable JSON renderings: rationals as decimal strings, every
// polynomial as a list of {exponents, num, den} terms.
#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "jetdiff/poly.hpp"

namespace jetdiff {

using ojson = nlohmann::ordered_json;

inline ojson rat_to_json(const Rat& q) {
  ojson j;
  j["num"] = q.get_num().get_str();
  j["den"] = q.get_den().get_str();
  return j;
}

// Variables actually used, in the global order.
inline std::vector<int> poly_vars(const Poly& p) {
  std::vector<int> used;
  for (int v = 0; v < kNumVars; ++v)
    for (const auto& [m, c] : p.terms())
      if (m[v] > 0) {
        used.push_back(v);
        break;
      }
  return used;
}

inline ojson poly_to_json(const Poly& p) {
  std::vector<int> vars = poly_vars(p);
  ojson j;
  j["vars"] = ojson::array();
  for (int v : vars) j["vars"].push_back(var_name(v));
  j["terms"] = ojson::array();
  for (const auto& [m, c] : p.terms()) {
    ojson t;
    t["exponents"] = ojson::array();
    for (int v : vars) t["exponents"].push_back(static_cast<int>(m[v]));
    t["num"] = c.get_num().get_str();
    t["den"] = c.get_den().get_str();
    j["terms"].push_back(t);
  }
  return j;
}

inline int var_index_by_name(const std::string& name) {
  for (int v = 0; v < kNumVars; ++v)
    if (name == var_name(v)) return v;
  throw std::invalid_argument("unknown variable name: " + name);
}

inline Poly poly_from_json(const ojson& j) {
  std::vector<int> vars;
  for (const auto& name : j.at("vars"))
    vars.push_back(var_index_by_name(name.get<std::string>()));
  Poly p;
  for (const auto& t : j.at("terms")) {
    Mono m = mono_one();
    const auto& ex = t.at("exponents");
    for (size_t i = 0; i < vars.size(); ++i)
      m[vars[i]] = static_cast<uint8_t>(ex.at(i).get<int>());
    Rat c(Int(t.at("num").get<std::string>()),
          Int(t.at("den").get<std::string>()));
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

}  // namespace jetdiff
