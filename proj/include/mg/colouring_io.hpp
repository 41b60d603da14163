#pragma once
// Colouring file format:
// {"default":1,"assignments":[[m,n,value],...],
//  "log":[{"matrix":[[a,b],[c,d]],"theta":[[m,n,value],...],"box":R},...]}
#include <fstream>

#include <nlohmann/json.hpp>

#include "mg/colouring.hpp"

namespace mg {

inline nlohmann::json colouring_to_json(const PrimeColouring& phi) {
  nlohmann::json as = nlohmann::json::array();
  for (auto& [v, p] : phi.assignments)
    as.push_back({istr(v.first), istr(v.second), istr(p)});
  nlohmann::json log = nlohmann::json::array();
  for (auto& entry : phi.log) {
    nlohmann::json th = nlohmann::json::array();
    for (auto& [v, p] : entry.theta)
      th.push_back({istr(v.first), istr(v.second), istr(p)});
    // build rows explicitly: a brace-list of two string pairs would collapse
    // into a JSON object
    nlohmann::json mat = nlohmann::json::array();
    mat.push_back(
        nlohmann::json::array({istr(entry.matrix.m[0][0]), istr(entry.matrix.m[0][1])}));
    mat.push_back(
        nlohmann::json::array({istr(entry.matrix.m[1][0]), istr(entry.matrix.m[1][1])}));
    log.push_back({{"matrix", mat}, {"theta", th}, {"box", istr(entry.box_radius)}});
  }
  return {{"default", istr(phi.default_value)}, {"assignments", as}, {"log", log}};
}

inline PrimeColouring colouring_from_json(const nlohmann::json& j) {
  auto num = [](const nlohmann::json& v) {
    return v.is_string() ? Int(v.get<std::string>()) : Int(v.get<long>());
  };
  PrimeColouring phi;
  if (j.contains("default")) phi.default_value = num(j.at("default"));
  for (auto& t : j.value("assignments", nlohmann::json::array()))
    phi.assign({num(t[0]), num(t[1])}, num(t[2]));
  for (auto& e : j.value("log", nlohmann::json::array())) {
    PrimeColouring::LogEntry le;
    auto& m = e.at("matrix");
    le.matrix.m = {{{num(m[0][0]), num(m[0][1])}, {num(m[1][0]), num(m[1][1])}}};
    for (auto& t : e.value("theta", nlohmann::json::array()))
      le.theta[{num(t[0]), num(t[1])}] = num(t[2]);
    if (e.contains("box")) le.box_radius = num(e.at("box"));
    phi.log.push_back(std::move(le));
  }
  return phi;
}

inline PrimeColouring load_colouring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open colouring file: " + path);
  nlohmann::json j;
  in >> j;
  return colouring_from_json(j);
}

inline void save_colouring_file(const PrimeColouring& phi, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write colouring file: " + path);
  out << colouring_to_json(phi).dump(1) << "\n";
}

}  // namespace mg
