#pragma once

// JSON serialization: polynomials as { "vars": [...], "terms": [{ "coeff":
// decimal string, "exp": [...] }, ...] } with terms in descending graded-lex
// order, partitions as integer arrays, reports with their parameter map.

#include <cctype>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ospchar/laurent.hpp"
#include "ospchar/partition.hpp"
#include "ospchar/report.hpp"

namespace ospchar {

inline nlohmann::json to_json(const Partition& p) {
  return nlohmann::json(p.parts());
}

inline Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition_from_json: expected array");
  return Partition(j.get<std::vector<int>>());
}

inline nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json j;
  j["vars"] = p.table()->names();
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    nlohmann::json t;
    t["coeff"] = it->second.get_str();
    t["exp"] = it->first.exps();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline LaurentPoly poly_from_json(const nlohmann::json& j) {
  if (!j.contains("vars") || !j.contains("terms"))
    throw std::invalid_argument("poly_from_json: need vars and terms");
  VarTablePtr tab = VarTable::create(j["vars"].get<std::vector<std::string>>());
  LaurentPoly p = LaurentPoly::zero(tab);
  for (const auto& t : j["terms"]) {
    mpz_class c(t["coeff"].get<std::string>());
    p += LaurentPoly::term(tab, t["exp"].get<std::vector<int>>(), c);
  }
  return p;
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params) {
    // integers stay numbers; anything else stays a string
    bool numeric = !v.empty();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!(std::isdigit(static_cast<unsigned char>(v[i])) || (i == 0 && v[i] == '-')))
        numeric = false;
    if (numeric)
      params[k] = std::stoll(v);
    else
      params[k] = v;
  }
  return nlohmann::json{{"check", r.check},
                        {"params", params},
                        {"pass", r.pass},
                        {"detail", r.detail},
                        {"elapsed_seconds", r.elapsed_seconds}};
}

}  // namespace ospchar
