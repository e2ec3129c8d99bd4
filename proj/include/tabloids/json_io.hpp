#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tabloids/bijection.hpp"
#include "tabloids/common.hpp"
#include "tabloids/cycle_tabloid.hpp"
#include "tabloids/instance.hpp"
#include "tabloids/permutation.hpp"
#include "tabloids/tabloid.hpp"
#include "tabloids/verify.hpp"

namespace tabloids {

// All CLI-facing JSON uses ordered_json so key order (and therefore byte
// output) is deterministic.
using Json = nlohmann::ordered_json;

inline Json to_json(const Instance& inst) {
  Json mu = Json::array();
  for (const Partition& comp : inst.components()) mu.push_back(comp.parts());
  return Json{{"mu", mu}, {"l", inst.periods()}};
}

inline Json to_json(const Tabloid& t) {
  Json out = Json::array();
  for (const auto& comp : t.rows()) out.push_back(comp);
  return out;
}

inline Json to_json(const MarkedCycleTabloid& mt) {
  Json labels = Json::array();
  for (const auto& comp : mt.y().labels()) labels.push_back(comp);
  Json marks = Json::object();
  for (int k = 1; k <= mt.y().label_count(); ++k)
    marks[std::to_string(k)] = mt.mark(k);
  return Json{{"labels", labels}, {"marks", marks}};
}

// elapsed is intentionally not serialized: identical inputs must give
// byte-identical output.
inline Json to_json(const VerificationReport& rep) {
  Json out = to_json(rep.instance);
  out["rho"] = rep.rho.parts();
  out["j"] = rep.j;
  out["lhs"] = rep.lhs;
  out["rhs_marked"] = rep.rhs_marked;
  out["rhs_compressed"] = rep.rhs_compressed;
  out["bijection_ok"] = rep.bijection_ok;
  out["pass"] = rep.pass();
  return out;
}

namespace detail {

inline void require_int_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(Errc::parse_error, path + " must be an array");
  for (const auto& v : j)
    if (!v.is_number_integer())
      fail(Errc::parse_error, path + " must hold integers");
}

inline std::vector<int> int_array(const Json& j, const std::string& path) {
  require_int_array(j, path);
  return j.get<std::vector<int>>();
}

inline std::vector<std::vector<int>> int_array_2d(const Json& j,
                                                  const std::string& path) {
  if (!j.is_array()) fail(Errc::parse_error, path + " must be an array");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(int_array(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<std::vector<std::vector<int>>> int_array_3d(
    const Json& j, const std::string& path) {
  if (!j.is_array()) fail(Errc::parse_error, path + " must be an array");
  std::vector<std::vector<std::vector<int>>> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(int_array_2d(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace detail

inline Instance instance_from_json(const Json& doc) {
  if (!doc.contains("mu")) fail(Errc::parse_error, "missing field mu");
  if (!doc.contains("l")) fail(Errc::parse_error, "missing field l");
  return validate_instance(detail::int_array_2d(doc["mu"], "mu"),
                           detail::int_array(doc["l"], "l"));
}

// Permutations appear in documents as 1-based cycle lists only.
inline Permutation permutation_from_json(const Json& j, int m,
                                         const std::string& path) {
  return Permutation::from_cycles(m, detail::int_array_2d(j, path));
}

inline Tabloid tabloid_from_json(const Json& j, const Instance& inst) {
  return make_tabloid(inst, detail::int_array_3d(j, "tabloid"));
}

inline MarkedCycleTabloid marked_from_json(const Json& j,
                                           const Instance& inst,
                                           const std::vector<int>& gamma) {
  if (!j.contains("labels"))
    fail(Errc::parse_error, "missing field marked.labels");
  if (!j.contains("marks"))
    fail(Errc::parse_error, "missing field marked.marks");
  const auto labels = detail::int_array_3d(j["labels"], "marked.labels");
  std::vector<int> rho_parts;
  {
    std::map<int, int> occurrences;
    int maxlabel = 0;
    for (const auto& comp : labels)
      for (const auto& row : comp)
        for (int v : row) {
          ++occurrences[v];
          maxlabel = std::max(maxlabel, v);
        }
    for (int k = 1; k <= maxlabel; ++k) {
      auto it = occurrences.find(k);
      if (it == occurrences.end())
        fail(Errc::parse_error,
             "marked.labels misses label " + std::to_string(k));
      rho_parts.push_back(it->second);
    }
  }
  CycleTabloid y =
      validate_cycle_tabloid(labels, Partition(rho_parts), gamma, inst);
  std::vector<int> marks(rho_parts.size(), 0);
  for (const auto& [key, value] : j["marks"].items()) {
    int k = 0;
    try {
      k = std::stoi(key);
    } catch (const std::exception&) {
      fail(Errc::parse_error, "marked.marks key '" + key + "'");
    }
    if (k < 1 || k > static_cast<int>(marks.size()))
      fail(Errc::parse_error, "marked.marks key '" + key + "' out of range");
    if (!value.is_number_integer())
      fail(Errc::parse_error, "marked.marks[" + key + "] must be an integer");
    marks[static_cast<std::size_t>(k) - 1] = value.get<int>();
  }
  return MarkedCycleTabloid(std::move(y), std::move(marks));
}

}  // namespace tabloids
