// JSON documents for projects, raw problems, and results. Schema version 1.
//
// A project document:
//   {"schema": 1,
//    "activities": [{"label": "a1", "early_start": 0, "late_finish": 5}, ...],
//    "start_start":  [{"from": "a2", "to": "a1", "lag": -2}, ...],
//    "start_finish": [{"from": "a1", "to": "a1", "lag": 4}, ...]}
// An edge {from, to, lag} bounds activity `to` relative to the initiation
// of `from`. Unlisted pairs carry no constraint. early_start and
// late_finish accept a number, "-inf", or null (no bound).
//
// A raw problem document carries matrix literals:
//   {"schema": 1, "A": "4 0 -inf; 2 3 1; 1 1 3", "B": "...",
//    "C": "...", "g": "0 0 0", "h": "5 5 5"}
// B is optional (defaults to all-zero); C and h must come together.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tropt/format.hpp"
#include "tropt/scheduling.hpp"

namespace tropt {

using json = nlohmann::ordered_json;

inline json scalar_to_json(const mp_scalar& s) {
  if (s.is_zero()) return json(std::string(max_plus::zero_token));
  double v = s.finite_value();
  if (v == std::floor(v) && std::fabs(v) < 9e15) return json(static_cast<std::int64_t>(v));
  return json(v);
}

inline json vector_to_json(const mp_vector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(scalar_to_json(v[i]));
  return out;
}

inline json matrix_to_json(const mp_matrix& a) {
  json out = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(scalar_to_json(a(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

namespace detail {

inline const json& require_field(const json& o, const char* key, const std::string& where) {
  auto it = o.find(key);
  if (it == o.end()) throw parse_error(where + key + ": missing required field");
  return *it;
}

inline double finite_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw parse_error(where + ": expected a number");
  return v.get<double>();
}

inline std::string label_string(const json& v, const std::string& where) {
  if (!v.is_string() || v.get<std::string>().empty())
    throw parse_error(where + ": expected a non-empty string");
  return v.get<std::string>();
}

// number, "-inf", or null; null means no bound (the zero element)
inline mp_scalar scalar_field(const json& v, const std::string& where) {
  if (v.is_null()) return mp_scalar::zero();
  if (v.is_number()) return mp_scalar(v.get<double>());
  if (v.is_string()) {
    try {
      return parse_scalar<max_plus>(v.get<std::string>());
    } catch (const error&) {
    }
  }
  throw parse_error(where + ": expected a number, \"-inf\", or null");
}

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid document: ") + e.what());
  }
}

inline void check_schema(const json& doc) {
  if (!doc.is_object()) throw parse_error("document root must be an object");
  const json& v = require_field(doc, "schema", "");
  if (!v.is_number_integer() || v.get<std::int64_t>() != 1)
    throw parse_error("schema: unsupported version, expected 1");
}

}  // namespace detail

inline project parse_project_json(const json& doc) {
  detail::check_schema(doc);
  const json& acts = detail::require_field(doc, "activities", "");
  if (!acts.is_array() || acts.empty())
    throw parse_error("activities: expected a non-empty array");

  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < acts.size(); ++i) {
    std::string where = "activities[" + std::to_string(i) + "]";
    if (!acts[i].is_object()) throw parse_error(where + ": expected an object");
    std::string label =
        detail::label_string(detail::require_field(acts[i], "label", where + "."), where + ".label");
    if (!index.emplace(label, i).second)
      throw parse_error(where + ".label: duplicate label '" + label + "'");
    labels.push_back(std::move(label));
  }

  project p(std::move(labels));
  for (std::size_t i = 0; i < acts.size(); ++i) {
    std::string where = "activities[" + std::to_string(i) + "]";
    if (auto it = acts[i].find("early_start"); it != acts[i].end())
      p.set_early_start(i, detail::scalar_field(*it, where + ".early_start"));
    if (auto it = acts[i].find("late_finish"); it != acts[i].end())
      p.set_late_finish(i, detail::scalar_field(*it, where + ".late_finish"));
  }

  auto read_edges = [&](const char* key, auto&& add) {
    auto it = doc.find(key);
    if (it == doc.end()) return;
    if (!it->is_array()) throw parse_error(std::string(key) + ": expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      std::string where = std::string(key) + "[" + std::to_string(i) + "]";
      const json& e = (*it)[i];
      if (!e.is_object()) throw parse_error(where + ": expected an object");
      auto resolve = [&](const char* role) {
        std::string label =
            detail::label_string(detail::require_field(e, role, where + "."), where + "." + role);
        auto hit = index.find(label);
        if (hit == index.end())
          throw parse_error(where + "." + role + ": unknown label '" + label + "'");
        return hit->second;
      };
      std::size_t from = resolve("from");
      std::size_t to = resolve("to");
      double lag =
          detail::finite_number(detail::require_field(e, "lag", where + "."), where + ".lag");
      add(from, to, mp_scalar(lag));
    }
  };
  read_edges("start_start",
             [&](std::size_t f, std::size_t t, mp_scalar l) { p.add_start_start(f, t, l); });
  read_edges("start_finish",
             [&](std::size_t f, std::size_t t, mp_scalar l) { p.add_start_finish(f, t, l); });
  return p;
}

inline project parse_project(const std::string& text) {
  return parse_project_json(detail::parse_text(text));
}

inline json project_to_json(const project& p) {
  json doc;
  doc["schema"] = 1;
  json acts = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json a;
    a["label"] = p.labels()[i];
    a["early_start"] = scalar_to_json(p.early_start()[i]);
    a["late_finish"] = scalar_to_json(p.late_finish()[i]);
    acts.push_back(std::move(a));
  }
  doc["activities"] = std::move(acts);
  auto edges = [&](const mp_matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) {
          json e;
          e["from"] = p.labels()[j];
          e["to"] = p.labels()[i];
          e["lag"] = scalar_to_json(m(i, j));
          out.push_back(std::move(e));
        }
    return out;
  };
  doc["start_start"] = edges(p.start_start());
  doc["start_finish"] = edges(p.start_finish());
  return doc;
}

inline std::string serialize_project(const project& p) { return project_to_json(p).dump(2) + "\n"; }

struct raw_problem {
  mp_matrix objective;                  // A
  mp_matrix prereq;                     // B
  std::optional<mp_matrix> bound_map;   // C
  mp_vector lower;                      // g
  std::optional<mp_vector> upper;       // h
};

inline raw_problem parse_raw_problem_json(const json& doc) {
  detail::check_schema(doc);
  auto matrix_at = [&](const char* key) {
    const json& v = detail::require_field(doc, key, "");
    if (!v.is_string()) throw parse_error(std::string(key) + ": expected a matrix literal string");
    try {
      return parse_matrix<max_plus>(v.get<std::string>());
    } catch (const error& e) {
      throw parse_error(std::string(key) + ": " + e.what());
    }
  };
  auto vector_at = [&](const char* key) {
    const json& v = detail::require_field(doc, key, "");
    if (!v.is_string()) throw parse_error(std::string(key) + ": expected a vector literal string");
    try {
      return parse_vector<max_plus>(v.get<std::string>());
    } catch (const error& e) {
      throw parse_error(std::string(key) + ": " + e.what());
    }
  };

  mp_matrix a = matrix_at("A");
  if (!a.square()) throw parse_error("A: expected a square matrix");
  const std::size_t n = a.rows();
  mp_vector g = vector_at("g");
  if (g.dim() != n) throw parse_error("g: dimension does not match A");

  mp_matrix b(n, n);
  if (doc.contains("B")) {
    b = matrix_at("B");
    if (!b.square() || b.rows() != n) throw parse_error("B: shape does not match A");
  }

  raw_problem rp{std::move(a), std::move(b), std::nullopt, std::move(g), std::nullopt};
  if (doc.contains("C") != doc.contains("h"))
    throw parse_error("C and h must be given together");
  if (doc.contains("C")) {
    mp_matrix c = matrix_at("C");
    if (c.cols() != n) throw parse_error("C: column count does not match A");
    mp_vector h = vector_at("h");
    if (h.dim() != c.rows()) throw parse_error("h: dimension does not match C");
    rp.bound_map = std::move(c);
    rp.upper = std::move(h);
  }
  return rp;
}

inline raw_problem parse_raw_problem(const std::string& text) {
  return parse_raw_problem_json(detail::parse_text(text));
}

inline json schedule_to_json(const project& p, const schedule& s) {
  json doc;
  doc["schema"] = 1;
  doc["status"] = "optimal";
  doc["theta"] = scalar_to_json(s.max_flow_time);
  mp_vector flows = flow_times(s);
  json acts = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json a;
    a["label"] = p.labels()[i];
    a["initiation"] = scalar_to_json(s.initiation[i]);
    a["completion"] = scalar_to_json(s.completion[i]);
    a["flow_time"] = scalar_to_json(flows[i]);
    acts.push_back(std::move(a));
  }
  doc["activities"] = std::move(acts);
  json fam;
  fam["u_lower"] = vector_to_json(s.family.lower);
  fam["u_upper"] = s.family.upper ? vector_to_json(*s.family.upper) : json();
  fam["generator"] = matrix_to_json(s.family.generator);
  doc["family"] = std::move(fam);
  doc["diagnostics"] = json::array();
  return doc;
}

inline json optimum_to_json(const optimum<max_plus>& o, const mp_vector& x) {
  json doc;
  doc["schema"] = 1;
  doc["status"] = "optimal";
  doc["theta"] = scalar_to_json(o.value);
  doc["x"] = vector_to_json(x);
  json fam;
  fam["u_lower"] = vector_to_json(o.solutions.lower);
  fam["u_upper"] = o.solutions.upper ? vector_to_json(*o.solutions.upper) : json();
  fam["generator"] = matrix_to_json(o.solutions.generator);
  doc["family"] = std::move(fam);
  doc["diagnostics"] = json::array();
  return doc;
}

}  // namespace tropt
