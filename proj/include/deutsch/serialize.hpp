#pragma once

// JSON encodings. Big integers are decimal strings; rationals and series
// coefficients are [numerator, denominator] string pairs.

#include <json.hpp>

#include "deutsch/bijection.hpp"
#include "deutsch/matrix.hpp"
#include "deutsch/oracle.hpp"
#include "deutsch/series.hpp"
#include "deutsch/stats.hpp"

namespace deutsch {

using Json = nlohmann::json;

inline Json rat_pair(const BigRat& x) { return Json::array({x.get_num().get_str(), x.get_den().get_str()}); }

inline BigRat rat_from_pair(const Json& j) {
  BigRat r(BigInt(j.at(0).get<std::string>()), BigInt(j.at(1).get<std::string>()));
  r.canonicalize();
  return r;
}

inline Json to_json(const SeriesZ& s) {
  Json c = Json::array();
  for (const auto& x : s.coefficients()) c.push_back(rat_pair(x));
  return {{"order", s.order()}, {"coefficients", c}};
}

inline SeriesZ series_from_json(const Json& j) {
  std::vector<BigRat> c;
  for (const auto& x : j.at("coefficients")) c.push_back(rat_from_pair(x));
  SeriesZ s(std::move(c));
  if (s.order() != j.at("order").get<std::size_t>()) throw Error("series order does not match coefficient count");
  return s;
}

inline Json to_json(const PolyV& p) {
  Json c = Json::array();
  for (const auto& x : p.coefficients()) c.push_back(rat_pair(x));
  return c;
}

inline PolyV poly_from_json(const Json& j) {
  std::vector<BigRat> c;
  for (const auto& x : j) c.push_back(rat_from_pair(x));
  return PolyV(std::move(c));
}

inline Json to_json(const RatFnV& f) {
  return {{"num", to_json(f.num())}, {"den", to_json(f.den())}, {"text", f.to_string()}};
}

inline Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e = {{"name", c.name}, {"dimension", c.dimension}, {"pass", c.pass}};
    if (c.witness) e["witness"] = {{"i", c.witness->i}, {"j", c.witness->j}, {"lhs", c.witness->lhs}, {"rhs", c.witness->rhs}};
    checks.push_back(std::move(e));
  }
  return {{"ok", r.ok()}, {"checks", checks}};
}

inline Json to_json(const OracleCell& c) {
  return {{"formula", c.formula}, {"n", c.n},          {"h", c.h}, {"i", c.i}, {"source", c.source},
          {"expected", to_string(c.expected)}, {"actual", to_string(c.actual)}, {"ok", c.ok}};
}

/// Summary per formula instance plus every mismatching cell.
inline Json to_json(const OracleReport& r) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_formula;  // checked, failed
  Json mismatches = Json::array();
  for (const auto& c : r.cells) {
    auto& slot = per_formula[c.formula];
    ++slot.first;
    if (!c.ok) {
      ++slot.second;
      mismatches.push_back(to_json(c));
    }
  }
  Json formulas = Json::array();
  for (const auto& [name, counts] : per_formula)
    formulas.push_back({{"formula", name}, {"cells", counts.first}, {"failed", counts.second}});
  return {{"ok", r.ok()}, {"cells", r.cells.size()}, {"formulas", formulas}, {"mismatches", mismatches},
          {"skipped", r.skipped}};
}

inline Json to_json(const CertificationReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json joint = Json::array();
    for (const auto& [key, count] : row.joint) joint.push_back({key.first, key.second, count});
    rows.push_back({{"n", row.n},
                    {"deutsch", row.deutsch_count},
                    {"motzkin", row.motzkin_count},
                    {"image", row.image_size},
                    {"injective", row.injective},
                    {"onto", row.onto},
                    {"round_trip", row.round_trip},
                    {"length_preserved", row.length_preserved},
                    {"up_steps_equal_returns", row.up_steps_match_returns},
                    {"end_level_vs_ground_flats", joint},
                    {"joint_diagonal", row.joint_is_diagonal()},
                    {"ok", row.ok()}});
  }
  Json j = {{"ok", r.ok()}, {"rows", rows}};
  if (!r.ok()) j["first_failure"] = r.first_failure;
  return j;
}

inline Json to_json(const ComparisonRow& row) {
  return {{"law", row.law}, {"n", row.n}, {"exact", rat_pair(row.exact)}, {"asymptotic", row.asymptotic},
          {"ratio", row.ratio}};
}

inline Json to_json(const ExponentAdjudication& a) {
  return {{"n", a.n},
          {"product_of_u_diagonal", a.product},
          {"printed_candidate", a.printed_candidate},
          {"printed_holds", a.printed_holds},
          {"corrected_candidate", a.corrected_candidate},
          {"corrected_holds", a.corrected_holds},
          {"verified_exponent", a.verified_offset == 0 ? std::string("none")
                                                       : "1-v^(n+" + std::to_string(a.verified_offset) + ")"}};
}

}  // namespace deutsch
