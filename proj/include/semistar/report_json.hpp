//
// semistar - finite semigroup representation analysis
//
// JSON shapes for the verdict reports.  The is-inverse schema is the wire
// format consumed by downstream tooling:
//   {"is_inverse": bool,
//    "jclasses": [{"size", "group_order", "sandwich_normalized",
//                  "semiunitary", "failing_element"}],
//    "oracle_agrees": bool}
//

#ifndef SEMISTAR_REPORT_JSON_HPP_
#define SEMISTAR_REPORT_JSON_HPP_

#include <json.hpp>

#include "involution.hpp"
#include "rees.hpp"
#include "schutz.hpp"
#include "semigroup.hpp"

namespace semistar {

using Json = nlohmann::ordered_json;

inline Json inverse_verdict_json(const InverseVerdict& v,
                                 const SemigroupTable& s) {
  Json out;
  out["is_inverse"] = v.is_inverse;
  out["jclasses"] = Json::array();
  for (const auto& r : v.per_jclass) {
    Json j;
    j["size"] = r.size;
    j["group_order"] = r.group_order;
    j["sandwich_normalized"] = r.sandwich_normalized;
    j["semiunitary"] = r.semiunitary;
    j["failing_element"] = r.failing_element < 0
                               ? Json(nullptr)
                               : Json(s.labels[r.failing_element]);
    out["jclasses"].push_back(std::move(j));
  }
  out["oracle_checked"] = v.oracle_checked;
  out["oracle_agrees"] = v.oracle_agrees;
  return out;
}

inline Json sandwich_json(const GroupData& group, const Sandwich& p) {
  Json rows = Json::array();
  for (const auto& row : p) {
    Json r = Json::array();
    for (int entry : row) {
      r.push_back(entry == kZeroEntry ? Json(nullptr)
                                      : Json(group.labels[entry]));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

inline Json coordinatization_json(const SemigroupTable& s,
                                  const ReesCoordinatization& coord,
                                  bool normalized) {
  Json out;
  out["jclass"] = coord.jclass;
  out["anchor"] = s.labels[coord.e];
  out["s"] = coord.s();
  out["t"] = coord.t();
  out["group_order"] = coord.group.order();
  out["sandwich"] = sandwich_json(coord.group, coord.sandwich);
  out["normalized"] = normalized;
  return out;
}

inline Json star_verdict_json(const StarVerdict& v) {
  Json out;
  out["semisimple"] = v.semisimple;
  out["star_representable"] = v.star_representable;
  out["irreps"] = Json::array();
  for (const auto& r : v.irreps) {
    Json j;
    j["jclass"] = r.jclass;
    j["sigma"] = r.sigma_index;
    j["dim"] = r.dim;
    j["contragredient_matches"] = r.equivalent;
    j["star_form_built"] = r.star_form_built;
    j["factorization_obstruction"] = r.factorization_obstruction;
    out["irreps"].push_back(std::move(j));
  }
  return out;
}

}  // namespace semistar

#endif  // SEMISTAR_REPORT_JSON_HPP_
