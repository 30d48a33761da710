#pragma once

#include <string>

#include "json.hpp"
#include "nsgff/classify.hpp"
#include "nsgff/enumerate.hpp"
#include "nsgff/rohrbach.hpp"

namespace nsgff {

using Json = nlohmann::json;

inline Json to_json(const RelativeIdeal& e) {
  return Json{{"gens", e.gens()},
              {"min", e.min()},
              {"stability_bound", e.stability_bound()},
              {"tail_start", e.tail_start()}};
}

inline Json to_json(const BoundsReport& b) {
  return Json{{"type_plus_one_le_e", to_string(b.type_plus_one_le_e)},
              {"type_plus_one_eq_e", b.type_plus_one_eq_e},
              {"e_le_binom", to_string(b.e_le_binom)},
              {"e_le_rohrbach", to_string(b.e_le_rohrbach)},
              {"rohrbach_value", b.rohrbach_value ? Json(*b.rohrbach_value)
                                                  : Json(nullptr)}};
}

inline Json to_json(const SemigroupReport& r) {
  const auto& h = r.semigroup;
  return Json{
      {"min_gens", h.min_gens()},
      {"multiplicity", h.multiplicity()},
      {"embdim", h.embdim()},
      {"type", h.type()},
      {"genus", h.genus()},
      {"frobenius", h.frobenius()},
      {"conductor", h.conductor()},
      {"pf", h.pseudo_frobenius()},
      {"gaps_count", h.genus()},
      {"trace", to_json(r.trace)},
      {"flags",
       {{"ffg", r.flags.ffg},
        {"nearly_gorenstein", r.flags.nearly_gorenstein},
        {"gorenstein", r.flags.gorenstein},
        {"minimal_multiplicity", r.flags.minimal_multiplicity}}},
      {"bounds", to_json(r.bounds)},
      {"valuations", r.valuations},
  };
}

inline Json to_json(const RohrbachResult& r) {
  return Json{{"value", r.value},
              {"exact", r.exact},
              {"witness", r.witness.elements},
              {"nodes", r.nodes}};
}

inline Json to_json(const Counterexample& c) {
  return Json{{"reason", c.reason}, {"report", to_json(c.report)}};
}

inline Json to_json(const VerificationResult& v) {
  Json cex = Json::array();
  for (const auto& c : v.counterexamples) cex.push_back(to_json(c));
  Json exc = Json::array();
  for (const auto& c : v.exceptions) exc.push_back(to_json(c));
  Json notes = Json::object();
  for (const auto& [k, val] : v.notes) notes[k] = val;
  return Json{{"campaign", v.campaign},
              {"pass", v.pass},
              {"corpus_size", v.corpus_size},
              {"checked", v.checked},
              {"counterexample_total", v.counterexample_total},
              {"truncated", v.truncated},
              {"counterexamples", cex},
              {"exceptions", exc},
              {"notes", notes}};
}

}  // namespace nsgff
