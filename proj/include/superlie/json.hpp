#ifndef SUPERLIE_JSON_HPP
#define SUPERLIE_JSON_HPP

#include <json.hpp>

#include "superlie/assoc.hpp"
#include "superlie/core.hpp"
#include "superlie/hall.hpp"
#include "superlie/reduce.hpp"

namespace superlie {

using Json = nlohmann::json;

/// Bracket trees serialize as a name or a two-element array:
/// [y,x,x] -> [["y","x"],"x"].
inline Json term_json(const LieTerm& t, const Alphabet& alphabet) {
  if (t.is_leaf()) return alphabet[t.generator()].name;
  return Json::array({term_json(t.left(), alphabet),
                      term_json(t.right(), alphabet)});
}

inline Json element_json(const SuperBasisElement& e, const Alphabet& alphabet) {
  return Json{{"kind", e.kind == SuperKind::plain ? "plain" : "odd_square"},
              {"term", term_json(e.term, alphabet)},
              {"weight", e.weight},
              {"parity", static_cast<int>(e.parity)},
              {"index", e.index}};
}

/// Coefficients render as decimal strings (they are arbitrary precision).
inline Json coordinates_json(const Coordinates& c, const SuperBasis& basis) {
  Json entries = Json::array();
  for (const auto& [i, v] : c.coeffs)
    entries.push_back(Json{{"index", i}, {"coeff", v.str()}});
  return Json{{"coordinates", entries},
              {"basis", c.basis_fingerprint},
              {"text", to_string(c, basis)}};
}

inline Json collected_json(const CollectedPoly& p, const BasicSet& basics) {
  Json entries = Json::array();
  for (const auto& [seq, c] : p.terms())
    entries.push_back(Json{{"factors", seq},
                           {"coeff", c.str()},
                           {"text", to_string(BasicProduct{seq}, basics)}});
  return Json{{"products", entries}, {"text", to_string(p, basics)}};
}

inline Json rank_report_json(const RankReport& r, const Alphabet& alphabet) {
  Json pivots = Json::array();
  for (const AssocWord& w : r.pivot_words)
    pivots.push_back(to_string(w, alphabet));
  return Json{{"count", r.input_count}, {"rows", r.rows},   {"cols", r.cols},
              {"rank", r.rank},         {"independent", r.independent},
              {"pivots", pivots}};
}

/// Per-weight verify reports; for scheme hall each weight gets a second
/// object with the basic-product census and its expected size r^n.
inline Json weight_reports_json(const std::vector<WeightReport>& reports) {
  Json out = Json::array();
  for (const WeightReport& r : reports) {
    out.push_back(Json{{"weight", r.weight},
                       {"count", r.count},
                       {"rank", r.rank},
                       {"independent", r.independent}});
    if (r.expected) {
      out.push_back(Json{{"weight", r.weight},
                         {"count", *r.product_count},
                         {"rank", *r.product_rank},
                         {"independent", *r.product_rank == *r.product_count},
                         {"expected", r.expected->str()}});
    }
  }
  return out;
}

}  // namespace superlie

#endif  // SUPERLIE_JSON_HPP
