#include "magnus/json_io.hpp"

#include <limits>

#include "magnus/conventions.hpp"
#include "magnus/errors.hpp"

namespace magnus {

namespace {

json coeff_to_json(const Int& c) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (c >= lo && c <= hi)
    return static_cast<std::int64_t>(c);
  return c.str();
}

Int coeff_from_json(const json& j) {
  if (j.is_number_integer())
    return Int(j.get<std::int64_t>());
  if (j.is_string())
    return Int(j.get<std::string>());
  throw precondition_error("coefficient must be an integer or decimal string");
}

} // namespace

json elem_to_json(const GroupRingElem& x) {
  json out = json::array();
  for (const auto& [e, c] : x.terms()) {
    json term;
    term["exps"] = e;
    term["coeff"] = coeff_to_json(c);
    out.push_back(std::move(term));
  }
  return out;
}

GroupRingElem elem_from_json(int genus, const json& j) {
  if (!j.is_array())
    throw precondition_error("element JSON must be an array of terms");
  GroupRingElem x(genus);
  for (const json& term : j) {
    ExpVec e = term.at("exps").get<ExpVec>();
    if (static_cast<int>(e.size()) != 2 * genus)
      throw precondition_error("exponent vector has wrong length");
    x.add_term(e, coeff_from_json(term.at("coeff")));
  }
  return x;
}

json chain_to_json(const Chain& c) {
  json coords = json::array();
  for (const auto& x : c.coords())
    coords.push_back(elem_to_json(x));
  return json{{"genus", c.genus()}, {"coords", std::move(coords)}};
}

Chain chain_from_json(const json& j) {
  const int genus = j.at("genus").get<int>();
  const json& coords = j.at("coords");
  if (!coords.is_array() || static_cast<int>(coords.size()) != 2 * genus)
    throw precondition_error("chain JSON needs 2g coordinates");
  std::vector<GroupRingElem> out;
  for (const json& x : coords)
    out.push_back(elem_from_json(genus, x));
  return Chain(genus, std::move(out));
}

json matrix_to_json(const RepMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.size(); ++j)
      row.push_back(elem_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RepMatrix matrix_from_json(int genus, const json& j) {
  RepMatrix m(genus);
  if (!j.is_array() || static_cast<int>(j.size()) != 2 * genus)
    throw precondition_error("matrix JSON has wrong row count");
  for (int i = 0; i < 2 * genus; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != 2 * genus)
      throw precondition_error("matrix JSON has wrong column count");
    for (int k = 0; k < 2 * genus; ++k)
      m.at(i, k) = elem_from_json(genus, row[k]);
  }
  return m;
}

namespace {

std::string table_key(int sigma, int i, int j) {
  return std::string(sigma > 0 ? "+" : "-") + "/" + std::to_string(i) + "/" +
         std::to_string(j);
}

} // namespace

json table_to_json(const PairingTable& t) {
  json entries;
  for (int sigma : {1, -1})
    for (int i = 1; i <= 2 * t.genus(); ++i)
      for (int j = 1; j <= 2 * t.genus(); ++j)
        entries[table_key(sigma, i, j)] = elem_to_json(t.base(sigma, i, j));
  return json{
      {"format", 1},
      {"genus", t.genus()},
      {"radius", t.radius()},
      {"conventions",
       {{"intersection_sign", conventions::intersection_sign},
        {"sigma_plus_short_slide", conventions::sigma_plus_short_slide},
        {"twist_conjugation_sign", conventions::twist_conjugation_sign}}},
      {"entries", std::move(entries)}};
}

PairingTable table_from_json(const json& j) {
  if (j.at("format").get<int>() != 1)
    throw precondition_error("unsupported table format version");
  const json& conv = j.at("conventions");
  if (conv.at("intersection_sign").get<int>() != conventions::intersection_sign ||
      conv.at("sigma_plus_short_slide").get<bool>() !=
          conventions::sigma_plus_short_slide ||
      conv.at("twist_conjugation_sign").get<int>() !=
          conventions::twist_conjugation_sign)
    throw precondition_error("table was derived under different conventions");
  const int genus = j.at("genus").get<int>();
  const int radius = j.at("radius").get<int>();
  std::vector<GroupRingElem> base(8 * genus * genus, GroupRingElem(genus));
  const json& entries = j.at("entries");
  std::size_t k = 0;
  for (int sigma : {1, -1})
    for (int i = 1; i <= 2 * genus; ++i)
      for (int jx = 1; jx <= 2 * genus; ++jx)
        base[k++] = elem_from_json(genus, entries.at(table_key(sigma, i, jx)));
  PairingTable t(genus, radius, std::move(base));
  t.validate();
  return t;
}

json verdict_to_json(const PairVerdict& v) {
  json out;
  out["kind"] = v.kind == PairVerdict::Kind::commute_in_image ? "commute_in_image"
                                                              : "free_in_image";
  if (v.witness) {
    out["witness"] = json{{"i", v.witness->i},
                          {"j", v.witness->j},
                          {"pairing", elem_to_json(v.witness->pairing)}};
  } else {
    out["witness"] = nullptr;
  }
  out["trace_identity_checked"] = v.trace_identity_checked;
  return out;
}

json norelation_report_to_json(const NoRelationReport& r) {
  return json{{"words_checked", r.words_checked},
              {"relation_found", r.relation_found},
              {"relation", r.relation},
              {"displacements_nilpotent", r.displacements_nilpotent},
              {"trace_ab_matches_formula", r.trace_ab_matches_formula},
              {"trace_ab_augmentation_zero", r.trace_ab_augmentation_zero}};
}

} // namespace magnus
