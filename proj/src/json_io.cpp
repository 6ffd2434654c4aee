#include "braceforge/json_io.hpp"

#include <fstream>
#include <sstream>

#include "braceforge/errors.hpp"

namespace braceforge {

namespace {

std::vector<std::vector<int>> table_from_json(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw InvalidArgumentError(std::string("missing table field: ") + key);
  return j[key].get<std::vector<std::vector<int>>>();
}

}  // namespace

json group_to_json(const FiniteGroup& g) {
  json j;
  j["order"] = g.order;
  j["table"] = g.table;
  if (!g.labels.empty()) j["labels"] = g.labels;
  return j;
}

FiniteGroup group_from_json(const json& j) {
  auto table = table_from_json(j, "table");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  if (j.contains("order") && j["order"].get<int>() != static_cast<int>(table.size()))
    throw InvalidArgumentError("declared order does not match the table");
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

FiniteGroup group_from_file(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgumentError("invalid JSON in " + path + ": " + e.what());
  }
  return group_from_json(j);
}

json brace_to_json(const SkewBrace& a) {
  json j;
  j["order"] = a.order();
  j["add"] = a.add.table;
  j["circ"] = a.circ.table;
  return j;
}

SkewBrace brace_from_json(const json& j, int order_cap) {
  auto add = table_from_json(j, "add");
  auto circ = table_from_json(j, "circ");
  if (j.contains("order") && j["order"].get<int>() != static_cast<int>(add.size()))
    throw InvalidArgumentError("declared order does not match the tables");
  return validate_skew_brace(FiniteGroup::from_table(std::move(add)),
                             FiniteGroup::from_table(std::move(circ)), order_cap);
}

json element_set_to_json(const ElementSet& s) { return json(s.indices()); }

json product_tree_to_json(const ProductTree& t) {
  json j;
  if (t.is_leaf()) {
    j["ideal"] = element_set_to_json(t.value);
  } else {
    j["value"] = element_set_to_json(t.value);
    j["left"] = product_tree_to_json(*t.left);
    j["right"] = product_tree_to_json(*t.right);
  }
  return j;
}

json primeness_report(const SkewBrace& a, bool witnesses) {
  json j;
  SemiprimeCheck sp = semiprime_check(a);
  PrimeCheck pr = prime_check(a);
  StrongCheck ssp = strongly_semiprime_check(a);
  StrongCheck spr = strongly_prime_check(a);
  j["semiprime"] = sp.holds;
  j["prime"] = pr.holds;
  j["strongly_semiprime"] = ssp.holds;
  j["strongly_prime"] = spr.holds;
  if (witnesses) {
    json w;
    w["semiprime"] = sp.witness ? element_set_to_json(*sp.witness) : json(nullptr);
    w["prime"] = pr.witness
                     ? json::array({element_set_to_json(pr.witness->first),
                                    element_set_to_json(pr.witness->second)})
                     : json(nullptr);
    w["strongly_semiprime"] =
        ssp.witness ? product_tree_to_json(*ssp.witness) : json(nullptr);
    w["strongly_prime"] =
        spr.witness ? product_tree_to_json(*spr.witness) : json(nullptr);
    j["witness"] = w;
  }
  return j;
}

namespace {

json group_summary(const FiniteGroup& g) {
  json j;
  j["order"] = g.order;
  j["abelian"] = g.is_abelian();
  auto nc = nilpotency_class(g);
  auto dl = derived_length(g);
  j["nilpotency_class"] = nc ? json(*nc) : json(nullptr);
  j["derived_length"] = dl ? json(*dl) : json(nullptr);
  return j;
}

}  // namespace

json analysis_report(const std::string& id, const SkewBrace& a, bool witnesses,
                     int iso_cap) {
  json j;
  j["schema"] = 1;
  j["brace"] = id;
  j["order"] = a.order();

  auto two_sided_witness = right_brace_violation(a);
  j["two_sided"] = !two_sided_witness.has_value();
  j["weakly_trivial"] = is_weakly_trivial(a);
  j["ideal_count"] = static_cast<int>(all_ideals(a).size());

  json lengths;
  json flags;
  SeriesReport left = series(a, SeriesKind::left);
  SeriesReport right = series(a, SeriesKind::right);
  SeriesReport strong = series(a, SeriesKind::strong);
  SeriesReport derived = series(a, SeriesKind::derived);
  lengths["left"] = left.length;
  lengths["right"] = right.length;
  lengths["strong"] = strong.length;
  lengths["derived"] = derived.length;
  j["series"] = lengths;
  j["left_nilpotent"] = left.reaches_zero;
  j["right_nilpotent"] = right.reaches_zero;
  j["strongly_nilpotent"] = strong.reaches_zero;
  j["soluble"] = derived.reaches_zero;

  j["primeness"] = primeness_report(a, false);
  j["additive_group"] = group_summary(a.add);
  j["multiplicative_group"] = group_summary(a.circ);

  try {
    auto iso = find_isomorphism(a.add, a.circ, iso_cap);
    j["isomorphic_add_mult"] = iso.has_value();
  } catch (const CapacityError&) {
    j["isomorphic_add_mult"] = "search-capped";
  }

  if (witnesses) {
    json w;
    w["two_sided"] = two_sided_witness
                         ? json::array({(*two_sided_witness)[0],
                                        (*two_sided_witness)[1],
                                        (*two_sided_witness)[2]})
                         : json(nullptr);
    json pw = primeness_report(a, true);
    w["primeness"] = pw["witness"];
    j["witnesses"] = w;
  }
  return j;
}

json solution_to_json(const SetSolution& s) {
  json j;
  j["schema"] = 1;
  j["size"] = s.size;
  json pairs = json::array();
  for (const auto& [u, v] : s.r) pairs.push_back(json::array({u, v}));
  j["r"] = pairs;
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

SkewBrace load_brace(const std::string& spec, int order_cap) {
  bool looks_like_path =
      spec.find('/') != std::string::npos ||
      (spec.size() > 5 && spec.compare(spec.size() - 5, 5, ".json") == 0);
  if (!looks_like_path) return construct_brace(spec, order_cap);
  json j;
  try {
    j = json::parse(read_text_file(spec));
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgumentError("invalid JSON in " + spec + ": " + e.what());
  }
  return brace_from_json(j, order_cap);
}

}  // namespace braceforge
