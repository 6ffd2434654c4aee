#include "braceforge/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "braceforge/errors.hpp"
#include "braceforge/json_io.hpp"
#include "braceforge/structure.hpp"

namespace braceforge {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

SkewBrace make_sd_c2_c3() {
  SkewBrace a = trivial_brace(make_cyclic(2));
  SkewBrace b = trivial_brace(make_cyclic(3));
  std::vector<std::vector<int>> action = {{0, 1, 2}, {0, 2, 1}};
  return semidirect_product(a, b, action);
}

SkewBrace make_ef_dihedral(int two_n) {
  FiniteGroup d = make_dihedral(two_n);
  int n = two_n / 2;
  ElementSet rotations(two_n);
  for (int i = 0; i < n; ++i) rotations.insert(i);
  ElementSet reflection = ElementSet::of(two_n, {0, n});
  return from_exact_factorization(d, rotations, reflection);
}

std::vector<NamedGroup> build_groups() {
  std::vector<NamedGroup> out;
  for (int n = 1; n <= 8; ++n)
    out.push_back({"c" + std::to_string(n), make_cyclic(n)});
  out.push_back({"s3", make_dihedral(6)});
  out.push_back({"d8", make_dihedral(8)});
  out.push_back({"q8", make_quaternion8()});
  out.push_back({"a4", make_alternating(4)});
  out.push_back({"a5", make_alternating(5)});
  out.push_back({"c5c4", make_presented_c5_c4()});
  out.push_back({"hol5", make_holomorph_cp(5)});
  std::sort(out.begin(), out.end(),
            [](const NamedGroup& a, const NamedGroup& b) { return a.name < b.name; });
  return out;
}

std::vector<NamedBrace> build_catalog() {
  std::vector<NamedBrace> out;
  auto add = [&](std::string name, SkewBrace b) {
    out.push_back({std::move(name), std::move(b)});
  };

  add("triv:c1", trivial_brace(make_cyclic(1)));
  for (int n = 2; n <= 8; ++n)
    add("triv:c" + std::to_string(n), trivial_brace(make_cyclic(n)));
  for (const char* name : {"s3", "d8", "q8", "a4", "a5", "c5c4", "hol5"}) {
    FiniteGroup g = group_by_name(name);
    add(std::string("triv:") + name, trivial_brace(g));
    add(std::string("optriv:") + name, almost_trivial(g));
  }

  add("wt100", triple_to_brace(
                   make_triple_id(make_presented_c5_c4(), make_presented_c5_c4()))
                   .brace);
  add("wt-d8",
      triple_to_brace(make_triple_id(make_dihedral(8), make_dihedral(8))).brace);
  add("wt18",
      triple_to_brace(make_triple_id(make_dihedral(6), make_dihedral(6))).brace);

  add("sd:c2-c3", make_sd_c2_c3());
  add("ef:d6", make_ef_dihedral(6));
  add("ef:d8", make_ef_dihedral(8));

  add("prod:triv:c2|optriv:s3",
      direct_product(trivial_brace(make_cyclic(2)),
                     almost_trivial(make_dihedral(6))));
  add("prod:triv:c3|triv:c3",
      direct_product(trivial_brace(make_cyclic(3)),
                     trivial_brace(make_cyclic(3))));
  add("prod:optriv:d8|triv:c2",
      direct_product(almost_trivial(make_dihedral(8)),
                     trivial_brace(make_cyclic(2))));
  add("prod:triv:s3|optriv:s3",
      direct_product(trivial_brace(make_dihedral(6)),
                     almost_trivial(make_dihedral(6))));

  std::sort(out.begin(), out.end(),
            [](const NamedBrace& a, const NamedBrace& b) { return a.name < b.name; });
  return out;
}

}  // namespace

const std::vector<NamedGroup>& catalog_groups() {
  static const std::vector<NamedGroup> groups = build_groups();
  return groups;
}

FiniteGroup group_by_name(const std::string& raw, int max_order) {
  if (lower(raw.substr(0, 5)) == "file:") {
    FiniteGroup g = group_from_file(raw.substr(5));
    if (g.order > max_order)
      throw CapacityError("group order " + std::to_string(g.order) +
                          " exceeds cap " + std::to_string(max_order));
    return g;
  }
  std::string name = lower(raw);
  for (const auto& g : catalog_groups())
    if (g.name == name) return g.group;
  auto numeric_suffix = [&](std::size_t from) -> std::optional<long> {
    if (from >= name.size()) return std::nullopt;
    bool digits = std::all_of(name.begin() + from, name.end(),
                              [](unsigned char c) { return std::isdigit(c); });
    if (!digits || name.size() - from > 9) return std::nullopt;
    return std::stol(name.substr(from));
  };
  auto require_within = [&](long order) {
    if (order > max_order)
      throw CapacityError("group order " + std::to_string(order) +
                          " exceeds cap " + std::to_string(max_order));
  };
  if (name[0] == 'c') {
    if (auto n = numeric_suffix(1)) {
      require_within(*n);
      return make_cyclic(static_cast<int>(*n));
    }
  }
  if (name[0] == 'd') {
    if (auto n = numeric_suffix(1)) {
      require_within(*n);
      return make_dihedral(static_cast<int>(*n));
    }
  }
  if (name.rfind("hol", 0) == 0) {
    if (auto p = numeric_suffix(3)) {
      require_within(*p * (*p - 1));
      return make_holomorph_cp(static_cast<int>(*p));
    }
  }
  throw InvalidArgumentError("unknown group name: " + raw);
}

const std::vector<NamedBrace>& catalog() {
  static const std::vector<NamedBrace> braces = build_catalog();
  return braces;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& nb : catalog()) names.push_back(nb.name);
  return names;
}

bool catalog_has(const std::string& name) {
  std::string key = lower(name);
  for (const auto& nb : catalog())
    if (nb.name == key) return true;
  return false;
}

const SkewBrace& catalog_brace(const std::string& name) {
  std::string key = lower(name);
  for (const auto& nb : catalog())
    if (nb.name == key) return nb.brace;
  throw InvalidArgumentError("unknown catalog brace: " + name);
}

SkewBrace construct_brace(const std::string& raw, int order_cap) {
  // prefix matching is case-insensitive; file paths keep their case
  std::string expr = lower(raw);
  SkewBrace result = [&]() -> SkewBrace {
    if (catalog_has(expr)) return catalog_brace(expr);
    if (expr.rfind("triv:", 0) == 0)
      return trivial_brace(group_by_name(raw.substr(5), order_cap));
    if (expr.rfind("optriv:", 0) == 0)
      return almost_trivial(group_by_name(raw.substr(7), order_cap));
    if (expr.rfind("triple:", 0) == 0) {
      std::string rest = raw.substr(7);
      auto c1 = rest.find(',');
      auto c2 = rest.find(',', c1 == std::string::npos ? c1 : c1 + 1);
      if (c1 == std::string::npos || c2 == std::string::npos)
        throw InvalidArgumentError("triple builder expects triple:<g>,<h>,id");
      std::string gname = rest.substr(0, c1);
      std::string hname = rest.substr(c1 + 1, c2 - c1 - 1);
      std::string theta = lower(rest.substr(c2 + 1));
      if (theta != "id")
        throw InvalidArgumentError("only the identity theta is supported by name");
      FiniteGroup g = group_by_name(gname, order_cap);
      FiniteGroup h = group_by_name(hname, order_cap);
      double prod = static_cast<double>(g.order) * h.order;
      if (prod > order_cap)
        throw CapacityError("triple pullback ambient order exceeds the cap");
      return triple_to_brace(make_triple_id(g, h)).brace;
    }
    if (expr.rfind("prod:", 0) == 0) {
      std::string rest = raw.substr(5);
      auto bar = rest.find('|');
      if (bar == std::string::npos)
        throw InvalidArgumentError("product builder expects prod:<expr>|<expr>");
      SkewBrace left = construct_brace(rest.substr(0, bar), order_cap);
      SkewBrace right = construct_brace(rest.substr(bar + 1), order_cap);
      double prod = static_cast<double>(left.order()) * right.order();
      if (prod > order_cap)
        throw CapacityError("product order exceeds the cap");
      return direct_product(left, right);
    }
    throw InvalidArgumentError("cannot parse brace expression: " + raw);
  }();
  if (result.order() > order_cap)
    throw CapacityError("brace order " + std::to_string(result.order()) +
                        " exceeds cap " + std::to_string(order_cap));
  return result;
}

}  // namespace braceforge
