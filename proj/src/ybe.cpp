#include "braceforge/ybe.hpp"

#include "braceforge/errors.hpp"

namespace braceforge {

bool is_bijective(const SetSolution& s) {
  const int n2 = s.size * s.size;
  if (static_cast<int>(s.r.size()) != n2) return false;
  std::vector<bool> seen(n2, false);
  for (const auto& [u, v] : s.r) {
    if (u < 0 || u >= s.size || v < 0 || v >= s.size) return false;
    int idx = u * s.size + v;
    if (seen[idx]) return false;
    seen[idx] = true;
  }
  return true;
}

bool is_nondegenerate(const SetSolution& s) {
  std::vector<bool> seen(s.size);
  for (int x = 0; x < s.size; ++x) {
    seen.assign(s.size, false);
    for (int y = 0; y < s.size; ++y) {
      int u = s.apply(x, y).first;
      if (seen[u]) return false;
      seen[u] = true;
    }
  }
  for (int y = 0; y < s.size; ++y) {
    seen.assign(s.size, false);
    for (int x = 0; x < s.size; ++x) {
      int v = s.apply(x, y).second;
      if (seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

std::optional<std::array<int, 3>> braid_violation(const SetSolution& s) {
  auto r12 = [&](std::array<int, 3> t) {
    auto [u, v] = s.apply(t[0], t[1]);
    return std::array<int, 3>{u, v, t[2]};
  };
  auto r23 = [&](std::array<int, 3> t) {
    auto [u, v] = s.apply(t[1], t[2]);
    return std::array<int, 3>{t[0], u, v};
  };
  for (int x = 0; x < s.size; ++x)
    for (int y = 0; y < s.size; ++y)
      for (int z = 0; z < s.size; ++z) {
        std::array<int, 3> t{x, y, z};
        if (r12(r23(r12(t))) != r23(r12(r23(t))))
          return t;
      }
  return std::nullopt;
}

bool check_braid(const SetSolution& s) { return !braid_violation(s); }

SetSolution solution_from_brace(const SkewBrace& a) {
  const int n = a.order();
  SetSolution s;
  s.size = n;
  s.r.resize(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int u = a.lambda(x, y);
      int v = a.times(a.times(a.circ_inv(u), x), y);
      s.r[x * n + y] = {u, v};
    }
  if (!is_bijective(s))
    throw ConsistencyError("brace solution is not a bijection on pairs");
  if (!is_nondegenerate(s))
    throw ConsistencyError("brace solution is degenerate");
  if (auto w = braid_violation(s))
    throw ConsistencyError("brace solution violates the braid relation");
  return s;
}

}  // namespace braceforge
