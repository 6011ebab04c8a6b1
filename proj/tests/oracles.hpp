#pragma once

#include <vector>

#include "gorelab/homology.hpp"
#include "gorelab/representation.hpp"

namespace oracles {

using namespace gorelab;

inline std::size_t span_rank(const std::vector<std::vector<std::uint32_t>>& rows, FieldSpec k) {
  if (rows.empty() || rows.front().empty()) return 0;
  Mat m(0, rows.front().size(), k);
  for (const auto& r : rows) m.append_row(r);
  return rank(m);
}

// Rank of f -> d then f on a basis of Hom(P_src, N); d : P_dom -> P_src.
inline std::size_t pullback_rank(const ModuleHom& d, const std::vector<ModuleHom>& hom_src, FieldSpec k) {
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& f : hom_src) rows.push_back(flatten(compose(d, f)));
  return span_rank(rows, k);
}

/// Cocycles modulo coboundaries of Hom(P_., N) on an explicit minimal resolution.
/// Returns dims of Ext^0 .. Ext^depth.
inline std::vector<std::size_t> brute_ext(const Representation& m, const Representation& n, std::size_t depth) {
  const FieldSpec k = m.field();
  auto res = minimal_projective_resolution(m, depth + 1);
  std::vector<std::vector<ModuleHom>> homs;
  for (std::size_t i = 0; i <= res.length(); ++i) homs.push_back(hom_basis(res.projective(i), n));
  // rank of delta_i : Hom(P_{i-1}, N) -> Hom(P_i, N)
  std::vector<std::size_t> delta(res.length() + 2, 0);
  for (std::size_t i = 1; i <= res.length(); ++i) delta[i] = pullback_rank(res.differentials[i - 1], homs[i - 1], k);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= depth; ++i) {
    if (i > res.length()) {
      out.push_back(0);
      continue;
    }
    out.push_back(homs[i].size() - delta[i + 1] - delta[i]);
  }
  return out;
}

/// Largest k <= cap such that P_0 .. P_k of m stay within max_dim.
inline std::size_t affordable_depth(const Representation& m, std::size_t max_dim, std::size_t cap) {
  Representation cur = m;
  for (std::size_t k = 0; k <= cap; ++k) {
    if (cur.is_zero()) return cap;
    SyzygyData s = syzygy_data(cur);
    if (s.cover.cover.total_dim() > max_dim) return k == 0 ? 0 : k - 1;
    cur = s.module;
  }
  return cap;
}

}  // namespace oracles
