#include "gorelab/decompose.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "gorelab/polynomial.hpp"

namespace gorelab {

ModuleHom EndomorphismRing::to_hom(std::span<const std::uint32_t> coords) const {
  ModuleHom out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!coords[i]) continue;
    ModuleHom term = scale(basis[i], coords[i]);
    out = out.components.empty() ? term : add(out, term);
  }
  if (out.components.empty()) {
    for (const auto& c : basis.front().components) out.components.emplace_back(c.rows(), c.cols(), c.field());
  }
  return out;
}

EndomorphismRing endomorphism_ring(const Representation& m) {
  EndomorphismRing ring;
  const FieldSpec k = m.field();
  ring.basis = hom_basis(m, m);
  const std::size_t d = ring.basis.size();
  if (d > kMaxEndomorphismDim) throw DecompositionTooLarge(d);
  if (d == 0) {
    ring.algebra = AbstractAlgebra(k, {}, {});
    return ring;
  }
  Mat flat(0, flatten(ring.basis.front()).size(), k);
  for (const auto& f : ring.basis) flat.append_row(flatten(f));
  RowSpaceSolver solver(flat);
  std::vector<Mat> right;
  for (std::size_t j = 0; j < d; ++j) {
    Mat r(d, d, k);
    for (std::size_t i = 0; i < d; ++i) {
      auto c = solver.coordinates(flatten(compose(ring.basis[i], ring.basis[j])));
      std::copy(c->begin(), c->end(), r.row(i).begin());
    }
    right.push_back(std::move(r));
  }
  auto unit = solver.coordinates(flatten(identity_hom(m)));
  ring.algebra = AbstractAlgebra(k, std::move(right), std::move(*unit));
  return ring;
}

AbstractAlgebra endomorphism_algebra(const Representation& m) { return endomorphism_ring(m).algebra; }

namespace {

Summand image_summand(const Representation& m, const ModuleHom& e) {
  const FieldSpec k = m.field();
  VertexBasis basis;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    const Mat& c = e.components[v];
    basis.push_back(c.rows() ? row_space(c) : Mat(0, m.dim(v), k));
  }
  Summand s;
  s.module = subrepresentation(m, basis);
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    s.inclusion.components.push_back(basis[v]);
    Mat proj(m.dim(v), basis[v].rows(), k);
    if (basis[v].rows()) {
      RowSpaceSolver solver(basis[v]);
      for (std::size_t i = 0; i < m.dim(v); ++i) {
        auto c = solver.coordinates(e.components[v].row(i));
        std::copy(c->begin(), c->end(), proj.row(i).begin());
      }
    }
    s.projection.components.push_back(std::move(proj));
  }
  return s;
}

}  // namespace

bool DecompositionReport::verify(const Representation& m) const {
  ModuleHom total = zero_hom(m, m);
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const auto& s = summands[i];
    if (!is_homomorphism(s.module, m, s.inclusion) || !is_homomorphism(m, s.module, s.projection)) return false;
    for (std::size_t j = 0; j < summands.size(); ++j) {
      ModuleHom c = compose(s.inclusion, summands[j].projection);
      if (i == j ? !(c == identity_hom(s.module)) : !c.is_zero()) return false;
    }
    total = add(total, compose(s.projection, s.inclusion));
  }
  return total == identity_hom(m);
}

namespace {

constexpr std::size_t kExactSplitDim = 96;

Summand restrict(const Summand& outer, const Summand& inner) {
  return {inner.module, compose(inner.inclusion, outer.inclusion), compose(outer.projection, inner.projection)};
}

// Complementary submodules given by per-vertex bases that together span m.
std::vector<Summand> split_along(const Representation& m, const std::vector<VertexBasis>& parts) {
  const FieldSpec k = m.field();
  const std::size_t nv = m.dims().size();
  std::vector<Summand> out(parts.size());
  for (std::size_t v = 0; v < nv; ++v) {
    Mat stacked(0, m.dim(v), k);
    for (const auto& p : parts) stacked = stacked.vstack(p[v]);
    Mat inv = m.dim(v) ? inverse(stacked) : Mat(0, 0, k);
    std::size_t col = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::size_t r = parts[i][v].rows();
      out[i].inclusion.components.push_back(parts[i][v]);
      out[i].projection.components.push_back(inv.block(0, col, m.dim(v), r));
      col += r;
    }
  }
  for (std::size_t i = 0; i < parts.size(); ++i) out[i].module = subrepresentation(m, parts[i]);
  return out;
}

ModuleHom hom_power(ModuleHom f, std::size_t n) {
  // f^(2^t) with 2^t >= n
  for (std::size_t e = 1; e < n; e *= 2) f = compose(f, f);
  return f;
}

VertexBasis kernel_of(const ModuleHom& f) {
  VertexBasis out;
  for (const auto& c : f.components) out.push_back(kernel_basis(c));
  return out;
}

VertexBasis image_of(const ModuleHom& f, const Representation& m) {
  VertexBasis out;
  for (std::size_t v = 0; v < f.components.size(); ++v)
    out.push_back(m.dim(v) ? row_space(f.components[v]) : Mat(0, 0, m.field()));
  return out;
}

std::size_t total_rows(const VertexBasis& b) {
  std::size_t s = 0;
  for (const auto& x : b) s += x.rows();
  return s;
}

// Eigenvalues of f in F_p: roots of gcd(minpoly, x^p - x).
std::vector<std::uint32_t> rational_eigenvalues(const ModuleHom& f, const Representation& m) {
  const FieldSpec k = m.field();
  Mat span(0, flatten(f).size(), k);
  ModuleHom pw = identity_hom(m);
  std::optional<std::vector<std::uint32_t>> coeffs;
  while (true) {
    auto flat = flatten(pw);
    if (span.rows()) {
      RowSpaceSolver solver(span);
      coeffs = solver.coordinates(flat);
      if (coeffs) break;
    }
    span.append_row(flat);
    pw = compose(pw, f);
  }
  poly::Poly mp(coeffs->size() + 1, 0);
  for (std::size_t i = 0; i < coeffs->size(); ++i) mp[i] = k.neg((*coeffs)[i]);
  mp.back() = 1;
  poly::Poly xp = poly::powmod({0, 1}, k.p(), mp, k);
  poly::Poly g = poly::gcd(mp, poly::sub(xp, {0, 1}, k), k);
  return poly::split_roots(g, k);
}

// Generalized eigenspaces of a random endomorphism for each rational eigenvalue,
// plus the remainder; empty when every try leaves a single piece.
std::optional<std::vector<VertexBasis>> fitting_split(const Representation& m, const std::vector<ModuleHom>& end,
                                                      std::mt19937_64& rng) {
  const FieldSpec k = m.field();
  std::size_t n = 1;
  for (auto d : m.dims()) n = std::max(n, d);
  std::uniform_int_distribution<std::uint32_t> dist(0, k.p() - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    ModuleHom f = zero_hom(m, m);
    for (const auto& b : end) f = add(f, scale(b, dist(rng)));
    std::vector<VertexBasis> parts;
    ModuleHom rest = identity_hom(m);
    for (auto lambda : rational_eigenvalues(f, m)) {
      ModuleHom shifted = add(f, scale(identity_hom(m), k.neg(lambda)));
      ModuleHom nil = hom_power(shifted, n);
      VertexBasis ker = kernel_of(nil);
      if (total_rows(ker)) parts.push_back(std::move(ker));
      rest = compose(rest, nil);
    }
    VertexBasis im = image_of(rest, m);
    if (total_rows(im)) parts.push_back(std::move(im));
    if (parts.size() > 1) return parts;
  }
  return std::nullopt;
}

// Socle vectors outside the radical span a semisimple direct summand C; its
// complement is rad M plus a complement of C in the top.
std::optional<std::vector<VertexBasis>> semisimple_split(const Representation& m, const VertexBasis& rad) {
  const FieldSpec k = m.field();
  const Quiver& q = m.algebra().quiver();
  VertexBasis semi, rest;
  std::size_t semi_total = 0;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    Mat out_maps(m.dim(v), 0, k);
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      if (q.arrows()[a].source == v) out_maps = out_maps.hstack(m.mat(a));
    Mat soc = out_maps.cols() ? kernel_basis(out_maps) : Mat::identity(m.dim(v), k);
    Mat acc = rad[v];
    Mat c(0, m.dim(v), k);
    for (std::size_t i = 0; i < soc.rows(); ++i) {
      Mat trial = acc;
      trial.append_row(soc.row(i));
      if (rank(trial) > acc.rows()) {
        acc = std::move(trial);
        c.append_row(soc.row(i));
      }
    }
    Mat r = rad[v];
    for (auto idx : complement_units(acc, m.dim(v))) {
      std::vector<std::uint32_t> e(m.dim(v), 0);
      e[idx] = 1;
      r.append_row(e);
    }
    semi_total += c.rows();
    semi.push_back(std::move(c));
    rest.push_back(std::move(r));
  }
  if (semi_total == 0 || semi_total == m.total_dim()) return std::nullopt;
  return std::vector<VertexBasis>{std::move(semi), std::move(rest)};
}

void split_exact(const Summand& piece, const EndomorphismRing& ring, std::uint64_t seed, std::vector<Summand>& out) {
  std::vector<Vec> idems;
  if (ring.algebra.dim() == 1) {
    idems.push_back(ring.algebra.unit());
  } else {
    idems = primitive_idempotents(ring.algebra, seed);
  }
  for (const auto& e : idems) out.push_back(restrict(piece, image_summand(piece.module, ring.to_hom(e))));
}

void split_piece(const Summand& piece, std::mt19937_64& rng, std::uint64_t seed, std::vector<Summand>& out) {
  const Representation& x = piece.module;
  VertexBasis rad = radical_basis(x);
  const std::size_t top_dim = x.total_dim() - total_rows(rad);
  if (top_dim == 1) {
    out.push_back(piece);
    return;
  }
  if (top_dim == x.total_dim()) {
    // semisimple: one simple summand per basis vector
    const FieldSpec k = x.field();
    for (std::size_t v = 0; v < x.dims().size(); ++v)
      for (std::size_t i = 0; i < x.dim(v); ++i) {
        std::vector<VertexBasis> parts(1);
        VertexBasis& b = parts[0];
        for (std::size_t w = 0; w < x.dims().size(); ++w) b.emplace_back(0, x.dim(w), k);
        Mat unit(1, x.dim(v), k);
        unit(0, i) = 1;
        b[v] = unit;
        Summand s;
        s.module = subrepresentation(x, b);
        for (std::size_t w = 0; w < x.dims().size(); ++w) {
          s.inclusion.components.push_back(b[w]);
          Mat proj(x.dim(w), b[w].rows(), k);
          if (w == v) proj(i, 0) = 1;
          s.projection.components.push_back(std::move(proj));
        }
        out.push_back(restrict(piece, s));
      }
    return;
  }
  if (auto parts = semisimple_split(x, rad)) {
    for (auto& s : split_along(x, *parts)) split_piece(restrict(piece, s), rng, seed, out);
    return;
  }
  std::vector<ModuleHom> end = hom_basis(x, x);
  if (end.size() > kExactSplitDim) {
    if (auto parts = fitting_split(x, end, rng)) {
      for (auto& s : split_along(x, *parts)) split_piece(restrict(piece, s), rng, seed, out);
      return;
    }
  }
  split_exact(piece, endomorphism_ring(x), seed, out);
}

}  // namespace

DecompositionReport decompose(const Representation& m, std::uint64_t seed) {
  DecompositionReport report;
  if (m.is_zero()) return report;
  std::mt19937_64 rng(seed ^ 0x5bd1e995u);
  split_piece({m, identity_hom(m), identity_hom(m)}, rng, seed, report.summands);
  for (std::size_t i = 0; i < report.summands.size(); ++i) {
    std::size_t cls = report.classes.size();
    for (std::size_t c = 0; c < report.classes.size(); ++c) {
      if (indecomposables_isomorphic(report.summands[report.classes[c].first].module, report.summands[i].module)) {
        cls = c;
        break;
      }
    }
    if (cls == report.classes.size()) report.classes.emplace_back(i, 0);
    ++report.classes[cls].second;
    report.class_of.push_back(cls);
  }
  return report;
}

bool is_indecomposable(const Representation& m) {
  if (m.is_zero()) return false;
  return decompose(m).summand_count() == 1;
}

bool indecomposables_isomorphic(const Representation& x, const Representation& y) {
  if (x.dims() != y.dims()) return false;
  if (x.is_zero()) return true;
  auto f = hom_basis(x, y);
  if (f.empty()) return false;
  auto g = hom_basis(y, x);
  for (const auto& a : f)
    for (const auto& b : g)
      if (is_isomorphism(compose(a, b))) return true;
  return false;
}

bool is_isomorphic(const Representation& m, const Representation& n) {
  if (m.dims() != n.dims()) return false;
  if (m.is_zero()) return true;
  auto dm = decompose(m);
  auto dn = decompose(n);
  if (dm.classes.size() != dn.classes.size()) return false;
  std::vector<bool> used(dn.classes.size(), false);
  for (const auto& [rep, mult] : dm.classes) {
    bool found = false;
    for (std::size_t c = 0; c < dn.classes.size(); ++c) {
      if (used[c] || dn.classes[c].second != mult) continue;
      if (indecomposables_isomorphic(dm.summands[rep].module, dn.summands[dn.classes[c].first].module)) {
        used[c] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace gorelab
