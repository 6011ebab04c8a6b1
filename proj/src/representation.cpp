#include "gorelab/representation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gorelab {

void Representation::check_shapes() const {
  const Quiver& q = algebra_->quiver();
  if (dims_.size() != q.vertex_count()) throw InvalidRepresentation("dimension vector has wrong length");
  if (mats_.size() != q.arrow_count()) throw InvalidRepresentation("one matrix per arrow required");
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrows()[a];
    if (mats_[a].rows() != dims_[arr.source] || mats_[a].cols() != dims_[arr.target]) {
      throw InvalidRepresentation("matrix for arrow " + arr.name + " has shape " + std::to_string(mats_[a].rows()) +
                                  "x" + std::to_string(mats_[a].cols()) + ", expected " +
                                  std::to_string(dims_[arr.source]) + "x" + std::to_string(dims_[arr.target]));
    }
    if (!(mats_[a].field() == algebra_->field())) throw InvalidRepresentation("matrix over the wrong field");
  }
}

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Mat> mats)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), mats_(std::move(mats)) {
  check_shapes();
  const Quiver& q = algebra_->quiver();
  const FieldSpec k = algebra_->field();
  for (const auto& rel : algebra_->relations()) {
    if (rel.is_zero()) continue;
    const Path& lead = rel.leading_path();
    Mat acc(dims_[lead.source], dims_[lead.target], k);
    for (const auto& [p, c] : rel.terms) acc = acc + path_matrix(p).scaled(c);
    if (!acc.is_zero()) {
      throw InvalidRepresentation("relation " + to_string(rel, q, k) + " does not act as zero");
    }
  }
}

Representation Representation::unchecked(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Mat> mats) {
  Representation r;
  r.algebra_ = std::move(algebra);
  r.dims_ = std::move(dims);
  r.mats_ = std::move(mats);
  r.check_shapes();
  return r;
}

Representation Representation::zero(AlgebraPtr algebra) {
  const Quiver& q = algebra->quiver();
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) mats.emplace_back(0, 0, algebra->field());
  return Representation(std::move(algebra), std::vector<std::size_t>(q.vertex_count(), 0), std::move(mats));
}

std::size_t Representation::total_dim() const {
  std::size_t s = 0;
  for (auto d : dims_) s += d;
  return s;
}

Mat Representation::path_matrix(const Path& p) const {
  Mat acc = Mat::identity(dims_[p.source], field());
  for (auto a : p.arrows) acc = acc * mats_[a];
  return acc;
}

Mat Representation::basis_matrix(std::size_t basis_index) const {
  return path_matrix(algebra_->basis()[basis_index]);
}

std::string Representation::fingerprint() const {
  std::string s;
  auto put = [&s](std::uint64_t x) { s.append(reinterpret_cast<const char*>(&x), sizeof x); };
  put(dims_.size());
  for (auto d : dims_) put(d);
  for (const auto& m : mats_) {
    put(m.rows());
    put(m.cols());
    s.append(reinterpret_cast<const char*>(m.data().data()), m.data().size() * sizeof(std::uint32_t));
  }
  return s;
}

bool same_quiver(const Representation& a, const Representation& b) {
  return a.algebra_ptr() == b.algebra_ptr() ||
         (a.algebra().quiver() == b.algebra().quiver() && a.field() == b.field());
}

// ---------------------------------------------------------------------------
// Homomorphisms

bool ModuleHom::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const Mat& m) { return m.is_zero(); });
}

bool is_homomorphism(const Representation& m, const Representation& n, const ModuleHom& f) {
  const Quiver& q = m.algebra().quiver();
  if (f.components.size() != q.vertex_count()) return false;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (f.components[v].rows() != m.dim(v) || f.components[v].cols() != n.dim(v)) return false;
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrows()[a];
    if (!(f.components[arr.source] * n.mat(a) == m.mat(a) * f.components[arr.target])) return false;
  }
  return true;
}

ModuleHom identity_hom(const Representation& m) {
  ModuleHom f;
  for (auto d : m.dims()) f.components.push_back(Mat::identity(d, m.field()));
  return f;
}

ModuleHom zero_hom(const Representation& m, const Representation& n) {
  ModuleHom f;
  for (std::size_t v = 0; v < m.dims().size(); ++v) f.components.emplace_back(m.dim(v), n.dim(v), m.field());
  return f;
}

ModuleHom compose(const ModuleHom& f, const ModuleHom& g) {
  ModuleHom h;
  for (std::size_t v = 0; v < f.components.size(); ++v) h.components.push_back(f.components[v] * g.components[v]);
  return h;
}

ModuleHom add(const ModuleHom& f, const ModuleHom& g) {
  ModuleHom h;
  for (std::size_t v = 0; v < f.components.size(); ++v) h.components.push_back(f.components[v] + g.components[v]);
  return h;
}

ModuleHom scale(const ModuleHom& f, std::uint32_t c) {
  ModuleHom h;
  for (const auto& m : f.components) h.components.push_back(m.scaled(c));
  return h;
}

bool is_isomorphism(const ModuleHom& f) {
  for (const auto& m : f.components) {
    if (m.rows() != m.cols()) return false;
    if (m.rows() && rank(m) != m.rows()) return false;
  }
  return true;
}

std::vector<std::uint32_t> flatten(const ModuleHom& f) {
  std::vector<std::uint32_t> v;
  for (const auto& m : f.components) v.insert(v.end(), m.data().begin(), m.data().end());
  return v;
}

ModuleHom unflatten(std::span<const std::uint32_t> v, const Representation& m, const Representation& n) {
  ModuleHom f;
  std::size_t off = 0;
  for (std::size_t x = 0; x < m.dims().size(); ++x) {
    Mat c(m.dim(x), n.dim(x), m.field());
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = v[off++];
    f.components.push_back(std::move(c));
  }
  return f;
}

namespace {

Mat hom_constraints(const Representation& m, const Representation& n, std::vector<std::size_t>& offsets) {
  const Quiver& q = m.algebra().quiver();
  const FieldSpec k = m.field();
  offsets.assign(q.vertex_count() + 1, 0);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) offsets[v + 1] = offsets[v] + m.dim(v) * n.dim(v);
  std::size_t eqs = 0;
  for (const auto& arr : q.arrows()) eqs += m.dim(arr.source) * n.dim(arr.target);
  Mat c(offsets.back(), eqs, k);
  std::size_t col0 = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrows()[a];
    const std::size_t v = arr.source, w = arr.target;
    const Mat& na = n.mat(a);
    const Mat& ma = m.mat(a);
    const std::size_t rows = m.dim(v), cols = n.dim(w);
    // (f_v N_a)[r][c] = sum_k f_v[r][k] N_a[k][c]
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t kk = 0; kk < n.dim(v); ++kk)
        for (std::size_t cc = 0; cc < cols; ++cc) {
          const std::uint32_t x = na(kk, cc);
          if (!x) continue;
          auto& slot = c(offsets[v] + r * n.dim(v) + kk, col0 + r * cols + cc);
          slot = k.add(slot, x);
        }
    // -(M_a f_w)[r][c] = -sum_k M_a[r][k] f_w[k][c]
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t kk = 0; kk < m.dim(w); ++kk) {
        const std::uint32_t x = ma(r, kk);
        if (!x) continue;
        for (std::size_t cc = 0; cc < cols; ++cc) {
          auto& slot = c(offsets[w] + kk * n.dim(w) + cc, col0 + r * cols + cc);
          slot = k.sub(slot, x);
        }
      }
    col0 += rows * cols;
  }
  return c;
}

}  // namespace

namespace {

constexpr std::size_t kDirectHomUnknowns = 400;

std::size_t direct_unknowns(const Representation& m, const Representation& n) {
  std::size_t u = 0;
  for (std::size_t v = 0; v < m.dims().size(); ++v) u += m.dim(v) * n.dim(v);
  return u;
}

}  // namespace

std::vector<ModuleHom> hom_basis(const Representation& m, const Representation& n) {
  if (!same_quiver(m, n)) throw std::invalid_argument("hom_basis: modules over different algebras");
  if (direct_unknowns(m, n) > kDirectHomUnknowns) return hom_basis_presented(m, n);
  std::vector<std::size_t> offsets;
  Mat c = hom_constraints(m, n, offsets);
  Mat ker = kernel_basis(c);
  std::vector<ModuleHom> out;
  out.reserve(ker.rows());
  for (std::size_t i = 0; i < ker.rows(); ++i) out.push_back(unflatten(ker.row(i), m, n));
  return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
  if (direct_unknowns(m, n) > kDirectHomUnknowns) return hom_basis_presented(m, n).size();
  std::vector<std::size_t> offsets;
  Mat c = hom_constraints(m, n, offsets);
  return c.rows() - rank(c);
}

// ---------------------------------------------------------------------------
// Sub and quotient modules

Representation subrepresentation(const Representation& m, const VertexBasis& basis) {
  const Quiver& q = m.algebra().quiver();
  const FieldSpec k = m.field();
  std::vector<std::size_t> dims;
  std::vector<RowSpaceSolver> solvers;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    dims.push_back(basis[v].rows());
    solvers.emplace_back(basis[v].rows() ? basis[v] : Mat(0, m.dim(v), k));
    if (solvers.back().dim() != basis[v].rows()) throw std::invalid_argument("subrepresentation basis is dependent");
  }
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrows()[a];
    Mat out(dims[arr.source], dims[arr.target], k);
    if (dims[arr.source] && dims[arr.target]) {
      Mat img = basis[arr.source] * m.mat(a);
      for (std::size_t r = 0; r < img.rows(); ++r) {
        auto c = solvers[arr.target].coordinates(img.row(r));
        if (!c) throw std::invalid_argument("subspace is not closed under arrow " + arr.name);
        std::copy(c->begin(), c->end(), out.row(r).begin());
      }
    } else if (dims[arr.source]) {
      // target space is zero: image must vanish
      if (!(basis[arr.source] * m.mat(a)).is_zero())
        throw std::invalid_argument("subspace is not closed under arrow " + arr.name);
    }
    mats.push_back(std::move(out));
  }
  return Representation::unchecked(m.algebra_ptr(), std::move(dims), std::move(mats));
}

Quotient quotient_representation(const Representation& m, const VertexBasis& sub) {
  const Quiver& q = m.algebra().quiver();
  const FieldSpec k = m.field();
  std::vector<RowSpaceSolver> solvers;
  std::vector<std::vector<std::size_t>> comp;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Mat s = sub[v].rows() ? sub[v] : Mat(0, m.dim(v), k);
    solvers.emplace_back(s);
    // Non-pivot columns of the reduced subspace index the quotient basis.
    std::vector<bool> is_pivot(m.dim(v), false);
    for (auto c : solvers.back().pivots()) is_pivot[c] = true;
    std::vector<std::size_t> cv;
    for (std::size_t j = 0; j < m.dim(v); ++j)
      if (!is_pivot[j]) cv.push_back(j);
    dims.push_back(cv.size());
    comp.push_back(std::move(cv));
  }
  auto project = [&](std::size_t v, std::span<const std::uint32_t> x) {
    auto r = solvers[v].reduce(x);
    std::vector<std::uint32_t> out(comp[v].size());
    for (std::size_t i = 0; i < comp[v].size(); ++i) out[i] = r[comp[v][i]];
    return out;
  };
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrows()[a];
    Mat out(dims[arr.source], dims[arr.target], k);
    for (std::size_t i = 0; i < comp[arr.source].size(); ++i) {
      auto img = m.mat(a).row(comp[arr.source][i]);
      auto c = project(arr.target, img);
      std::copy(c.begin(), c.end(), out.row(i).begin());
    }
    mats.push_back(std::move(out));
  }
  ModuleHom proj;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Mat p(m.dim(v), dims[v], k);
    for (std::size_t i = 0; i < m.dim(v); ++i) {
      std::vector<std::uint32_t> e(m.dim(v), 0);
      e[i] = 1;
      auto c = project(v, e);
      std::copy(c.begin(), c.end(), p.row(i).begin());
    }
    proj.components.push_back(std::move(p));
  }
  return {Representation::unchecked(m.algebra_ptr(), std::move(dims), std::move(mats)), std::move(proj)};
}

VertexBasis submodule_generated(const Representation& m,
                                const std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>>& gens) {
  const Quiver& q = m.algebra().quiver();
  const FieldSpec k = m.field();
  VertexBasis span;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) span.emplace_back(0, m.dim(v), k);
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> todo;
  auto try_add = [&](std::size_t v, std::vector<std::uint32_t> x) {
    if (std::all_of(x.begin(), x.end(), [](std::uint32_t c) { return c == 0; })) return;
    if (span[v].rows()) {
      RowSpaceSolver s(span[v]);
      if (s.contains(x)) return;
    }
    span[v].append_row(x);
    todo.emplace_back(v, std::move(x));
  };
  for (const auto& [v, x] : gens) try_add(v, x);
  while (!todo.empty()) {
    auto [v, x] = std::move(todo.back());
    todo.pop_back();
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      if (q.arrows()[a].source != v) continue;
      Mat img = Mat::row_vector(x, k) * m.mat(a);
      try_add(q.arrows()[a].target, std::vector<std::uint32_t>(img.row(0).begin(), img.row(0).end()));
    }
  }
  for (auto& s : span)
    if (s.rows()) s = row_space(s);
  return span;
}

VertexBasis radical_basis(const Representation& m) {
  const Quiver& q = m.algebra().quiver();
  const FieldSpec k = m.field();
  VertexBasis out;
  for (std::size_t w = 0; w < q.vertex_count(); ++w) {
    Mat acc(0, m.dim(w), k);
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      if (q.arrows()[a].target == w) acc = acc.vstack(m.mat(a));
    out.push_back(acc.rows() ? row_space(acc) : acc);
  }
  return out;
}

VertexBasis image_basis(const Representation& m, const Representation& n, const ModuleHom& f) {
  (void)m;
  VertexBasis out;
  for (std::size_t v = 0; v < f.components.size(); ++v) {
    const Mat& c = f.components[v];
    out.push_back(c.rows() ? row_space(c) : Mat(0, n.dim(v), n.field()));
  }
  return out;
}

VertexBasis kernel_basis(const Representation& m, const ModuleHom& f) {
  VertexBasis out;
  for (std::size_t v = 0; v < f.components.size(); ++v) {
    const Mat& c = f.components[v];
    if (c.rows() == 0) {
      out.emplace_back(0, 0, m.field());
      continue;
    }
    Mat ker = kernel_basis(c);
    out.push_back(ker.rows() ? row_space(ker) : ker);
  }
  return out;
}

Representation direct_sum(std::span<const Representation> parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
  const AlgebraPtr& alg = parts.front().algebra_ptr();
  const Quiver& q = alg->quiver();
  const FieldSpec k = alg->field();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dim(v);
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrows()[a];
    Mat out(dims[arr.source], dims[arr.target], k);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& p : parts) {
      out.set_block(r0, c0, p.mat(a));
      r0 += p.dim(arr.source);
      c0 += p.dim(arr.target);
    }
    mats.push_back(std::move(out));
  }
  return Representation::unchecked(alg, std::move(dims), std::move(mats));
}

// ---------------------------------------------------------------------------
// Projectives and covers

std::vector<std::size_t> free_module_offsets(const Algebra& a, std::span<const std::size_t> generators,
                                             std::size_t w) {
  std::vector<std::size_t> off;
  std::size_t acc = 0;
  for (auto v : generators) {
    off.push_back(acc);
    acc += a.basis_between(v, w).size();
  }
  off.push_back(acc);
  return off;
}

Representation free_module(const AlgebraPtr& a, std::span<const std::size_t> generators) {
  const Quiver& q = a->quiver();
  const FieldSpec k = a->field();
  const std::size_t n = q.vertex_count();
  // position of each basis element inside its basis_between list
  std::vector<std::size_t> pos(a->dim(), 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      const auto& lst = a->basis_between(v, w);
      for (std::size_t i = 0; i < lst.size(); ++i) pos[lst[i]] = i;
    }
  std::vector<std::vector<std::size_t>> offsets;
  std::vector<std::size_t> dims;
  for (std::size_t w = 0; w < n; ++w) {
    offsets.push_back(free_module_offsets(*a, generators, w));
    dims.push_back(offsets.back().back());
  }
  std::vector<Mat> mats;
  for (std::size_t ar = 0; ar < q.arrow_count(); ++ar) {
    const Arrow& arrow = q.arrows()[ar];
    const std::size_t ai = a->arrow_index_in_basis(ar);
    Mat out(dims[arrow.source], dims[arrow.target], k);
    for (std::size_t j = 0; j < generators.size(); ++j) {
      const auto& src = a->basis_between(generators[j], arrow.source);
      for (std::size_t i = 0; i < src.size(); ++i) {
        for (const auto& [idx, c] : a->product(src[i], ai)) {
          out(offsets[arrow.source][j] + i, offsets[arrow.target][j] + pos[idx]) = c;
        }
      }
    }
    mats.push_back(std::move(out));
  }
  return Representation::unchecked(a, std::move(dims), std::move(mats));
}

Representation indecomposable_projective(const AlgebraPtr& a, std::size_t v) {
  std::size_t g[] = {v};
  return free_module(a, g);
}

Representation simple_module(const AlgebraPtr& a, std::size_t v) {
  const Quiver& q = a->quiver();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims[v] = 1;
  std::vector<Mat> mats;
  for (const auto& arr : q.arrows()) mats.emplace_back(dims[arr.source], dims[arr.target], a->field());
  return Representation::unchecked(a, std::move(dims), std::move(mats));
}

Representation regular_module(const AlgebraPtr& a) {
  std::vector<std::size_t> gens;
  for (std::size_t v = 0; v < a->quiver().vertex_count(); ++v) gens.push_back(v);
  return free_module(a, gens);
}

Representation radical(const Representation& m) { return subrepresentation(m, radical_basis(m)); }

Representation top(const Representation& m) { return quotient_representation(m, radical_basis(m)).module; }

ModuleHom hom_from_free(const Representation& free, std::span<const std::size_t> generators,
                        const std::vector<std::vector<std::uint32_t>>& images, const Representation& target) {
  const Algebra& a = target.algebra();
  const std::size_t n = a.quiver().vertex_count();
  const FieldSpec k = target.field();
  std::map<std::size_t, Mat> basis_mats;
  auto bm = [&](std::size_t idx) -> const Mat& {
    auto it = basis_mats.find(idx);
    if (it == basis_mats.end()) it = basis_mats.emplace(idx, target.basis_matrix(idx)).first;
    return it->second;
  };
  ModuleHom f;
  for (std::size_t w = 0; w < n; ++w) {
    Mat comp(free.dim(w), target.dim(w), k);
    std::size_t row = 0;
    for (std::size_t j = 0; j < generators.size(); ++j) {
      const auto& lst = a.basis_between(generators[j], w);
      if (lst.empty()) continue;
      Mat img = Mat::row_vector(images[j], k);
      for (auto idx : lst) {
        Mat r = img * bm(idx);
        std::copy(r.row(0).begin(), r.row(0).end(), comp.row(row).begin());
        ++row;
      }
    }
    f.components.push_back(std::move(comp));
  }
  return f;
}

ProjectiveCover projective_cover(const Representation& m) {
  const Quiver& q = m.algebra().quiver();
  ProjectiveCover pc;
  VertexBasis rad = radical_basis(m);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    for (auto idx : complement_units(rad[v], m.dim(v))) {
      std::vector<std::uint32_t> e(m.dim(v), 0);
      e[idx] = 1;
      pc.generators.push_back(v);
      pc.images.push_back(std::move(e));
    }
  }
  pc.cover = free_module(m.algebra_ptr(), pc.generators);
  pc.map = hom_from_free(pc.cover, pc.generators, pc.images, m);
  return pc;
}

bool is_projective(const Representation& m) {
  if (m.is_zero()) return true;
  VertexBasis rad = radical_basis(m);
  std::size_t cover_dim = 0;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    const std::size_t t = m.dim(v) - rad[v].rows();
    std::size_t pdim = 0;
    for (std::size_t w = 0; w < m.dims().size(); ++w) pdim += m.algebra().basis_between(v, w).size();
    cover_dim += t * pdim;
  }
  return cover_dim == m.total_dim();
}

std::vector<ModuleHom> hom_basis_presented(const Representation& m, const Representation& n) {
  if (!same_quiver(m, n)) throw std::invalid_argument("hom_basis: modules over different algebras");
  const Algebra& a = m.algebra();
  const FieldSpec k = m.field();
  const std::size_t nv = m.dims().size();
  if (m.is_zero() || n.is_zero()) return {};
  ProjectiveCover pc = projective_cover(m);
  const auto& gens = pc.generators;
  // unknowns: y_j in N_{v_j}
  std::vector<std::size_t> yoff{0};
  for (auto v : gens) yoff.push_back(yoff.back() + n.dim(v));
  const std::size_t unknowns = yoff.back();
  if (unknowns == 0) return {};

  std::map<std::size_t, Mat> path_mats;
  auto nmat = [&](std::size_t idx) -> const Mat& {
    auto it = path_mats.find(idx);
    if (it == path_mats.end()) it = path_mats.emplace(idx, n.basis_matrix(idx)).first;
    return it->second;
  };
  // Phi_u: rows of P0_u -> unknowns x N_u; row (j, q) of the result for y is y_j * N(q).
  // block(u, j, q) = N(q), so f(x) = sum_j y_j * (sum_q x_{j,q} N(q)).
  auto image_blocks = [&](std::size_t u, std::span<const std::uint32_t> x) {
    Mat out(unknowns, n.dim(u), k);
    auto off = free_module_offsets(a, gens, u);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const auto& lst = a.basis_between(gens[j], u);
      Mat acc(n.dim(gens[j]), n.dim(u), k);
      bool any = false;
      for (std::size_t t = 0; t < lst.size(); ++t) {
        const std::uint32_t c = x[off[j] + t];
        if (!c) continue;
        acc = acc + nmat(lst[t]).scaled(c);
        any = true;
      }
      if (any) out.set_block(yoff[j], 0, acc);
    }
    return out;
  };

  // relations: generators of the kernel of the cover map
  VertexBasis ker;
  for (std::size_t v = 0; v < nv; ++v) ker.push_back(kernel_basis(pc.map.components[v]));
  Representation kmod = subrepresentation(pc.cover, ker);
  VertexBasis krad = radical_basis(kmod);
  Mat constraints(unknowns, 0, k);
  for (std::size_t u = 0; u < nv; ++u) {
    if (!n.dim(u)) continue;
    for (auto idx : complement_units(krad[u], kmod.dim(u))) constraints = constraints.hstack(image_blocks(u, ker[u].row(idx)));
  }
  Mat ys = constraints.cols() ? kernel_basis(constraints) : Mat::identity(unknowns, k);

  // sections of the cover map
  std::vector<Mat> sections;
  for (std::size_t v = 0; v < nv; ++v) {
    if (!m.dim(v)) {
      sections.emplace_back(0, pc.cover.dim(v), k);
      continue;
    }
    sections.push_back(*solve(pc.map.components[v], Mat::identity(m.dim(v), k)));
  }
  std::vector<ModuleHom> out;
  for (std::size_t r = 0; r < ys.rows(); ++r) {
    ModuleHom f;
    for (std::size_t v = 0; v < nv; ++v) {
      Mat phi(pc.cover.dim(v), n.dim(v), k);
      if (m.dim(v) && n.dim(v)) {
        auto off = free_module_offsets(a, gens, v);
        for (std::size_t j = 0; j < gens.size(); ++j) {
          if (!n.dim(gens[j])) continue;
          Mat yj = Mat::row_vector(ys.row(r).subspan(yoff[j], n.dim(gens[j])), k);
          const auto& lst = a.basis_between(gens[j], v);
          for (std::size_t t = 0; t < lst.size(); ++t) phi.set_block(off[j] + t, 0, yj * nmat(lst[t]));
        }
      }
      f.components.push_back(sections[v] * phi);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::string dims_string(const Representation& m) {
  std::string s = "(";
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    if (v) s += ",";
    s += std::to_string(m.dim(v));
  }
  return s + ")";
}

}  // namespace gorelab
