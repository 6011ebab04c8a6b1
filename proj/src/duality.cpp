#include "gorelab/duality.hpp"

namespace gorelab {

Representation dual_D(const Representation& m) {
  AlgebraPtr op = m.algebra().opposite();
  std::vector<Mat> mats;
  for (const auto& a : m.mats()) mats.push_back(a.transposed());
  return Representation::unchecked(op, m.dims(), std::move(mats));
}

Representation dual_regular(const AlgebraPtr& a) { return dual_D(regular_module(a->opposite())); }

Mat reversal_matrix(const Algebra& a) {
  AlgebraPtr op = a.opposite();
  Mat r(a.dim(), op->dim(), a.field());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto c = op->coordinates(reversed(make_element(a.basis()[i]), op->quiver()));
    std::copy(c.begin(), c.end(), r.row(i).begin());
  }
  return r;
}

Representation transpose_Tr(const Representation& m) {
  const AlgebraPtr& a = m.algebra_ptr();
  AlgebraPtr op = a->opposite();
  const FieldSpec k = m.field();
  ProjectiveCover p0 = projective_cover(m);
  if (m.is_zero() || is_isomorphism(p0.map)) return Representation::zero(op);

  VertexBasis ker = kernel_basis(p0.cover, p0.map);
  Representation omega = subrepresentation(p0.cover, ker);
  ProjectiveCover p1 = projective_cover(omega);
  Mat rev = reversal_matrix(*a);

  const auto& g0 = p0.generators;
  const auto& g1 = p1.generators;
  // image of generator j of P1 inside P0, split into components x_ij in e_{v_i} A e_{u_j}
  std::vector<std::vector<std::uint32_t>> images(g0.size());
  std::vector<std::size_t> target_offsets(g1.size() + 1, 0);
  for (std::size_t i = 0; i < g0.size(); ++i) {
    std::size_t total = 0;
    for (auto u : g1) total += op->basis_between(u, g0[i]).size();
    images[i].assign(total, 0);
  }
  for (std::size_t j = 0; j < g1.size(); ++j) {
    const std::size_t u = g1[j];
    Mat x = Mat::row_vector(p1.images[j], k) * ker[u];
    auto offsets = free_module_offsets(*a, g0, u);
    for (std::size_t i = 0; i < g0.size(); ++i) {
      const auto& paths = a->basis_between(g0[i], u);
      Mat coords(1, op->dim(), k);
      for (std::size_t t = 0; t < paths.size(); ++t) {
        const std::uint32_t c = x(0, offsets[i] + t);
        if (c) coords = coords + Mat::row_vector(rev.row(paths[t]), k).scaled(c);
      }
      // position of block j inside the free op-module at vertex g0[i]
      auto op_offsets = free_module_offsets(*op, g1, g0[i]);
      const auto& op_paths = op->basis_between(u, g0[i]);
      for (std::size_t t = 0; t < op_paths.size(); ++t) images[i][op_offsets[j] + t] = coords(0, op_paths[t]);
    }
  }
  Representation f = free_module(op, g0);
  Representation g = free_module(op, g1);
  ModuleHom dstar = hom_from_free(f, g0, images, g);
  return quotient_representation(g, image_basis(f, g, dstar)).module;
}

Representation tau(const Representation& m) { return dual_D(transpose_Tr(m)); }

}  // namespace gorelab
