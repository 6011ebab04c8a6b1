#include <random>

#include "doctest.h"
#include "fixtures.hpp"

using namespace gorelab;
using namespace fixtures;

namespace {

// Independent Hom dimension: brute force over all tuples of matrices, tiny cases only.
std::size_t brute_hom_dim(const Representation& m, const Representation& n) {
  const FieldSpec k = m.field();
  std::size_t vars = 0;
  for (std::size_t v = 0; v < m.dims().size(); ++v) vars += m.dim(v) * n.dim(v);
  REQUIRE(vars <= 12);
  std::size_t total = 1;
  for (std::size_t i = 0; i < vars; ++i) total *= k.p();
  std::size_t count = 0;
  std::vector<std::uint32_t> x(vars, 0);
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t r = t;
    for (auto& c : x) {
      c = static_cast<std::uint32_t>(r % k.p());
      r /= k.p();
    }
    if (is_homomorphism(m, n, unflatten(x, m, n))) ++count;
  }
  std::size_t d = 0;
  while (count > 1) {
    count /= k.p();
    ++d;
  }
  return d;
}

std::vector<AlgebraPtr> suite() {
  return {loop_algebra(2), loop_algebra(3), two_loop_algebra(), line_algebra(), example_algebra(), example_C()};
}

}  // namespace

TEST_CASE("example module validates and has the expected top") {
  auto a = example_algebra();
  auto m = example_module(a);
  CHECK(m.dims() == std::vector<std::size_t>{4, 2});
  auto t = top(m);
  CHECK(t.dims() == std::vector<std::size_t>{2, 0});

  // Changing one entry breaks the relation alpha^2 = beta1 beta2.
  auto mats = m.mats();
  mats[0](3, 0) = 0;
  mats[0](2, 1) = 2;
  CHECK_THROWS_AS(Representation(a, {4, 2}, mats), InvalidRepresentation);
  mats = m.mats();
  mats[1] = Mat(4, 3, a->field());
  CHECK_THROWS_AS(Representation(a, {4, 2}, mats), InvalidRepresentation);
}

TEST_CASE("projectives of the example algebra") {
  auto a = example_algebra();
  CHECK(indecomposable_projective(a, 0).dims() == std::vector<std::size_t>{4, 2});
  CHECK(indecomposable_projective(a, 1).dims() == std::vector<std::size_t>{2, 2});
  CHECK(regular_module(a).total_dim() == a->dim());
}

TEST_CASE("Hom(e_v A, M) has dimension dim M_v") {
  std::mt19937_64 rng(1);
  for (const auto& a : suite()) {
    std::vector<Representation> mods{regular_module(a)};
    for (std::size_t v = 0; v < a->quiver().vertex_count(); ++v) {
      mods.push_back(simple_module(a, v));
      mods.push_back(indecomposable_projective(a, v));
      mods.push_back(radical(indecomposable_projective(a, v)));
    }
    for (const auto& m : mods) {
      for (std::size_t v = 0; v < a->quiver().vertex_count(); ++v) {
        auto p = indecomposable_projective(a, v);
        auto basis = hom_basis(p, m);
        CHECK(basis.size() == m.dim(v));
        for (const auto& f : basis) CHECK(is_homomorphism(p, m, f));
      }
    }
  }
}

TEST_CASE("hom dimensions agree with brute force") {
  auto a = loop_algebra(2);
  auto s = simple_module(a, 0);
  auto p = indecomposable_projective(a, 0);
  CHECK(hom_dim(s, s) == brute_hom_dim(s, s));
  CHECK(hom_dim(p, s) == brute_hom_dim(p, s));
  CHECK(hom_dim(s, p) == brute_hom_dim(s, p));
  CHECK(hom_dim(p, p) == brute_hom_dim(p, p));
  CHECK(hom_dim(p, p) == 2);

  auto b = line_algebra();
  for (std::size_t v = 0; v < 3; ++v)
    for (std::size_t w = 0; w < 3; ++w) {
      auto pv = indecomposable_projective(b, v), pw = indecomposable_projective(b, w);
      CHECK(hom_dim(pv, pw) == brute_hom_dim(pv, pw));
      CHECK(hom_dim(simple_module(b, v), simple_module(b, w)) == (v == w ? 1u : 0u));
    }
}

TEST_CASE("radical, top, projective covers") {
  for (const auto& a : suite()) {
    for (std::size_t v = 0; v < a->quiver().vertex_count(); ++v) {
      auto s = simple_module(a, v);
      CHECK(radical(s).is_zero());
      CHECK(top(s).dims() == s.dims());
      auto p = indecomposable_projective(a, v);
      CHECK(top(p).dims() == s.dims());
      CHECK(is_projective(p));
      CHECK(is_projective(s) == (p.total_dim() == 1));
      auto pc = projective_cover(p);
      CHECK(pc.cover.dims() == p.dims());
      CHECK(is_isomorphism(pc.map));
      CHECK(is_homomorphism(pc.cover, p, pc.map));
    }
    auto r = regular_module(a);
    auto pc = projective_cover(r);
    CHECK(is_isomorphism(pc.map));
  }
  auto a = example_algebra();
  auto m = example_module(a);
  auto pc = projective_cover(m);
  CHECK(is_homomorphism(pc.cover, m, pc.map));
  CHECK(pc.generators == std::vector<std::size_t>{0, 0});
  // surjective, kernel inside the radical of the cover
  for (std::size_t v = 0; v < 2; ++v) CHECK(rank(pc.map.components[v]) == m.dim(v));
  auto ker = kernel_basis(pc.cover, pc.map);
  auto rad = radical_basis(pc.cover);
  for (std::size_t v = 0; v < 2; ++v) {
    if (ker[v].rows() == 0) continue;
    RowSpaceSolver rs(rad[v]);
    for (std::size_t i = 0; i < ker[v].rows(); ++i) CHECK(rs.contains(ker[v].row(i)));
  }
}

TEST_CASE("sub, quotient and direct sum bookkeeping") {
  auto a = example_algebra();
  auto p = indecomposable_projective(a, 0);
  auto rb = radical_basis(p);
  auto rad = subrepresentation(p, rb);
  auto q = quotient_representation(p, rb);
  for (std::size_t v = 0; v < 2; ++v) CHECK(rad.dim(v) + q.module.dim(v) == p.dim(v));
  CHECK(is_homomorphism(p, q.module, q.projection));
  std::vector<Representation> parts{p, simple_module(a, 1)};
  auto sum = direct_sum(parts);
  CHECK(sum.dims() == std::vector<std::size_t>{4, 3});

  auto gen = submodule_generated(p, {{0, std::vector<std::uint32_t>{1, 0, 0, 0}}});
  CHECK(gen[0].rows() == 4);
  CHECK(gen[1].rows() == 2);
}

TEST_CASE("presented hom agrees with the entrywise system") {
  std::mt19937_64 rng(17);
  std::vector<AlgebraPtr> algebras{example_algebra(), two_loop_algebra(), line_algebra(), loop_algebra(4),
                                   random_monomial_algebra(6), random_monomial_algebra(13)};
  for (const auto& a : algebras) {
    std::vector<Representation> mods{regular_module(a)};
    for (int t = 0; t < 4; ++t) mods.push_back(random_quotient(a, rng));
    mods.push_back(radical(regular_module(a)));
    for (const auto& m : mods)
      for (const auto& n : mods) {
        auto hb = hom_basis_presented(m, n);
        CHECK(hb.size() == hom_dim(m, n));
        for (const auto& f : hb) CHECK(is_homomorphism(m, n, f));
        if (hb.empty()) continue;
        Mat flat(0, flatten(hb.front()).size(), a->field());
        for (const auto& f : hb) flat.append_row(flatten(f));
        CHECK(rank(flat) == hb.size());
      }
  }
}
