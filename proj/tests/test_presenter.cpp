#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "gorelab/decompose.hpp"
#include "gorelab/presenter.hpp"

using namespace gorelab;
using namespace fixtures;

namespace {

AlgebraPtr example_target(bool wrong) {
  FieldSpec k(3);
  Quiver q = three_loops();
  auto rels = example_L(q, k);
  if (wrong) rels.back() = parse_relation("a3*a3 - a1*a2", q, k);
  return build_algebra(q, rels, k);
}

}  // namespace

TEST_CASE("presentations of path algebras") {
  auto c = as_abstract(*loop_algebra(2));
  CHECK(c.check_axioms());
  auto p = quiver_presentation(c);
  CHECK(p.quiver.vertex_count() == 1);
  CHECK(p.quiver.arrow_count() == 1);
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0].terms.size() == 1);
  CHECK(p.relations[0].leading_path().length() == 2);

  for (const auto& a : {line_algebra(), two_loop_algebra(), example_algebra(), example_C(), loop_algebra(4),
                        random_monomial_algebra(6), random_monomial_algebra(13)}) {
    auto pa = quiver_presentation(as_abstract(*a));
    CHECK(pa.rebuilt->dim() == a->dim());
    CHECK(pa.rebuilt->radical_layers() == a->radical_layers());
    CHECK(pa.quiver.vertex_count() == a->quiver().vertex_count());
    CHECK(pa.quiver.arrow_count() == a->quiver().arrow_count());
  }
}

TEST_CASE("non-basic algebras are rejected") {
  // End of S^2 is the 2x2 matrix ring
  auto a = loop_algebra(2);
  auto s = simple_module(a, 0);
  CHECK_THROWS_AS(quiver_presentation(endomorphism_algebra(direct_sum(std::vector<Representation>{s, s}))), NotBasic);
}

TEST_CASE("endomorphism ring of the example module") {
  auto pa = example_algebra();
  auto c = endomorphism_algebra(example_module(pa));
  CHECK(c.dim() == 5);
  CHECK(radical_layers(c) == std::vector<std::size_t>{1, 3, 1});
  CHECK(is_local(c));
  auto pres = quiver_presentation(c);
  CHECK(pres.quiver.vertex_count() == 1);
  CHECK(pres.quiver.arrow_count() == 3);
  // independent count: normal-form monomials of kW/L
  auto target = example_target(false);
  CHECK(target->dim() == 5);
  CHECK(target->radical_layers() == std::vector<std::size_t>{1, 3, 1});

  auto m = find_presentation_match(c, target);
  CHECK(m.exhaustive);
  REQUIRE(m.witness);
  CHECK(verify_witness(c, target, *m.witness));
  for (const auto& r : target->relations()) {
    auto v = evaluate(c, r, m.witness->vertex_images, m.witness->arrow_images);
    CHECK(std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; }));
  }

  auto wrong = example_target(true);
  REQUIRE(wrong->dim() == c.dim());
  auto mw = find_presentation_match(c, wrong);
  CHECK(mw.exhaustive);
  CHECK(mw.space == 531441);
  CHECK_FALSE(mw.witness);
}

TEST_CASE("search budget") {
  auto c = as_abstract(*loop_algebra(2));
  auto m = find_presentation_match(c, loop_algebra(2));
  REQUIRE(m.witness);
  CHECK(m.space == 3);
  // x maps to a nonzero multiple of x
  CHECK(m.witness->arrow_images[0] != Vec(2, 0));

  auto pa = example_algebra();
  auto e = endomorphism_algebra(example_module(pa));
  CHECK_THROWS_AS(find_presentation_match(e, example_target(true), 1000, 7), SearchBudgetExceeded);
  auto found = find_presentation_match(e, example_target(false), 100000, 7);
  CHECK_FALSE(found.exhaustive);
  CHECK(found.witness);
}
