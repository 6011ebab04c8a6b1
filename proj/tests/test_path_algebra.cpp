#include <random>

#include "doctest.h"
#include "gorelab/path_algebra.hpp"

using namespace gorelab;

namespace {

AlgebraPtr loop_algebra(std::size_t n, FieldSpec k) {
  Quiver q;
  q.add_vertex("1");
  q.add_arrow("x", "1", "1");
  std::vector<std::uint32_t> word(n, 0);
  return build_algebra(q, {make_element(Path::of_arrows(q, word))}, k);
}

Quiver example_quiver() {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("alpha", "1", "1");
  q.add_arrow("beta1", "1", "2");
  q.add_arrow("beta2", "2", "1");
  return q;
}

AlgebraPtr example_algebra() {
  FieldSpec k(3);
  Quiver q = example_quiver();
  return build_algebra(q, {parse_relation("alpha*alpha - beta1*beta2", q, k), parse_relation("beta2*beta1", q, k)}, k);
}

Quiver three_loops() {
  Quiver q;
  q.add_vertex("1");
  q.add_arrow("a1", "1", "1");
  q.add_arrow("a2", "1", "1");
  q.add_arrow("a3", "1", "1");
  return q;
}

std::vector<AlgElement> example_L(const Quiver& q, FieldSpec k) {
  std::vector<AlgElement> rels;
  for (const char* r : {"a1*a1", "a1*a3", "a2*a1", "a2*a2", "a2*a3", "a1*a2 - a3*a1", "a1*a2 - a3*a2", "a3*a3"})
    rels.push_back(parse_relation(r, q, k));
  return rels;
}

// All paths of exactly the given length.
std::vector<Path> paths_of_length(const Quiver& q, std::size_t len) {
  std::vector<Path> out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out.push_back(Path::trivial(v));
  for (std::size_t l = 0; l < len; ++l) {
    std::vector<Path> next;
    for (const auto& p : out)
      for (std::size_t a = 0; a < q.arrow_count(); ++a)
        if (auto e = concat(p, Path::of_arrow(q, a))) next.push_back(*e);
    out = std::move(next);
  }
  return out;
}

// Oracle for homogeneous relations: dim of degree d of kQ/I equals the number of
// length-d paths minus the rank of { u r w } in degree d. Independent of any
// Groebner basis.
std::vector<std::size_t> graded_dims_oracle(const Quiver& q, const std::vector<AlgElement>& rels, FieldSpec k,
                                            std::size_t max_len) {
  std::vector<std::size_t> dims;
  for (std::size_t d = 0; d <= max_len; ++d) {
    auto paths = paths_of_length(q, d);
    std::map<Path, std::size_t> col;
    for (std::size_t i = 0; i < paths.size(); ++i) col[paths[i]] = i;
    Mat span(0, paths.size(), k);
    for (const auto& r : rels) {
      const std::size_t rl = r.leading_path().length();
      if (rl > d) continue;
      for (std::size_t ul = 0; ul + rl <= d; ++ul) {
        for (const auto& u : paths_of_length(q, ul)) {
          for (const auto& w : paths_of_length(q, d - rl - ul)) {
            AlgElement x = multiply(u, r, w, k);
            if (x.is_zero()) continue;
            std::vector<std::uint32_t> row(paths.size(), 0);
            for (const auto& [p, c] : x.terms) row[col.at(p)] = c;
            span.append_row(row);
          }
        }
      }
    }
    dims.push_back(paths.size() - (span.rows() ? rank(span) : 0));
    if (dims.back() == 0) break;
  }
  return dims;
}

}  // namespace

TEST_CASE("truncated polynomial ring") {
  auto a = loop_algebra(2, FieldSpec(3));
  CHECK(a->dim() == 2);
  CHECK(a->nilpotency_index() == 2);
  CHECK(a->is_monomial());
  CHECK(a->radical_layers() == std::vector<std::size_t>{1, 1});
  auto op = a->opposite();
  CHECK(op->dim() == 2);
  CHECK(op->opposite() == a);
}

TEST_CASE("example algebra: Groebner basis, normal forms, dimension") {
  auto a = example_algebra();
  const auto& q = a->quiver();
  const FieldSpec k = a->field();
  auto oracle = graded_dims_oracle(q, a->relations(), k, 10);
  std::size_t total = 0;
  for (auto d : oracle) total += d;
  CHECK(a->dim() == total);
  CHECK(a->dim() == 10);
  CHECK(a->nilpotency_index() == 4);
  CHECK(a->radical_layers() == std::vector<std::size_t>{2, 3, 3, 2});
  CHECK_FALSE(a->is_monomial());

  auto nf = a->normal_form(parse_relation("beta1*beta2", q, k));
  CHECK(nf == parse_relation("alpha*alpha", q, k));
  CHECK(a->normal_form(parse_relation("beta2*beta1", q, k)).is_zero());
  CHECK(a->normal_form(make_element(Path::trivial(0))) == make_element(Path::trivial(0)));

  auto op = a->opposite();
  CHECK(op->dim() == a->dim());
  CHECK(op->radical_layers() == a->radical_layers());
  CHECK(op->opposite() == a);
}

TEST_CASE("three-loop algebra kW/L has radical layers 1,3,1") {
  FieldSpec k(3);
  Quiver q = three_loops();
  auto rels = example_L(q, k);
  auto c = build_algebra(q, rels, k);
  CHECK(c->dim() == 5);
  CHECK(c->radical_layers() == std::vector<std::size_t>{1, 3, 1});
  CHECK(graded_dims_oracle(q, rels, k, 6) == std::vector<std::size_t>{1, 3, 1, 0});
  CHECK_FALSE(c->is_monomial());
  // Every length-2 word is either 0 or the class of a1*a2.
  auto a1a2 = c->normal_form(parse_relation("a1*a2", q, k));
  REQUIRE(a1a2.terms.size() == 1);
  for (const char* w : {"a3*a1", "a3*a2"}) CHECK(c->normal_form(parse_relation(w, q, k)) == a1a2);
  for (const auto& p : paths_of_length(q, 3)) CHECK(c->normal_form(make_element(p)).is_zero());
}

TEST_CASE("algebra invariants on suite algebras") {
  FieldSpec k(3);
  Quiver w = three_loops();
  std::vector<AlgebraPtr> suite{loop_algebra(2, k), loop_algebra(4, k), example_algebra(),
                                build_algebra(w, example_L(w, k), k)};
  std::mt19937_64 rng(17);
  for (const auto& a : suite) {
    const std::size_t d = a->dim();
    // idempotents
    std::vector<std::uint32_t> one(d, 0);
    for (std::size_t v = 0; v < a->quiver().vertex_count(); ++v) one[a->vertex_index_in_basis(v)] = 1;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<std::uint32_t> e(d, 0);
      e[i] = 1;
      CHECK(a->multiply(one, e) == e);
      CHECK(a->multiply(e, one) == e);
    }
    for (std::size_t v = 0; v < a->quiver().vertex_count(); ++v)
      for (std::size_t u = 0; u < a->quiver().vertex_count(); ++u) {
        if (u == v) continue;
        CHECK(a->product(a->vertex_index_in_basis(v), a->vertex_index_in_basis(u)).empty());
      }
    // associativity on random triples
    for (int t = 0; t < 30; ++t) {
      std::vector<std::uint32_t> x(d), y(d), z(d);
      for (std::size_t i = 0; i < d; ++i) {
        x[i] = rng() % 3;
        y[i] = rng() % 3;
        z[i] = rng() % 3;
      }
      CHECK(a->multiply(a->multiply(x, y), z) == a->multiply(x, a->multiply(y, z)));
    }
    // nilpotency index: all paths of length N vanish, some of length N-1 does not
    const std::size_t n = a->nilpotency_index();
    bool all_zero = true;
    for (const auto& p : paths_of_length(a->quiver(), n))
      if (!a->normal_form(make_element(p)).is_zero()) all_zero = false;
    CHECK(all_zero);
    bool some_nonzero = false;
    for (const auto& p : paths_of_length(a->quiver(), n - 1))
      if (!a->normal_form(make_element(p)).is_zero()) some_nonzero = true;
    CHECK(some_nonzero);
    // normal_form is idempotent
    for (const auto& p : paths_of_length(a->quiver(), 2)) {
      auto once = a->normal_form(make_element(p));
      CHECK(a->normal_form(once) == once);
      if (a->is_monomial()) CHECK(once.terms.size() <= 1);
    }
  }
}

TEST_CASE("build errors") {
  FieldSpec k(3);
  Quiver q;
  q.add_vertex("1");
  q.add_arrow("x", "1", "1");
  CHECK_THROWS_AS(build_algebra(q, {}, k, 8), NotFiniteDimensionalWithinCap);
  CHECK_THROWS_AS(build_algebra(q, {parse_relation("x*x - x*x*x", q, k)}, k, 8), NotFiniteDimensionalWithinCap);
  CHECK_THROWS_AS(build_algebra(q, {parse_relation("x", q, k)}, k), NonAdmissibleRelation);

  Quiver two;
  two.add_vertex("1");
  two.add_vertex("2");
  two.add_arrow("a", "1", "2");
  two.add_arrow("b", "2", "1");
  two.add_arrow("c", "1", "1");
  CHECK_THROWS_AS(build_algebra(two, {parse_relation("a*b - c*c*c", two, k), parse_relation("a*b + b*a", two, k)}, k),
                  NonAdmissibleRelation);
  CHECK_THROWS_AS(parse_relation("a*a", two, k), RelationSyntaxError);
  CHECK_THROWS_AS(parse_relation("a*zz", two, k), RelationSyntaxError);
}

TEST_CASE("non-homogeneous admissible relations") {
  FieldSpec k(5);
  Quiver q;
  q.add_vertex("1");
  q.add_arrow("x", "1", "1");
  q.add_arrow("y", "1", "1");
  // x^2 = y^3, xy = yx = 0, y^4 = 0
  auto a = build_algebra(q,
                         {parse_relation("x*x - y*y*y", q, k), parse_relation("x*y", q, k),
                          parse_relation("y*x", q, k), parse_relation("y*y*y*y", q, k)},
                         k);
  // basis: e, x, y, y^2, y^3 (= x^2)
  CHECK(a->dim() == 5);
  CHECK(a->nilpotency_index() == 4);
}
