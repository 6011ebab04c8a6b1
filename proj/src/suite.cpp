#include "gorelab/suite.hpp"

#include <algorithm>
#include <functional>

namespace gorelab {

AlgebraPtr loop_algebra(std::size_t n, FieldSpec k) {
  Quiver q;
  q.add_vertex("1");
  q.add_arrow("x", "1", "1");
  std::vector<std::uint32_t> word(n, 0);
  return build_algebra(q, {make_element(Path::of_arrows(q, word))}, k);
}

AlgebraPtr two_loop_algebra(FieldSpec k) {
  Quiver q;
  q.add_vertex("1");
  q.add_arrow("x", "1", "1");
  q.add_arrow("y", "1", "1");
  return build_algebra(q, {parse_relation("x*x", q, k), parse_relation("y*y", q, k), parse_relation("x*y", q, k)}, k);
}

AlgebraPtr line_algebra(FieldSpec k) {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_vertex("3");
  q.add_arrow("a", "1", "2");
  q.add_arrow("b", "2", "3");
  return build_algebra(q, {parse_relation("a*b", q, k)}, k);
}

AlgebraPtr example_algebra() {
  FieldSpec k(3);
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("alpha", "1", "1");
  q.add_arrow("beta1", "1", "2");
  q.add_arrow("beta2", "2", "1");
  return build_algebra(q, {parse_relation("alpha*alpha - beta1*beta2", q, k), parse_relation("beta2*beta1", q, k)},
                       k);
}

Representation example_module(const AlgebraPtr& a) {
  FieldSpec k = a->field();
  Mat ma = Mat::from_rows({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}, 4, k);
  Mat mb1 = Mat::from_rows({{0, 0}, {0, -1}, {1, 0}, {0, 0}}, 2, k);
  Mat mb2 = Mat::from_rows({{1, 0, 0, 0}, {0, 0, 0, 0}}, 4, k);
  return Representation(a, {4, 2}, {ma, mb1, mb2});
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

AlgebraPtr example_C() {
  FieldSpec k(3);
  Quiver q = three_loops();
  return build_algebra(q, example_L(q, k), k);
}

AlgebraPtr random_monomial_algebra(std::uint64_t seed, std::size_t max_vertices, std::size_t max_nilpotency) {
  std::mt19937_64 rng(seed);
  static constexpr std::uint32_t primes[] = {2, 3, 5};
  const FieldSpec k(primes[rng() % 3]);
  const std::size_t n = 1 + rng() % max_vertices;
  const std::size_t arrows = 1 + rng() % (n + 2);
  Quiver q;
  for (std::size_t v = 0; v < n; ++v) q.add_vertex(std::to_string(v + 1));
  for (std::size_t i = 0; i < arrows; ++i) q.add_arrow("a" + std::to_string(i), rng() % n, rng() % n);

  std::vector<std::vector<std::uint32_t>> rels;
  for (std::uint32_t x = 0; x < arrows; ++x)
    for (std::uint32_t y = 0; y < arrows; ++y)
      if (q.arrows()[x].target == q.arrows()[y].source && rng() % 3 == 0) rels.push_back({x, y});
  auto contains_relation = [&](const std::vector<std::uint32_t>& w) {
    for (const auto& r : rels)
      if (w.size() >= r.size() && std::equal(r.begin(), r.end(), w.end() - r.size())) return true;
    return false;
  };
  // every surviving path of length N becomes a relation, so rad^N = 0
  const std::size_t cap = 2 + rng() % (max_nilpotency - 1);
  std::vector<std::vector<std::uint32_t>> forced;
  std::function<void(std::vector<std::uint32_t>&)> extend = [&](std::vector<std::uint32_t>& w) {
    if (w.size() == cap) {
      forced.push_back(w);
      return;
    }
    for (std::uint32_t x = 0; x < arrows; ++x) {
      if (q.arrows()[w.back()].target != q.arrows()[x].source) continue;
      w.push_back(x);
      if (!contains_relation(w)) extend(w);
      w.pop_back();
    }
  };
  for (std::uint32_t x = 0; x < arrows; ++x) {
    std::vector<std::uint32_t> w{x};
    extend(w);
  }
  rels.insert(rels.end(), forced.begin(), forced.end());
  std::vector<AlgElement> elems;
  for (const auto& r : rels) elems.push_back(make_element(Path::of_arrows(q, r)));
  return build_algebra(q, std::move(elems), k);
}

Representation random_quotient(const AlgebraPtr& a, std::mt19937_64& rng) {
  const std::size_t nv = a->quiver().vertex_count();
  auto p = indecomposable_projective(a, rng() % nv);
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> gens;
  const int count = static_cast<int>(rng() % 3);
  for (int g = 0; g < count; ++g) {
    std::size_t v = rng() % nv;
    if (!p.dim(v)) continue;
    std::vector<std::uint32_t> x(p.dim(v));
    for (auto& c : x) c = rng() % a->field().p();
    gens.emplace_back(v, x);
  }
  return quotient_representation(p, submodule_generated(p, gens)).module;
}

std::vector<NamedAlgebra> campaign_algebras(std::uint64_t seed, std::size_t random_count) {
  std::vector<NamedAlgebra> out{{"example_A", example_algebra()},   {"loop_x2", loop_algebra(2)},
                                {"loop_x3", loop_algebra(3)},   {"loop_x4", loop_algebra(4)},
                                {"two_loop", two_loop_algebra()}, {"line", line_algebra()}};
  for (std::size_t i = 0; i < random_count; ++i) {
    const std::uint64_t s = seed * 1000003 + i;
    out.push_back({"random_monomial_" + std::to_string(s), random_monomial_algebra(s)});
  }
  return out;
}

}  // namespace gorelab
