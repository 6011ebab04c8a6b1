#include "gorelab/monomial.hpp"

#include <algorithm>
#include <optional>

namespace gorelab {

namespace {

Representation path_module(const AlgebraPtr& a, std::size_t index) {
  const Path& p = a->basis()[index];
  auto proj = indecomposable_projective(a, p.source);
  const auto& lst = a->basis_between(p.source, p.target);
  std::vector<std::uint32_t> x(lst.size(), 0);
  x[std::find(lst.begin(), lst.end(), index) - lst.begin()] = 1;
  return subrepresentation(proj, submodule_generated(proj, {{p.target, x}}));
}

std::string path_label(const Path& p, const Quiver& q) {
  return p.is_trivial() ? "e_" + q.vertices()[p.source] : to_string(p, q);
}

// Basis paths r starting at `from` with p r = 0, or all nontrivial ones when p is absent.
std::vector<std::size_t> annihilated(const AlgebraPtr& a, std::optional<std::size_t> p, std::size_t from) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < a->quiver().vertex_count(); ++w)
    for (std::size_t r : a->basis_between(from, w)) {
      if (p ? a->product(*p, r).empty() : !a->basis()[r].is_trivial()) out.push_back(r);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Over a monomial algebra a right ideal spanned by paths is the direct sum of
// qA over its minimal paths q. Returns those q after checking the path sets.
std::vector<std::size_t> minimal_generators(const AlgebraPtr& a, const std::vector<std::size_t>& ideal) {
  std::vector<std::size_t> gens;
  for (std::size_t r : ideal) {
    const Path& path = a->basis()[r];
    bool minimal = true;
    for (std::size_t k = 1; k < path.length() && minimal; ++k) {
      Path prefix{path.source, 0, {path.arrows.begin(), path.arrows.begin() + k}};
      prefix.target = a->quiver().arrows()[prefix.arrows.back()].target;
      auto idx = a->basis_index(prefix);
      if (idx && std::binary_search(ideal.begin(), ideal.end(), *idx)) minimal = false;
    }
    if (minimal) gens.push_back(r);
  }
  std::vector<std::size_t> covered;
  for (std::size_t q : gens) {
    const std::size_t t = a->basis()[q].target;
    for (std::size_t w = 0; w < a->quiver().vertex_count(); ++w)
      for (std::size_t u : a->basis_between(t, w)) {
        const auto& prod = a->product(q, u);
        if (prod.empty()) continue;
        if (prod.size() != 1 || prod[0].second != 1) throw NotMonomial();
        covered.push_back(prod[0].first);
      }
  }
  std::sort(covered.begin(), covered.end());
  if (covered != ideal) throw PropertyViolation("path ideal is not the direct sum of its minimal generators", 0);
  return gens;
}

}  // namespace

std::vector<PathModule> second_syzygy_candidates(const AlgebraPtr& a) {
  if (!a->is_monomial()) throw NotMonomial();
  SyzygyWorld seen(a);
  std::vector<PathModule> out;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Representation m = path_module(a, i);
    const std::size_t before = seen.size();
    seen.intern(m);
    if (seen.size() > before) out.push_back({a->basis()[i], std::move(m)});
  }
  return out;
}

std::vector<std::size_t> SyzygyGraph::reachable(std::size_t i) const {
  std::vector<bool> mark(nodes.size(), false);
  std::vector<std::size_t> stack{i}, out;
  mark[i] = true;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (const auto& [y, k] : nodes[x].omega)
      if (!mark[y]) {
        mark[y] = true;
        stack.push_back(y);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SyzygyGraph build_syzygy_graph(const AlgebraPtr& a, std::size_t node_cap) {
  auto candidates = second_syzygy_candidates(a);
  SyzygyGraph g;
  g.algebra = a;
  g.world = std::make_shared<SyzygyWorld>(a);
  // generating path of each node, or none for a simple that is no path module
  std::vector<std::optional<std::size_t>> path_of;
  std::vector<std::size_t> simple_at;
  auto add = [&](const Representation& m, const std::string& origin, std::optional<std::size_t> path,
                 std::size_t vertex) {
    ClassId c = g.world->intern(m);
    if (c < g.nodes.size()) return c;
    if (g.nodes.size() >= node_cap) throw NodeCapExceeded(node_cap);
    GraphNode n;
    n.origin = origin;
    n.projective = g.world->is_projective(c);
    g.nodes.push_back(std::move(n));
    path_of.push_back(path);
    simple_at.push_back(vertex);
    return c;
  };
  const Quiver& q = a->quiver();
  for (const auto& c : candidates)
    add(c.module, path_label(c.path, q), *a->basis_index(c.path), 0);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) add(simple_module(a, v), "S_" + q.vertices()[v], std::nullopt, v);
  g.seeded = g.nodes.size();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (g.nodes[i].projective) continue;
    const std::size_t from = path_of[i] ? a->basis()[*path_of[i]].target : simple_at[i];
    Multiset omega;
    for (std::size_t r : minimal_generators(a, annihilated(a, path_of[i], from))) {
      ClassId c = add(path_module(a, r), "omega", r, 0);
      omega[c] += 1;
    }
    g.world->set_syzygy(i, omega);
    g.nodes[i].omega = std::move(omega);
  }
  // later verdicts on these modules go through the shared world
  auto shared = world_for(a);
  std::vector<ClassId> global;
  for (std::size_t i = 0; i < g.size(); ++i) global.push_back(shared->intern(g.module(i)));
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.nodes[i].projective || shared->has_syzygy(global[i])) continue;
    Multiset m;
    for (const auto& [j, k] : g.nodes[i].omega) m[global[j]] += k;
    shared->set_syzygy(global[i], std::move(m));
  }
  auto reg = regular_module(a);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) g.nodes[i].ext1_vanishes = g.world->ext1(i, reg) == 0;
  return g;
}

WeaklyGorensteinReport classify(const AlgebraPtr& a, std::size_t depth, std::size_t orbit_cap, std::size_t node_cap) {
  WeaklyGorensteinReport r;
  r.graph = build_syzygy_graph(a, node_cap);
  const auto& g = r.graph;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto reach = g.reachable(i);
    bool ok = std::all_of(reach.begin(), reach.end(), [&](std::size_t j) { return g.nodes[j].ext1_vanishes; });
    r.semi_gp.push_back(ok);
    if (ok) r.phi_part.push_back(i);
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    Verdict v = gorenstein_projective_test(g.module(i), depth, orbit_cap);
    const bool gp = v.status == Status::certified_yes;
    if (gp) r.gp_part.push_back(i);
    if (gp != r.semi_gp[i]) {
      throw ClassificationMismatch("node " + std::to_string(i) + " (" + g.nodes[i].origin + "): semi-GP " +
                                       (r.semi_gp[i] ? "yes" : "no") + ", GP test " + to_string(v.status),
                                   i);
    }
    r.gp_verdicts.push_back(std::move(v));
  }
  r.verdict = "left weakly Gorenstein";
  return r;
}

}  // namespace gorelab
