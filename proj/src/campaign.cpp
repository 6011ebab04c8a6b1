#include "gorelab/campaign.hpp"

#include <random>
#include <sstream>

#include "gorelab/decompose.hpp"
#include "gorelab/monomial.hpp"

namespace gorelab {

namespace {

std::string period_string(const std::optional<std::pair<std::size_t, std::size_t>>& p) {
  return p ? std::to_string(p->first) + "," + std::to_string(p->second) : "none";
}

// P(v) modulo up to three random elements of its radical
Representation radical_quotient(const AlgebraPtr& a, std::mt19937_64& rng) {
  const std::size_t nv = a->quiver().vertex_count();
  auto p = indecomposable_projective(a, rng() % nv);
  VertexBasis rad = radical_basis(p);
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> gens;
  const std::size_t count = 1 + rng() % 3;
  for (std::size_t g = 0; g < count; ++g) {
    const std::size_t v = rng() % nv;
    if (rad[v].rows() == 0) continue;
    std::vector<std::uint32_t> x(p.dim(v), 0);
    for (std::size_t r = 0; r < rad[v].rows(); ++r) {
      const std::uint32_t c = static_cast<std::uint32_t>(rng() % a->field().p());
      for (std::size_t j = 0; j < x.size(); ++j) x[j] = a->field().add(x[j], a->field().mul(c, rad[v](r, j)));
    }
    gens.emplace_back(v, x);
  }
  return quotient_representation(p, submodule_generated(p, gens)).module;
}

}  // namespace

std::vector<std::pair<std::string, Representation>> campaign_modules(
    const AlgebraPtr& a, std::uint64_t seed, const CampaignOptions& o,
    const std::vector<std::pair<std::string, Representation>>& extra) {
  const Quiver& q = a->quiver();
  std::vector<std::pair<std::string, Representation>> raw = extra;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) raw.emplace_back("S_" + q.vertices()[v], simple_module(a, v));
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    raw.emplace_back("P_" + q.vertices()[v], indecomposable_projective(a, v));
  if (a->is_monomial())
    for (const auto& pm : second_syzygy_candidates(a))
      if (!pm.path.is_trivial()) raw.emplace_back(to_string(pm.path, q) + "A", pm.module);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < o.random_modules; ++i) raw.emplace_back("Q" + std::to_string(i), radical_quotient(a, rng));
  const std::size_t base = raw.size();
  for (std::size_t i = 0; i < base; ++i) {
    Representation om = syzygy(raw[i].second);
    raw.emplace_back("Omega" + raw[i].first, om);
    raw.emplace_back("Omega2" + raw[i].first, syzygy(om));
  }

  SyzygyWorld seen(a);
  std::vector<std::pair<std::string, Representation>> out;
  for (const auto& [label, m] : raw) {
    if (m.is_zero()) continue;
    auto rep = decompose(m);
    for (std::size_t s = 0; s < rep.summands.size(); ++s) {
      const std::size_t before = seen.size();
      seen.intern(rep.summands[s].module);
      if (seen.size() == before) continue;
      out.emplace_back(rep.summands.size() == 1 ? label : label + "#" + std::to_string(s), rep.summands[s].module);
      if (out.size() >= o.max_modules) return out;
    }
  }
  return out;
}

std::size_t CampaignReport::violations() const {
  std::size_t v = 0;
  for (const auto& e : entries) {
    v += e.shift_failures;
    if (!e.minimal || !e.error.empty() || !e.ar.conclusion_holds) ++v;
  }
  for (const auto& t : triples)
    if (!t.error.empty()) ++v;
  return v;
}

std::vector<std::string> CampaignReport::machine_lines() const {
  std::vector<std::string> out;
  std::ostringstream head;
  head << "campaign seed=" << options.seed << " algebras=" << algebras.size() << " depth=" << options.depth
       << " orbit_cap=" << options.orbit_cap;
  out.push_back(head.str());
  for (const auto& na : algebras) {
    std::ostringstream s;
    s << "algebra name=" << na.name << " p=" << na.algebra->field().p() << " dim=" << na.algebra->dim()
      << " vertices=" << na.algebra->quiver().vertex_count() << " arrows=" << na.algebra->quiver().arrow_count()
      << " monomial=" << na.algebra->is_monomial();
    out.push_back(s.str());
  }
  for (const auto& e : entries) {
    std::ostringstream s;
    s << "module algebra=" << e.algebra << " label=" << e.label << " dims=" << dims_string(e.module)
      << " semi_gp=" << to_string(e.semi.status) << " period=" << period_string(e.semi.period);
    if (e.semi.status == Status::certified_no) s << " ext_index=" << e.semi.ext_index << " ext_value=" << e.semi.ext_value;
    s << " ar_hypothesis=" << e.ar.hypothesis << " projective=" << e.ar.projective
      << " ar_conclusion=" << e.ar.conclusion_holds << " ext_at_period=" << e.ar.ext_at_period
      << " shift_checks=" << e.shift_checks << " shift_failures=" << e.shift_failures << " minimal=" << e.minimal;
    if (!e.error.empty()) s << " error=\"" << e.error << "\"";
    out.push_back(s.str());
  }
  for (const auto& t : triples) {
    std::ostringstream s;
    s << "prop algebra=" << t.algebra << " module=" << t.module << " test=" << t.test << " checks=" << t.report.checks
      << " ok=" << t.error.empty();
    if (!t.error.empty()) s << " error=\"" << t.error << "\"";
    out.push_back(s.str());
  }
  std::size_t yes = 0;
  for (const auto& e : entries) yes += e.semi.status == Status::certified_yes;
  std::ostringstream tail;
  tail << "summary modules=" << entries.size() << " certified_yes=" << yes << " triples=" << triples.size()
       << " violations=" << violations();
  out.push_back(tail.str());
  return out;
}

CampaignReport run_campaign(const CampaignOptions& o) {
  CampaignReport r;
  r.options = o;
  r.algebras = campaign_algebras(o.seed, o.random_algebras);
  for (std::size_t ai = 0; ai < r.algebras.size(); ++ai) {
    const auto& [name, a] = r.algebras[ai];
    std::vector<std::pair<std::string, Representation>> extra;
    if (name == "example_A") extra.emplace_back("M", example_module(a));
    auto pool = campaign_modules(a, o.seed * 7919 + ai, o, extra);
    const Representation reg = regular_module(a);
    std::vector<Representation> targets{reg};
    for (std::size_t i = 0; i < pool.size() && targets.size() < 3; ++i) targets.push_back(pool[i].second);

    for (const auto& [label, m] : pool) {
      CampaignEntry e;
      e.algebra = name;
      e.label = label;
      e.module = m;
      try {
        e.semi = semi_gp_test(m, o.depth, o.orbit_cap);
        e.ar = ar_conjecture_check(m, o.depth, o.orbit_cap);
        Representation om = syzygy(m);
        for (const auto& n : targets)
          for (std::size_t i = 1; i <= o.shift_depth; ++i) {
            ++e.shift_checks;
            if (ext_dim(m, n, i + 1) != ext_dim(om, n, i)) ++e.shift_failures;
          }
        auto res = minimal_projective_resolution(m, 3);
        e.minimal = res.is_minimal() && res.is_complex() && res.is_exact();
      } catch (const std::exception& ex) {
        e.error = ex.what();
      }
      r.entries.push_back(std::move(e));
    }

    for (const auto& e : r.entries) {
      if (e.algebra != name || e.semi.status != Status::certified_yes) continue;
      for (std::size_t j = 0; j < pool.size() && j < o.test_modules; ++j) {
        PropTriple t;
        t.algebra = name;
        t.module = e.label;
        t.test = pool[j].first;
        try {
          t.report = verify_prop1(e.module, pool[j].second, o.prop_depth, o.orbit_cap);
          if (!t.report.precondition) t.error = "precondition not certified";
        } catch (const std::exception& ex) {
          t.error = ex.what();
        }
        r.triples.push_back(std::move(t));
      }
    }
  }
  return r;
}

}  // namespace gorelab
