#include "gorelab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "embedded.hpp"
#include "gorelab/campaign.hpp"
#include "gorelab/decompose.hpp"
#include "gorelab/duality.hpp"
#include "gorelab/homology.hpp"
#include "gorelab/monomial.hpp"
#include "gorelab/presenter.hpp"
#include "gorelab/suite.hpp"
#include "gorelab/workspace.hpp"

namespace gorelab {

Record& Record::add(const std::string& key, const std::string& value) {
  fields.emplace_back(key, value);
  return *this;
}

namespace {

std::string quoted(const std::string& v) {
  const bool plain = !v.empty() && v.find_first_of(" \t\"=\n") == std::string::npos;
  if (plain) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::size_t>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s.empty() ? "-" : s;
}

std::string period_string(const std::optional<std::pair<std::size_t, std::size_t>>& p) {
  return p ? std::to_string(p->first) + "," + std::to_string(p->second) : "none";
}

std::string vec_string(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

std::string render_machine(const std::vector<Record>& records) {
  std::string out;
  for (const auto& r : records) {
    out += r.name;
    for (const auto& [k, v] : r.fields) out += " " + k + "=" + quoted(v);
    out += "\n";
  }
  return out;
}

std::string render_text(const std::vector<Record>& records) {
  std::string out;
  for (const auto& r : records) {
    out += r.name + "\n";
    std::size_t w = 0;
    for (const auto& [k, v] : r.fields) w = std::max(w, k.size());
    for (const auto& [k, v] : r.fields) out += "  " + k + std::string(w - k.size() + 2, ' ') + v + "\n";
  }
  return out;
}

const std::string& bundled_paper_workspace() {
  static const std::string s = embedded::kPaperWorkspace;
  return s;
}

const std::string& bundled_paper_golden() {
  static const std::string s = embedded::kPaperGolden;
  return s;
}

namespace {

std::string multiset_string(const SyzygyWorld& w, const Multiset& m) {
  if (m.empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& [c, k] : m) parts.push_back(dims_string(w.representative(c)) + (k > 1 ? "^" + std::to_string(k) : ""));
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "+" : "") + parts[i];
  return s;
}

Record verdict_record(const std::string& test, const std::string& module, const Verdict& v) {
  Record r("verdict");
  r.add("module", module).add("test", test).add("status", to_string(v.status)).add("period", period_string(v.period));
  r.add("terminated_at", v.terminated_at ? std::to_string(*v.terminated_at) : "none");
  if (v.status == Status::certified_no)
    r.add("side", v.side).add("ext_index", v.ext_index).add("ext_value", v.ext_value);
  if (test == "gp") {
    r.add("dual_period", period_string(v.dual_period));
    r.add("dual_terminated_at", v.dual_terminated_at ? std::to_string(*v.dual_terminated_at) : "none");
    r.add("dual_crosscheck", v.dual_crosscheck);
  }
  r.add("depth", v.depth).add("orbit_cap", v.orbit_cap);
  return r;
}

int status_exit(Status s) {
  switch (s) {
    case Status::certified_yes: return kExitOk;
    case Status::certified_no: return kExitNo;
    case Status::inconclusive: return kExitInconclusive;
  }
  return kExitError;
}

std::vector<Record> match_records(const AbstractAlgebra& c, const std::string& target_name, const AlgebraPtr& target,
                                  std::uint64_t budget, std::uint64_t seed, int* exit_code) {
  std::vector<Record> out;
  Record r("match");
  r.add("target", target_name);
  try {
    MatchResult m = find_presentation_match(c, target, budget, seed);
    r.add("found", m.witness.has_value()).add("exhaustive", m.exhaustive);
    r.add("space", static_cast<std::uint64_t>(m.space)).add("tried", m.tried);
    if (m.witness) r.add("verified", verify_witness(c, target, *m.witness));
    if (!m.reason.empty()) r.add("reason", m.reason);
    out.push_back(r);
    if (m.witness)
      for (std::size_t a = 0; a < m.witness->arrow_images.size(); ++a) {
        Record img("image");
        img.add("arrow", target->quiver().arrows()[a].name).add("coords", vec_string(m.witness->arrow_images[a]));
        out.push_back(img);
      }
    if (exit_code) *exit_code = m.witness ? kExitOk : kExitNo;
  } catch (const SearchBudgetExceeded& e) {
    r.add("found", false).add("exhaustive", false).add("tried", e.tried());
    std::ostringstream cov;
    cov.precision(6);
    cov << e.coverage();
    r.add("coverage", cov.str());
    out.push_back(r);
    if (exit_code) *exit_code = kExitInconclusive;
  }
  return out;
}

}  // namespace

std::vector<Record> paper_example_records(std::uint64_t seed) {
  std::vector<Record> out;
  Workspace w = parse_workspace(bundled_paper_workspace());
  AlgebraPtr a = w.algebra();
  {
    Record r("algebra");
    r.add("name", "A").add("p", a->field().p()).add("dim", a->dim()).add("layers", join(a->radical_layers()));
    r.add("selfinjective", is_selfinjective(a)).add("symmetrizing_form", symmetrizing_form(a, seed).has_value());
    out.push_back(r);
  }
  Representation m = w.module("M");
  auto dec = decompose(m);
  {
    Record r("module");
    r.add("name", "M").add("dims", dims_string(m)).add("valid", true).add("summands", dec.summand_count());
    r.add("indecomposable", dec.summand_count() == 1);
    out.push_back(r);
  }
  auto res = minimal_projective_resolution(m, 6);
  {
    std::vector<std::string> syz, proj;
    for (std::size_t i = 0; i <= res.length(); ++i) {
      syz.push_back(dims_string(res.syzygies[i]));
      proj.push_back(dims_string(res.projective(i)));
    }
    auto cat = [](const std::vector<std::string>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + v[i];
      return s;
    };
    Record r("resolution");
    r.add("module", "M").add("length", res.length()).add("syzygies", cat(syz)).add("projectives", cat(proj));
    r.add("minimal", res.is_minimal()).add("exact", res.is_exact());
    out.push_back(r);
  }
  out.push_back(verdict_record("semi_gp", "M", semi_gp_test(m)));
  out.push_back(verdict_record("gp", "M", gorenstein_projective_test(m)));
  {
    Representation t = tau(m);
    Record r("tau");
    r.add("module", "M").add("dims", dims_string(t)).add("is_omega2", is_isomorphic(t, syzygy(syzygy(m))));
    out.push_back(r);
  }
  AbstractAlgebra c = endomorphism_algebra(m);
  QuiverPresentation pres = quiver_presentation(c, seed);
  {
    Record r("endomorphism");
    r.add("module", "M").add("dim", c.dim()).add("layers", join(radical_layers(c))).add("local", is_local(c));
    r.add("quiver_vertices", pres.quiver.vertex_count()).add("quiver_arrows", pres.quiver.arrow_count());
    r.add("relations", pres.relations.size()).add("rebuilt_dim", pres.rebuilt->dim());
    out.push_back(r);
  }
  AlgebraPtr target = w.target("kW/L");
  {
    Record r("target");
    r.add("name", "kW/L").add("dim", target->dim()).add("layers", join(target->radical_layers()));
    out.push_back(r);
  }
  auto mr = match_records(c, "kW/L", target, kDefaultSearchBudget, seed, nullptr);
  out.push_back(mr.front());
  {
    Record r("injective_dim_lower");
    r.add("algebra", "C").add("depth", 10).add("value", injective_dim_lower(regular_module(target), 10));
    out.push_back(r);
  }
  {
    ArReport ar = ar_conjecture_check(m);
    Record r("ar");
    r.add("module", "M").add("hypothesis", ar.hypothesis).add("period", period_string(ar.period));
    r.add("ext_at_period", ar.ext_at_period).add("conclusion", ar.conclusion_holds);
    out.push_back(r);
  }
  return out;
}

namespace {

struct Common {
  std::size_t depth = 20;
  std::size_t orbit_cap = 50;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string workspace;
};

void add_common(CLI::App* sub, Common& c, bool needs_workspace) {
  sub->add_option("--depth", c.depth, "Ext depth")->capture_default_str();
  sub->add_option("--orbit-cap", c.orbit_cap, "syzygy orbit cap")->capture_default_str();
  sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
  sub->add_option("--format", c.format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  if (needs_workspace) sub->add_option("-w,--workspace", c.workspace, "workspace file (galg 1)")->required();
}

Representation module_by_name(const Workspace& w, const std::string& name) {
  for (const auto& m : w.modules)
    if (m.name == name) return w.module(name);
  AlgebraPtr a = w.algebra();
  if (name == "A") return regular_module(a);
  if (name == "DA") return dual_regular(a);
  if (name.size() > 2 && (name[0] == 'S' || name[0] == 'P') && name[1] == '_') {
    if (auto v = a->quiver().vertex_index(name.substr(2)))
      return name[0] == 'S' ? simple_module(a, *v) : indecomposable_projective(a, *v);
  }
  throw std::invalid_argument("no module named '" + name + "' (workspace modules, A, DA, S_<v>, P_<v>)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gorelab: exact workbench for path algebras over prime fields", "gorelab"};
  app.require_subcommand(1);
  Common c;
  std::string module, against = "A", match, golden_out;
  std::size_t length = 6;
  std::uint64_t budget = kDefaultSearchBudget;
  bool present = false, semi_only = false;
  std::size_t random_algebras = 6;

  auto* check = app.add_subcommand("check", "parse a workspace, build the algebra, validate modules");
  add_common(check, c, true);
  auto* resolve = app.add_subcommand("resolve", "minimal projective resolution");
  add_common(resolve, c, true);
  resolve->add_option("-m,--module", module)->required();
  resolve->add_option("--length", length)->capture_default_str();
  auto* ext = app.add_subcommand("ext", "Ext dimensions");
  add_common(ext, c, true);
  ext->add_option("-m,--module", module)->required();
  ext->add_option("--against", against, "second argument (module name, A or DA)")->capture_default_str();
  auto* orbit = app.add_subcommand("syzygy-orbit", "syzygy orbit and period");
  add_common(orbit, c, true);
  orbit->add_option("-m,--module", module)->required();
  auto* gp = app.add_subcommand("gp-test", "Gorenstein-projectivity certificate");
  add_common(gp, c, true);
  gp->add_option("-m,--module", module)->required();
  gp->add_flag("--semi", semi_only, "only the semi-Gorenstein-projective test");
  auto* mono = app.add_subcommand("monomial-classify", "syzygy graph and GP classification of a monomial algebra");
  add_common(mono, c, true);
  auto* endo = app.add_subcommand("endo", "endomorphism algebra: present or match");
  add_common(endo, c, true);
  endo->add_option("-m,--module", module)->required();
  auto* present_flag = endo->add_flag("--present", present, "quiver and relations");
  auto* match_opt = endo->add_option("--match", match, "target name in the workspace, or a galg file with a target");
  present_flag->excludes(match_opt);
  endo->add_option("--budget", budget, "assignment budget")->capture_default_str();
  auto* ar = app.add_subcommand("ar-check", "Auslander-Reiten conjecture instance check");
  add_common(ar, c, true);
  ar->add_option("-m,--module", module)->required();
  auto* example = app.add_subcommand("paper-example", "reproduce the bundled worked example and diff with the golden report");
  add_common(example, c, false);
  example->add_option("--write-golden", golden_out, "write the machine report to this file");
  auto* self = app.add_subcommand("selftest", "example, monomial suite and seeded property campaign");
  add_common(self, c, false);
  self->add_option("--random-algebras", random_algebras)->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitError;
  }

  std::vector<Record> records;
  int code = kExitOk;
  try {
    std::optional<Workspace> w;
    if (!c.workspace.empty()) w = load_workspace(c.workspace);

    if (check->parsed()) {
      AlgebraPtr a = w->algebra();
      Record ws("workspace");
      ws.add("p", a->field().p()).add("vertices", a->quiver().vertex_count()).add("arrows", a->quiver().arrow_count());
      ws.add("relations", w->relations.size()).add("modules", w->modules.size()).add("targets", w->targets.size());
      records.push_back(ws);
      Record al("algebra");
      al.add("dim", a->dim()).add("layers", join(a->radical_layers())).add("monomial", a->is_monomial());
      al.add("selfinjective", is_selfinjective(a));
      records.push_back(al);
      for (const auto& spec : w->modules) {
        Record r("module");
        r.add("name", spec.name);
        try {
          Representation m = w->module(spec.name);
          auto dec = decompose(m, c.seed);
          r.add("dims", dims_string(m)).add("valid", true).add("summands", dec.summand_count());
        } catch (const InvalidRepresentation& e) {
          r.add("valid", false).add("error", e.what());
          code = kExitError;
        }
        records.push_back(r);
      }
      for (const auto& t : w->targets) {
        AlgebraPtr ta = w->target(t.name);
        Record r("target");
        r.add("name", t.name).add("dim", ta->dim()).add("layers", join(ta->radical_layers()));
        records.push_back(r);
      }
    } else if (resolve->parsed()) {
      Representation m = module_by_name(*w, module);
      auto res = minimal_projective_resolution(m, length);
      for (std::size_t i = 0; i <= res.length(); ++i) {
        Record r("term");
        r.add("i", i).add("syzygy", dims_string(res.syzygies[i])).add("projective", dims_string(res.projective(i)));
        records.push_back(r);
      }
      Record r("resolution");
      r.add("module", module).add("length", res.length()).add("complex", res.is_complex());
      r.add("exact", res.is_exact()).add("minimal", res.is_minimal());
      records.push_back(r);
    } else if (ext->parsed()) {
      Representation m = module_by_name(*w, module);
      Representation n = module_by_name(*w, against);
      auto table = ext_table(m, n, c.depth);
      for (std::size_t i = 0; i < table.size(); ++i) {
        Record r("ext");
        r.add("module", module).add("against", against).add("i", i).add("dim", table[i]);
        records.push_back(r);
      }
    } else if (orbit->parsed()) {
      Representation m = module_by_name(*w, module);
      SyzygyOrbit o = syzygy_orbit(m, c.orbit_cap);
      for (std::size_t k = 0; k < o.entries.size(); ++k) {
        Record r("orbit");
        r.add("k", k).add("summands", total_count(o.entries[k])).add("classes", multiset_string(*o.world, o.entries[k]));
        records.push_back(r);
      }
      Record r("orbit_result");
      r.add("module", module).add("entries", o.entries.size()).add("period", period_string(o.period));
      r.add("terminated", o.terminated).add("overflow", o.overflow).add("cap", o.cap);
      records.push_back(r);
    } else if (gp->parsed()) {
      Representation m = module_by_name(*w, module);
      Verdict v = semi_only ? semi_gp_test(m, c.depth, c.orbit_cap) : gorenstein_projective_test(m, c.depth, c.orbit_cap);
      records.push_back(verdict_record(semi_only ? "semi_gp" : "gp", module, v));
      code = status_exit(v.status);
    } else if (mono->parsed()) {
      WeaklyGorensteinReport rep = classify(w->algebra(), c.depth, c.orbit_cap);
      const auto& g = rep.graph;
      for (std::size_t i = 0; i < g.size(); ++i) {
        Record r("node");
        std::vector<std::size_t> succ;
        for (const auto& [j, k] : g.nodes[i].omega)
          for (std::uint64_t t = 0; t < k; ++t) succ.push_back(j);
        r.add("index", i).add("origin", g.nodes[i].origin).add("dims", dims_string(g.module(i)));
        r.add("projective", g.nodes[i].projective).add("ext1_vanishes", g.nodes[i].ext1_vanishes);
        r.add("semi_gp", static_cast<bool>(rep.semi_gp[i])).add("gp", to_string(rep.gp_verdicts[i].status));
        r.add("omega", join(succ, "+"));
        records.push_back(r);
      }
      Record r("classification");
      r.add("nodes", g.size()).add("seeded", g.seeded).add("phi", join(rep.phi_part)).add("gp", join(rep.gp_part));
      r.add("equal", rep.phi_part == rep.gp_part).add("verdict", rep.verdict);
      records.push_back(r);
    } else if (endo->parsed()) {
      Representation m = module_by_name(*w, module);
      AbstractAlgebra e = endomorphism_algebra(m);
      Record r("endomorphism");
      r.add("module", module).add("dim", e.dim()).add("layers", join(radical_layers(e))).add("local", is_local(e));
      records.push_back(r);
      if (!match.empty()) {
        AlgebraPtr target;
        bool named = std::any_of(w->targets.begin(), w->targets.end(), [&](const auto& t) { return t.name == match; });
        if (named) {
          target = w->target(match);
        } else {
          Workspace tw = load_workspace(match);
          if (tw.targets.empty()) throw std::invalid_argument(match + " contains no target");
          target = tw.target(tw.targets.front().name);
        }
        auto mr = match_records(e, match, target, budget, c.seed, &code);
        records.insert(records.end(), mr.begin(), mr.end());
      } else {
        QuiverPresentation p = quiver_presentation(e, c.seed);
        Record q("quiver");
        q.add("vertices", p.quiver.vertex_count()).add("arrows", p.quiver.arrow_count());
        q.add("relations", p.relations.size()).add("rebuilt_dim", p.rebuilt->dim());
        records.push_back(q);
        for (const auto& arr : p.quiver.arrows()) {
          Record a("arrow");
          a.add("name", arr.name).add("source", p.quiver.vertices()[arr.source]);
          a.add("target", p.quiver.vertices()[arr.target]);
          records.push_back(a);
        }
        for (const auto& rel : p.relations) {
          Record x("relation");
          x.add("text", to_string(rel, p.quiver, e.field()));
          records.push_back(x);
        }
      }
    } else if (ar->parsed()) {
      Representation m = module_by_name(*w, module);
      ArReport rep = ar_conjecture_check(m, c.depth, c.orbit_cap);
      Record r("ar");
      r.add("module", module).add("hypothesis", rep.hypothesis);
      if (!rep.hypothesis)
        r.add("witness_index", rep.witness_index).add("witness_value", rep.witness_value).add("witness_target", rep.witness_target);
      r.add("certified", rep.certified).add("projective", rep.projective).add("conclusion", rep.conclusion_holds);
      r.add("period", period_string(rep.period)).add("ext_at_period", rep.ext_at_period);
      r.add("ext_shifted", rep.ext_shifted).add("stable_shifted", rep.stable_shifted).add("stable_end", rep.stable_end);
      records.push_back(r);
      code = rep.conclusion_holds ? kExitOk : kExitError;
    } else if (example->parsed()) {
      records = paper_example_records(0);
      const std::string report = render_machine(records);
      if (!golden_out.empty()) {
        std::ofstream f(golden_out);
        f << report;
      }
      const bool same = report == bundled_paper_golden();
      Record g("golden");
      g.add("match", same);
      records.push_back(g);
      code = same ? kExitOk : kExitError;
    } else if (self->parsed()) {
      std::size_t failures = 0;
      auto example_records = paper_example_records(0);
      const bool golden = render_machine(example_records) == bundled_paper_golden();
      failures += !golden;
      records.insert(records.end(), example_records.begin(), example_records.end());

      std::vector<NamedAlgebra> suite{{"loop_x2", loop_algebra(2)}, {"loop_x4", loop_algebra(4)},
                                      {"two_loop", two_loop_algebra()}};
      for (std::size_t i = 0; i < 5; ++i) {
        const std::uint64_t s = c.seed * 7727 + i;
        suite.push_back({"random_monomial_" + std::to_string(s), random_monomial_algebra(s)});
      }
      for (const auto& [name, a] : suite) {
        Record r("monomial");
        r.add("algebra", name).add("dim", a->dim());
        try {
          auto rep = classify(a, c.depth, c.orbit_cap);
          r.add("nodes", rep.graph.size()).add("phi", rep.phi_part.size()).add("gp", rep.gp_part.size());
          r.add("equal", rep.phi_part == rep.gp_part);
          failures += rep.phi_part != rep.gp_part;
        } catch (const std::exception& e) {
          r.add("error", e.what());
          ++failures;
        }
        records.push_back(r);
      }

      CampaignOptions o;
      o.seed = c.seed;
      o.random_algebras = random_algebras;
      o.depth = c.depth;
      o.orbit_cap = c.orbit_cap;
      CampaignReport camp = run_campaign(o);
      for (const auto& line : camp.machine_lines()) {
        // campaign lines already follow the record layout
        std::istringstream in(line);
        std::string name;
        in >> name;
        Record r(name);
        std::string rest;
        std::getline(in, rest);
        std::size_t pos = 0;
        while (pos < rest.size()) {
          while (pos < rest.size() && rest[pos] == ' ') ++pos;
          if (pos >= rest.size()) break;
          const std::size_t eq = rest.find('=', pos);
          std::string key = rest.substr(pos, eq - pos);
          std::string value;
          pos = eq + 1;
          if (pos < rest.size() && rest[pos] == '"') {
            const std::size_t close = rest.find('"', pos + 1);
            value = rest.substr(pos + 1, close - pos - 1);
            pos = close + 1;
          } else {
            const std::size_t sp = rest.find(' ', pos);
            value = rest.substr(pos, sp == std::string::npos ? std::string::npos : sp - pos);
            pos = sp == std::string::npos ? rest.size() : sp;
          }
          r.add(key, value);
        }
        records.push_back(r);
      }
      failures += camp.violations();
      Record r("selftest");
      r.add("seed", c.seed).add("golden", golden).add("failures", failures);
      records.push_back(r);
      code = failures ? kExitError : kExitOk;
    }
  } catch (const NotMonomial& e) {
    err << "error: NotMonomial: " << e.what() << "\n";
    return kExitError;
  } catch (const WorkspaceError& e) {
    err << "error: " << c.workspace << ": " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  out << (c.format == "machine" ? render_machine(records) : render_text(records));
  return code;
}

}  // namespace gorelab
