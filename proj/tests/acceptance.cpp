// Acceptance run: one PASS/FAIL line per criterion. Optional argument: a single criterion number.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "gorelab/campaign.hpp"
#include "gorelab/decompose.hpp"
#include "gorelab/monomial.hpp"
#include "gorelab/presenter.hpp"
#include "gorelab/suite.hpp"
#include "oracles.hpp"

using namespace gorelab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void need(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

const CampaignReport& campaign() {
  static const CampaignReport r = [] {
    CampaignOptions o;
    o.seed = 1;
    return run_campaign(o);
  }();
  return r;
}

Outcome c1() {
  Outcome o;
  AlgebraPtr a = example_algebra();
  need(o, a->dim() == 10, "dim A = " + std::to_string(a->dim()));
  Representation m = example_module(a);
  need(o, m.dim(0) == 4 && m.dim(1) == 2, "dims of M");
  const std::size_t s = decompose(m).summand_count();
  need(o, s == 1, "M has " + std::to_string(s) + " summands");
  o.detail = o.pass ? "dim A=10, M=(4,2) indecomposable" : o.detail;
  return o;
}

Outcome c2() {
  Outcome o;
  AbstractAlgebra c = endomorphism_algebra(example_module(example_algebra()));
  const auto layers = radical_layers(c);
  need(o, c.dim() == 5, "dim End(M) = " + std::to_string(c.dim()));
  need(o, layers == std::vector<std::size_t>{1, 3, 1}, "layers");
  need(o, is_local(c), "not local");
  AlgebraPtr target = example_C();
  MatchResult m = find_presentation_match(c, target);
  need(o, m.witness.has_value(), "no witness");
  if (m.witness) need(o, verify_witness(c, target, *m.witness), "witness does not verify");
  if (o.pass) o.detail = "dim 5, layers 1,3,1, local, witness after " + std::to_string(m.tried) + " assignments";
  return o;
}

Outcome c3() {
  Outcome o;
  AlgebraPtr a = example_algebra();
  need(o, is_selfinjective(a), "A not selfinjective");
  need(o, symmetrizing_form(a).has_value(), "no symmetrizing form");
  const std::size_t id = injective_dim_lower(regular_module(example_C()), 10);
  need(o, id >= 8, "injective_dim_lower = " + std::to_string(id));
  if (o.pass) o.detail = "selfinjective, symmetric, injective_dim_lower(C_C, 10) = " + std::to_string(id);
  return o;
}

Outcome c4() {
  Outcome o;
  std::vector<NamedAlgebra> suite{{"k[x]/x^2", loop_algebra(2)}, {"k[x]/x^4", loop_algebra(4)},
                                  {"k<x,y>/(x2,y2,xy)", two_loop_algebra()}};
  for (std::uint64_t s = 1; s <= 6; ++s) suite.push_back({"random_" + std::to_string(s), random_monomial_algebra(s)});
  std::size_t nodes = 0;
  for (const auto& [name, a] : suite) {
    try {
      auto rep = classify(a);
      need(o, rep.phi_part == rep.gp_part, name + ": phi part differs from GP part");
      for (std::size_t i = 0; i < rep.graph.size(); ++i) {
        const bool vanish = oracles::brute_ext(rep.graph.module(i), regular_module(a), 1)[1] == 0;
        need(o, vanish == rep.graph.nodes[i].ext1_vanishes, name + ": Ext^1 oracle disagrees at node " + std::to_string(i));
      }
      nodes += rep.graph.size();
    } catch (const ClassificationMismatch& e) {
      need(o, false, name + ": ClassificationMismatch " + e.what());
    }
  }
  if (o.pass) o.detail = std::to_string(suite.size()) + " algebras, " + std::to_string(nodes) + " graph nodes";
  return o;
}

Outcome c5() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& e : campaign().entries) {
    if (e.semi.status != Status::certified_yes) continue;
    AlgebraPtr a = e.module.algebra_ptr();
    auto ext = oracles::brute_ext(e.module, regular_module(a), 20);
    for (std::size_t i = 1; i <= 20; ++i)
      need(o, ext[i] == 0, e.algebra + "/" + e.label + ": Ext^" + std::to_string(i) + " = " + std::to_string(ext[i]));
    ++checked;
  }
  need(o, checked > 0, "no certified modules");
  if (o.pass) o.detail = std::to_string(checked) + " certified modules, Ext^1..20(M,A) = 0 by brute force";
  return o;
}

Outcome c6() {
  Outcome o;
  std::size_t ok = 0;
  for (const auto& t : campaign().triples) {
    if (t.error.empty())
      ++ok;
    else
      need(o, false, t.algebra + "/" + t.module + "/" + t.test + ": " + t.error);
  }
  need(o, ok >= 100, "only " + std::to_string(ok) + " triples");
  if (o.pass) o.detail = std::to_string(ok) + " triples";
  return o;
}

Outcome c7() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& e : campaign().entries) {
    need(o, e.error.empty(), e.algebra + "/" + e.label + ": " + e.error);
    need(o, e.shift_failures == 0, e.algebra + "/" + e.label + ": dimension shift");
    need(o, e.minimal, e.algebra + "/" + e.label + ": resolution not minimal");
    checks += e.shift_checks;
  }
  if (o.pass)
    o.detail = std::to_string(campaign().entries.size()) + " modules, " + std::to_string(checks) + " shift checks";
  return o;
}

Outcome c8() {
  Outcome o;
  std::size_t premise = 0, periodic = 0;
  for (const auto& e : campaign().entries) {
    const auto& r = e.ar;
    if (r.hypothesis && r.certified) {
      ++premise;
      need(o, r.projective, e.algebra + "/" + e.label + ": hypothesis and certificate but not projective");
    }
    if (e.semi.status == Status::certified_yes && e.semi.period && !r.projective) {
      const auto [l, t] = *e.semi.period;
      Representation shifted = e.module;
      for (std::size_t k = 0; k < l; ++k) shifted = syzygy(shifted);
      const std::size_t v = ext_dim(shifted, shifted, t);
      need(o, v > 0, e.algebra + "/" + e.label + ": Ext^t vanishes at the period");
      ++periodic;
    }
  }
  need(o, periodic > 0, "no periodic non-projective module");
  if (o.pass)
    o.detail = std::to_string(premise) + " modules meet the hypothesis (all projective), " + std::to_string(periodic) +
               " periodic non-projective with Ext^t > 0";
  return o;
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  if (pclose(p) != 0) out += "\n<nonzero exit>";
  return out;
}

Outcome c9() {
  Outcome o;
  const std::string cmd = std::string("\"") + GORELAB_CLI + "\" selftest --seed 5 --format machine";
  const std::string a = capture(cmd);
  const std::string b = capture(cmd);
  need(o, !a.empty(), "empty report");
  need(o, a.find("<nonzero exit>") == std::string::npos, "selftest failed");
  need(o, a == b, "reports differ");
  if (o.pass) o.detail = "two runs, " + std::to_string(a.size()) + " identical bytes";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::array<std::function<Outcome()>, 9> criteria{c1, c2, c3, c4, c5, c6, c7, c8, c9};
  const int only = argc > 1 ? std::stoi(argv[1]) : 0;
  int failed = 0;
  for (int i = 1; i <= 9; ++i) {
    if (only && only != i) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s (%.2fs) %s\n", i, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
