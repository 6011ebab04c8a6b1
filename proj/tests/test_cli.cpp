#include <sstream>
#include <string>

#include "doctest.h"
#include "gorelab/cli.hpp"

using namespace gorelab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(GORELAB_DATA_DIR) + "/" + name; }

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("gp-test exit codes") {
  auto yes = run({"gp-test", "-w", data("paper_example.galg"), "-m", "M", "--format", "machine"});
  CHECK(yes.code == kExitOk);
  CHECK(has(yes.out, "status=certified_yes"));
  auto no = run({"gp-test", "-w", data("two_loops_rad2.galg"), "-m", "S_1", "--format", "machine"});
  CHECK(no.code == kExitNo);
  CHECK(has(no.out, "ext_index=1"));
  auto open = run({"gp-test", "-w", data("paper_example.galg"), "-m", "M", "--depth", "2", "--orbit-cap", "0"});
  CHECK(open.code == kExitInconclusive);
  auto semi = run({"gp-test", "--semi", "-w", data("a3_linear.galg"), "-m", "S_1", "--format", "machine"});
  CHECK(semi.code == kExitNo);
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).code == kExitError);
  CHECK(run({"gp-test", "-w", data("paper_example.galg")}).code == kExitError);
  CHECK(run({"gp-test", "-w", data("paper_example.galg"), "-m", "M", "--format", "xml"}).code == kExitError);
  auto missing = run({"check", "-w", data("no_such_file.galg")});
  CHECK(missing.code == kExitError);
  CHECK_FALSE(missing.err.empty());
  auto unknown = run({"resolve", "-w", data("paper_example.galg"), "-m", "Q"});
  CHECK(unknown.code == kExitError);
  CHECK(has(unknown.err, "Q"));
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("monomial-classify") {
  auto bad = run({"monomial-classify", "-w", data("paper_example.galg")});
  CHECK(bad.code == kExitError);
  CHECK(has(bad.err, "NotMonomial"));
  auto ok = run({"monomial-classify", "-w", data("truncated_loop.galg"), "--format", "machine"});
  CHECK(ok.code == kExitOk);
  CHECK(has(ok.out, "equal=1"));
  CHECK(has(ok.out, "nodes=4"));
}

TEST_CASE("endo present and match") {
  auto pres = run({"endo", "-w", data("paper_example.galg"), "-m", "M", "--present", "--format", "machine"});
  CHECK(pres.code == kExitOk);
  CHECK(has(pres.out, "dim=5 layers=1,3,1 local=1"));
  CHECK(has(pres.out, "quiver vertices=1 arrows=3"));
  auto match = run({"endo", "-w", data("paper_example.galg"), "-m", "M", "--match", "kW/L", "--format", "machine"});
  CHECK(match.code == kExitOk);
  CHECK(has(match.out, "found=1"));
  CHECK(has(match.out, "verified=1"));
  auto budget = run({"endo", "-w", data("paper_example.galg"), "-m", "M", "--match", "kW/L", "--budget", "10"});
  CHECK(budget.code == kExitInconclusive);
  CHECK(run({"endo", "-w", data("paper_example.galg"), "-m", "M", "--present", "--match", "kW/L"}).code == kExitError);
}

TEST_CASE("other commands") {
  auto chk = run({"check", "-w", data("paper_example.galg"), "--format", "machine"});
  CHECK(chk.code == kExitOk);
  CHECK(has(chk.out, "module name=M dims=(4,2) valid=1 summands=1"));
  auto ext = run({"ext", "-w", data("two_loops_rad2.galg"), "-m", "S_1", "--depth", "3", "--format", "machine"});
  CHECK(ext.code == kExitOk);
  CHECK(has(ext.out, "i=1 dim=3"));
  auto res = run({"resolve", "-w", data("paper_example.galg"), "-m", "M", "--length", "3", "--format", "machine"});
  CHECK(has(res.out, "minimal=1"));
  auto orbit = run({"syzygy-orbit", "-w", data("paper_example.galg"), "-m", "M", "--format", "machine"});
  CHECK(has(orbit.out, "period=0,3"));
  auto ar = run({"ar-check", "-w", data("paper_example.galg"), "-m", "M", "--format", "machine"});
  CHECK(ar.code == kExitOk);
  CHECK(has(ar.out, "conclusion=1"));
}

TEST_CASE("paper-example matches the bundled golden report") {
  auto r = run({"paper-example", "--format", "machine"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "golden match=1"));
  CHECK(render_machine(paper_example_records(0)) == bundled_paper_golden());
}

TEST_CASE("record rendering") {
  Record r("x");
  r.add("a", 1).add("b", true).add("c", "two words").add("d", std::string("q\"t"));
  CHECK(render_machine({r}) == "x a=1 b=1 c=\"two words\" d=\"q\\\"t\"\n");
}
