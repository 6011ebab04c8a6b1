#include "gorelab/workspace.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace gorelab {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 0;

  [[noreturn]] void fail(const std::string& what) const { throw WorkspaceError(what, line, pos + 1); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw WorkspaceError(what, line, at + 1); }

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  bool peek(char c) {
    skip_space();
    return pos < text.size() && text[pos] == c;
  }
  void expect(char c) {
    skip_space();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  void expect(std::string_view s) {
    skip_space();
    if (text.substr(pos, s.size()) != s) fail("expected '" + std::string(s) + "'");
    pos += s.size();
  }
  // name: anything up to whitespace or one of the stop characters
  std::string name(std::string_view stop = "") {
    skip_space();
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           stop.find(text[pos]) == std::string_view::npos)
      ++pos;
    if (pos == start) fail("expected a name");
    return std::string(text.substr(start, pos - start));
  }
  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    std::int64_t v = 0;
    const char* b = text.data() + start + (text[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(b, text.data() + pos, v);
    if (ec != std::errc() || ptr != text.data() + pos) fail_at("expected an integer", start);
    return v;
  }
  std::string_view rest() {
    skip_space();
    return text.substr(pos);
  }
};

std::size_t vertex_of(const Quiver& q, Cursor& c) {
  const std::size_t at = (c.skip_space(), c.pos);
  std::string v = c.name(":-=");
  auto idx = q.vertex_index(v);
  if (!idx) c.fail_at("unknown vertex '" + v + "'", at);
  return *idx;
}

void parse_vertex(Quiver& q, Cursor& c) {
  const std::size_t at = (c.skip_space(), c.pos);
  std::string v = c.name();
  if (q.vertex_index(v)) c.fail_at("duplicate vertex '" + v + "'", at);
  q.add_vertex(v);
  if (!c.done()) c.fail("unexpected text after vertex name");
}

void parse_arrow(Quiver& q, Cursor& c) {
  const std::size_t at = (c.skip_space(), c.pos);
  std::string a = c.name(":");
  if (q.arrow_index(a) || q.vertex_index(a)) c.fail_at("duplicate name '" + a + "'", at);
  c.expect(':');
  std::size_t s = vertex_of(q, c);
  c.expect("->");
  std::size_t t = vertex_of(q, c);
  if (!c.done()) c.fail("unexpected text after arrow");
  q.add_arrow(a, s, t);
}

AlgElement parse_rel(const Quiver& q, FieldSpec k, Cursor& c) {
  const std::size_t at = (c.skip_space(), c.pos);
  AlgElement r;
  try {
    r = parse_relation(c.rest(), q, k);
  } catch (const RelationSyntaxError& e) {
    c.fail_at(e.what(), at + e.column() - 1);
  } catch (const std::invalid_argument& e) {
    c.fail_at(e.what(), at);
  }
  if (r.is_zero()) c.fail_at("relation is zero", at);
  const Path& first = r.terms.begin()->first;
  for (const auto& [p, coeff] : r.terms)
    if (p.source != first.source || p.target != first.target) c.fail_at("relation not parallel", at);
  return r;
}

Mat parse_matrix(Cursor& c, std::size_t rows, std::size_t cols, FieldSpec k, const std::string& arrow) {
  const std::size_t at = (c.skip_space(), c.pos);
  std::vector<std::vector<std::int64_t>> data;
  c.expect('[');
  if (!c.peek(']')) {
    while (true) {
      c.expect('[');
      std::vector<std::int64_t> row;
      if (!c.peek(']')) {
        while (true) {
          row.push_back(c.integer());
          if (c.peek(']')) break;
          c.expect(',');
        }
      }
      c.expect(']');
      data.push_back(std::move(row));
      if (c.peek(']')) break;
      c.expect(',');
    }
  }
  c.expect(']');
  if (!c.done()) c.fail("unexpected text after matrix");
  const std::size_t got_cols = data.empty() ? cols : data.front().size();
  for (const auto& r : data)
    if (r.size() != got_cols) c.fail_at("ragged matrix for " + arrow, at);
  if (data.size() != rows || got_cols != cols)
    c.fail_at("shape mismatch for " + arrow + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                  ", got " + std::to_string(data.size()) + "x" + std::to_string(got_cols),
              at);
  Mat m(rows, cols, k);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = k.reduce(data[i][j]);
  return m;
}

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return std::string(hash == std::string_view::npos ? line : line.substr(0, hash));
}

}  // namespace

Workspace parse_workspace(std::string_view text) {
  Workspace w;
  bool header = false;
  bool field_set = false;
  ModuleSpec* module = nullptr;
  std::vector<bool> module_mat_set;
  std::vector<std::size_t> module_line;
  TargetSpec* target = nullptr;
  bool structure_closed = false;  // vertices and arrows are frozen once relations or modules start

  auto finish_module = [&](std::size_t line) {
    if (!module) return;
    const auto& arrows = w.quiver.arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      if (module_mat_set[a]) continue;
      const std::size_t r = module->dims[arrows[a].source], cl = module->dims[arrows[a].target];
      if (r && cl) throw WorkspaceError("module " + module->name + " has no matrix for arrow " + arrows[a].name, line, 1);
      module->matrices[a] = Mat(r, cl, w.field);
    }
    module = nullptr;
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    Cursor c{line, 0, lineno};
    if (c.done()) continue;
    const std::size_t kw_at = c.pos;
    std::string kw = c.name();
    if (!header) {
      if (kw != "galg") c.fail_at("expected 'galg 1' header", kw_at);
      if (c.integer() != 1) c.fail("unsupported format version");
      if (!c.done()) c.fail("unexpected text after header");
      header = true;
      continue;
    }
    if (target) {
      if (kw == "vertex") {
        parse_vertex(target->quiver, c);
      } else if (kw == "arrow") {
        parse_arrow(target->quiver, c);
      } else if (kw == "relation") {
        target->relations.push_back(parse_rel(target->quiver, w.field, c));
      } else if (kw == "end") {
        if (!c.done()) c.fail("unexpected text after end");
        target = nullptr;
      } else {
        c.fail_at("unknown keyword '" + kw + "' inside target", kw_at);
      }
      continue;
    }
    if (kw == "field") {
      if (field_set) c.fail_at("field given twice", kw_at);
      c.expect("p=");
      const std::size_t at = c.pos;
      std::int64_t p = c.integer();
      try {
        if (p < 2) throw std::invalid_argument("not a prime");
        w.field = FieldSpec(static_cast<std::uint64_t>(p));
      } catch (const std::invalid_argument& e) {
        c.fail_at(std::string("bad field: ") + e.what(), at);
      }
      if (!c.done()) c.fail("unexpected text after field");
      field_set = true;
    } else if (kw == "vertex" || kw == "arrow") {
      if (structure_closed) c.fail_at(kw + " after relations or modules", kw_at);
      if (kw == "vertex")
        parse_vertex(w.quiver, c);
      else
        parse_arrow(w.quiver, c);
    } else if (kw == "relation") {
      if (!field_set) c.fail_at("relation before field", kw_at);
      finish_module(lineno);
      structure_closed = true;
      w.relations.push_back(parse_rel(w.quiver, w.field, c));
    } else if (kw == "module") {
      if (!field_set) c.fail_at("module before field", kw_at);
      finish_module(lineno);
      structure_closed = true;
      ModuleSpec m;
      const std::size_t at = (c.skip_space(), c.pos);
      m.name = c.name();
      for (const auto& other : w.modules)
        if (other.name == m.name) c.fail_at("duplicate module '" + m.name + "'", at);
      c.expect("dim");
      m.dims.assign(w.quiver.vertex_count(), 0);
      std::vector<bool> seen(w.quiver.vertex_count(), false);
      while (!c.done()) {
        const std::size_t vat = c.pos;
        std::size_t v = vertex_of(w.quiver, c);
        if (seen[v]) c.fail_at("dimension given twice", vat);
        seen[v] = true;
        c.expect('=');
        std::int64_t d = c.integer();
        if (d < 0) c.fail("negative dimension");
        m.dims[v] = static_cast<std::size_t>(d);
      }
      m.matrices.assign(w.quiver.arrow_count(), Mat());
      w.modules.push_back(std::move(m));
      module = &w.modules.back();
      module_mat_set.assign(w.quiver.arrow_count(), false);
    } else if (kw == "mat") {
      if (!module) c.fail_at("mat outside a module", kw_at);
      const std::size_t at = (c.skip_space(), c.pos);
      std::string a = c.name("=");
      auto idx = w.quiver.arrow_index(a);
      if (!idx) c.fail_at("unknown arrow '" + a + "'", at);
      if (module_mat_set[*idx]) c.fail_at("matrix for " + a + " given twice", at);
      c.expect('=');
      const auto& arr = w.quiver.arrows()[*idx];
      module->matrices[*idx] = parse_matrix(c, module->dims[arr.source], module->dims[arr.target], w.field, a);
      module_mat_set[*idx] = true;
    } else if (kw == "target") {
      if (!field_set) c.fail_at("target before field", kw_at);
      finish_module(lineno);
      structure_closed = true;
      TargetSpec t;
      const std::size_t at = (c.skip_space(), c.pos);
      t.name = c.name();
      for (const auto& other : w.targets)
        if (other.name == t.name) c.fail_at("duplicate target '" + t.name + "'", at);
      if (!c.done()) c.fail("unexpected text after target name");
      w.targets.push_back(std::move(t));
      target = &w.targets.back();
    } else {
      c.fail_at("unknown keyword '" + kw + "'", kw_at);
    }
  }
  if (!header) throw WorkspaceError("missing 'galg 1' header", lineno + 1, 1);
  if (!field_set) throw WorkspaceError("missing field", lineno + 1, 1);
  if (target) throw WorkspaceError("target " + target->name + " is not closed by 'end'", lineno + 1, 1);
  finish_module(lineno + 1);
  return w;
}

Workspace load_workspace(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_workspace(ss.str());
}

namespace {

void write_quiver(std::ostream& out, const Quiver& q) {
  for (const auto& v : q.vertices()) out << "vertex " << v << "\n";
  for (const auto& a : q.arrows())
    out << "arrow " << a.name << ": " << q.vertices()[a.source] << " -> " << q.vertices()[a.target] << "\n";
}

}  // namespace

std::string serialize(const Workspace& w) {
  std::ostringstream out;
  const FieldSpec k = w.field;
  out << "galg 1\n";
  out << "field p=" << k.p() << "\n";
  write_quiver(out, w.quiver);
  for (const auto& r : w.relations) out << "relation " << to_string(r, w.quiver, k) << "\n";
  for (const auto& m : w.modules) {
    out << "module " << m.name << " dim";
    for (std::size_t v = 0; v < m.dims.size(); ++v) out << " " << w.quiver.vertices()[v] << "=" << m.dims[v];
    out << "\n";
    for (std::size_t a = 0; a < m.matrices.size(); ++a) {
      const Mat& x = m.matrices[a];
      if (x.rows() == 0 || x.cols() == 0) continue;
      out << "mat " << w.quiver.arrows()[a].name << " = [";
      for (std::size_t i = 0; i < x.rows(); ++i) {
        out << (i ? ",[" : "[");
        for (std::size_t j = 0; j < x.cols(); ++j) out << (j ? "," : "") << k.lift_signed(x(i, j));
        out << "]";
      }
      out << "]\n";
    }
  }
  for (const auto& t : w.targets) {
    out << "target " << t.name << "\n";
    write_quiver(out, t.quiver);
    for (const auto& r : t.relations) out << "relation " << to_string(r, t.quiver, k) << "\n";
    out << "end\n";
  }
  return out.str();
}

AlgebraPtr Workspace::algebra() const {
  if (!algebra_) algebra_ = build_algebra(quiver, relations, field);
  return algebra_;
}

const ModuleSpec& Workspace::module_spec(std::string_view name) const {
  for (const auto& m : modules)
    if (m.name == name) return m;
  throw std::invalid_argument("no module named '" + std::string(name) + "'");
}

Representation Workspace::module(std::string_view name) const {
  const ModuleSpec& m = module_spec(name);
  return Representation(algebra(), m.dims, m.matrices);
}

AlgebraPtr Workspace::target(std::string_view name) const {
  for (const auto& t : targets)
    if (t.name == name) return build_algebra(t.quiver, t.relations, field);
  throw std::invalid_argument("no target named '" + std::string(name) + "'");
}

}  // namespace gorelab
