#include "gorelab/path_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gorelab {

// ---------------------------------------------------------------------------
// Quiver

std::size_t Quiver::add_vertex(std::string label) {
  if (vertex_index(label)) throw std::invalid_argument("duplicate vertex label: " + label);
  vertices_.push_back(std::move(label));
  return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(std::string name, std::size_t source, std::size_t target) {
  if (source >= vertices_.size() || target >= vertices_.size())
    throw std::invalid_argument("arrow endpoint is not a declared vertex: " + name);
  if (arrow_index(name)) throw std::invalid_argument("duplicate arrow name: " + name);
  if (vertex_index(name)) throw std::invalid_argument("arrow name collides with a vertex: " + name);
  arrows_.push_back({std::move(name), source, target});
  return arrows_.size() - 1;
}

std::size_t Quiver::add_arrow(std::string name, std::string_view source, std::string_view target) {
  auto s = vertex_index(source);
  auto t = vertex_index(target);
  if (!s || !t) throw std::invalid_argument("arrow endpoint is not a declared vertex: " + name);
  return add_arrow(std::move(name), *s, *t);
}

std::optional<std::size_t> Quiver::vertex_index(std::string_view label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::arrow_index(std::string_view name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return i;
  return std::nullopt;
}

Quiver Quiver::opposite() const {
  Quiver q;
  q.vertices_ = vertices_;
  for (const auto& a : arrows_) q.arrows_.push_back({a.name, a.target, a.source});
  return q;
}

// ---------------------------------------------------------------------------
// Paths and elements

Path Path::of_arrow(const Quiver& q, std::size_t a) {
  const auto& arr = q.arrows().at(a);
  return Path{arr.source, arr.target, {static_cast<std::uint32_t>(a)}};
}

Path Path::of_arrows(const Quiver& q, std::vector<std::uint32_t> arrows) {
  if (arrows.empty()) throw std::invalid_argument("Path::of_arrows needs at least one arrow");
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (q.arrows().at(arrows[i]).target != q.arrows().at(arrows[i + 1]).source)
      throw std::invalid_argument("arrows do not compose");
  }
  Path p{q.arrows().at(arrows.front()).source, q.arrows().at(arrows.back()).target, std::move(arrows)};
  return p;
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.arrows.size() <=> b.arrows.size(); c != 0) return c;
  if (a.arrows.empty()) return a.source <=> b.source;
  return std::lexicographical_compare_three_way(a.arrows.begin(), a.arrows.end(), b.arrows.begin(),
                                                b.arrows.end());
}

std::optional<Path> concat(const Path& a, const Path& b) {
  if (a.target != b.source) return std::nullopt;
  Path out{a.source, b.target, a.arrows};
  out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
  return out;
}

std::string to_string(const Path& p, const Quiver& q) {
  if (p.is_trivial()) return "e_" + q.vertices()[p.source];
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '*';
    s += q.arrows()[p.arrows[i]].name;
  }
  return s;
}

AlgElement make_element(const Path& p, std::uint32_t c) {
  AlgElement x;
  if (c != 0) x.terms.emplace(p, c);
  return x;
}

void add_term(AlgElement& x, const Path& p, std::uint32_t c, FieldSpec k) {
  if (c == 0) return;
  auto [it, inserted] = x.terms.try_emplace(p, c);
  if (!inserted) {
    it->second = k.add(it->second, c);
    if (it->second == 0) x.terms.erase(it);
  }
}

AlgElement add(const AlgElement& a, const AlgElement& b, FieldSpec k) {
  AlgElement out = a;
  for (const auto& [p, c] : b.terms) add_term(out, p, c, k);
  return out;
}

AlgElement scale(const AlgElement& a, std::uint32_t c, FieldSpec k) {
  AlgElement out;
  if (c == 0) return out;
  for (const auto& [p, d] : a.terms) out.terms.emplace(p, k.mul(c, d));
  return out;
}

AlgElement multiply(const AlgElement& a, const AlgElement& b, FieldSpec k) {
  AlgElement out;
  for (const auto& [p, c] : a.terms) {
    for (const auto& [q, d] : b.terms) {
      if (auto pq = concat(p, q)) add_term(out, *pq, k.mul(c, d), k);
    }
  }
  return out;
}

AlgElement multiply(const Path& u, const AlgElement& a, const Path& w, FieldSpec k) {
  AlgElement out;
  for (const auto& [p, c] : a.terms) {
    auto up = concat(u, p);
    if (!up) continue;
    if (auto upw = concat(*up, w)) add_term(out, *upw, c, k);
  }
  return out;
}

AlgElement reversed(const AlgElement& a, const Quiver& opposite) {
  AlgElement out;
  for (const auto& [p, c] : a.terms) {
    if (p.is_trivial()) {
      out.terms.emplace(p, c);
      continue;
    }
    std::vector<std::uint32_t> arr(p.arrows.rbegin(), p.arrows.rend());
    out.terms.emplace(Path::of_arrows(opposite, std::move(arr)), c);
  }
  return out;
}

std::string to_string(const AlgElement& a, const Quiver& q, FieldSpec k) {
  if (a.is_zero()) return "0";
  std::string s;
  bool first = true;
  // Largest term first, matching the order relations are usually written in.
  for (auto it = a.terms.rbegin(); it != a.terms.rend(); ++it) {
    std::int64_t c = k.lift_signed(it->second);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) s += std::to_string(mag) + "*";
    s += to_string(it->first, q);
    first = false;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Relation parsing

AlgElement parse_relation(std::string_view text, const Quiver& q, FieldSpec k) {
  AlgElement out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) -> RelationSyntaxError {
    return RelationSyntaxError(msg + " at column " + std::to_string(i + 1), i + 1);
  };
  auto read_ident = [&]() -> std::string {
    const std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' ||
                               text[i] == '\'' || text[i] == '.'))
      ++i;
    return std::string(text.substr(start, i - start));
  };

  skip_ws();
  if (i >= text.size()) throw fail("empty relation");
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    std::int64_t sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    std::int64_t coeff = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::int64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = (v * 10 + (text[i] - '0')) % static_cast<std::int64_t>(k.p());
        ++i;
      }
      coeff = v;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      } else {
        throw fail("expected '*' after coefficient");
      }
    }
    std::vector<std::uint32_t> arrows;
    std::optional<Path> trivial;
    while (true) {
      skip_ws();
      const std::size_t col = i;
      std::string name = read_ident();
      if (name.empty()) throw fail("expected arrow name");
      if (auto a = q.arrow_index(name)) {
        if (trivial) throw RelationSyntaxError("trivial path cannot be multiplied at column " + std::to_string(col + 1), col + 1);
        arrows.push_back(static_cast<std::uint32_t>(*a));
      } else if (name.size() > 2 && name.starts_with("e_") && q.vertex_index(name.substr(2))) {
        if (!arrows.empty() || trivial) throw RelationSyntaxError("trivial path inside a product at column " + std::to_string(col + 1), col + 1);
        trivial = Path::trivial(*q.vertex_index(name.substr(2)));
      } else {
        throw RelationSyntaxError("unknown arrow '" + name + "' at column " + std::to_string(col + 1), col + 1);
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    Path p;
    if (trivial) {
      p = *trivial;
    } else {
      try {
        p = Path::of_arrows(q, arrows);
      } catch (const std::invalid_argument&) {
        throw fail("arrows do not compose in term ending");
      }
    }
    add_term(out, p, k.reduce(sign * coeff), k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Algebra construction

namespace {

// Position of `needle` as a contiguous subword of `hay`, if any.
std::optional<std::size_t> find_subword(const std::vector<std::uint32_t>& hay,
                                        const std::vector<std::uint32_t>& needle) {
  if (needle.size() > hay.size()) return std::nullopt;
  auto it = std::search(hay.begin(), hay.end(), needle.begin(), needle.end());
  if (it == hay.end()) return std::nullopt;
  return static_cast<std::size_t>(it - hay.begin());
}

Path subpath(const Quiver& q, const Path& p, std::size_t from, std::size_t len) {
  if (len == 0) {
    const std::size_t v = from == 0 ? p.source : q.arrows()[p.arrows[from - 1]].target;
    return Path::trivial(v);
  }
  std::vector<std::uint32_t> arr(p.arrows.begin() + static_cast<std::ptrdiff_t>(from),
                                 p.arrows.begin() + static_cast<std::ptrdiff_t>(from + len));
  return Path::of_arrows(q, std::move(arr));
}

AlgElement monic(const AlgElement& x, FieldSpec k) {
  return scale(x, k.inv(x.leading_coefficient()), k);
}

}  // namespace

AlgElement Algebra::reduce(const AlgElement& x, const std::vector<AlgElement>& g) const {
  const FieldSpec k = field_;
  AlgElement work = x;
  AlgElement result;
  while (!work.terms.empty()) {
    auto top = std::prev(work.terms.end());
    const Path t = top->first;
    const std::uint32_t c = top->second;
    work.terms.erase(top);
    bool reduced = false;
    for (const auto& rel : g) {
      const Path& lt = rel.leading_path();
      auto pos = find_subword(t.arrows, lt.arrows);
      if (!pos) continue;
      const Path u = subpath(quiver_, t, 0, *pos);
      const Path w = subpath(quiver_, t, *pos + lt.length(), t.length() - *pos - lt.length());
      // t = u*lt*w and rel is monic: t == -(u * tail * w) modulo the ideal.
      for (auto it = rel.terms.begin(); it != std::prev(rel.terms.end()); ++it) {
        auto up = concat(u, it->first);
        if (!up) continue;
        auto upw = concat(*up, w);
        if (!upw) continue;
        add_term(work, *upw, k.neg(k.mul(c, it->second)), k);
      }
      reduced = true;
      break;
    }
    if (!reduced) add_term(result, t, c, k);
  }
  return result;
}

void Algebra::compute_groebner() {
  const FieldSpec k = field_;
  const std::size_t overlap_limit = 2 * degree_cap_ + 2;
  const std::size_t element_limit = 20000;

  std::vector<AlgElement> queue;
  for (const auto& r : relations_)
    if (!r.is_zero()) queue.push_back(r);
  std::vector<AlgElement> g;

  auto push_overlaps = [&](const AlgElement& f, const AlgElement& h) {
    const auto& s = f.leading_path().arrows;
    const auto& t = h.leading_path().arrows;
    const std::size_t max_k = std::min(s.size(), t.size());
    for (std::size_t ov = 1; ov < max_k; ++ov) {
      if (!std::equal(s.end() - static_cast<std::ptrdiff_t>(ov), s.end(), t.begin())) continue;
      if (s.size() + t.size() - ov > overlap_limit) {
        throw NotFiniteDimensionalWithinCap("overlap word length exceeds degree cap " +
                                            std::to_string(degree_cap_));
      }
      const Path t_rest = subpath(quiver_, h.leading_path(), ov, t.size() - ov);
      const Path s_head = subpath(quiver_, f.leading_path(), 0, s.size() - ov);
      const Path triv_s = Path::trivial(f.leading_path().source);
      const Path triv_t = Path::trivial(h.leading_path().target);
      AlgElement spoly = add(gorelab::multiply(triv_s, f, t_rest, k),
                             scale(gorelab::multiply(s_head, h, triv_t, k), k.neg(1), k), k);
      if (!spoly.is_zero()) queue.push_back(std::move(spoly));
    }
  };

  auto run = [&] {
    while (!queue.empty()) {
      auto smallest = std::min_element(queue.begin(), queue.end(), [](const AlgElement& a, const AlgElement& b) {
        return a.leading_path() < b.leading_path();
      });
      AlgElement f = std::move(*smallest);
      queue.erase(smallest);
      f = reduce(f, g);
      if (f.is_zero()) continue;
      f = monic(f, k);
      if (f.leading_path().length() > degree_cap_ + 1) {
        throw NotFiniteDimensionalWithinCap("Groebner basis element of length " +
                                            std::to_string(f.leading_path().length()) +
                                            " exceeds degree cap " + std::to_string(degree_cap_));
      }
      for (auto it = g.begin(); it != g.end();) {
        if (find_subword(it->leading_path().arrows, f.leading_path().arrows)) {
          queue.push_back(std::move(*it));
          it = g.erase(it);
        } else {
          ++it;
        }
      }
      g.push_back(f);
      if (g.size() > element_limit) throw NotFiniteDimensionalWithinCap("Groebner basis too large");
      for (const auto& h : g) {
        push_overlaps(f, h);
        if (&h != &g.back()) push_overlaps(h, f);
      }
    }
  };

  // Buchberger completion, then a verification sweep that re-queues any overlap
  // which fails to reduce to zero.
  while (true) {
    run();
    for (auto& h : g) {
      AlgElement lead = make_element(h.leading_path(), 1);
      AlgElement tail = add(h, scale(lead, k.neg(1), k), k);
      std::vector<AlgElement> others;
      for (const auto& o : g)
        if (&o != &h) others.push_back(o);
      h = add(lead, reduce(tail, others), k);
    }
    for (const auto& f : g)
      for (const auto& h : g) push_overlaps(f, h);
    std::vector<AlgElement> pending;
    for (auto& sp : queue) {
      AlgElement r = reduce(sp, g);
      if (!r.is_zero()) pending.push_back(std::move(r));
    }
    queue = std::move(pending);
    if (queue.empty()) break;
  }
  std::sort(g.begin(), g.end(),
            [](const AlgElement& a, const AlgElement& b) { return a.leading_path() < b.leading_path(); });
  groebner_ = std::move(g);
}

void Algebra::enumerate_basis() {
  std::vector<Path> frontier;
  for (std::size_t v = 0; v < quiver_.vertex_count(); ++v) frontier.push_back(Path::trivial(v));
  basis_ = frontier;
  std::size_t length = 0;
  while (!frontier.empty()) {
    ++length;
    if (length > degree_cap_) {
      throw NotFiniteDimensionalWithinCap("normal-form paths persist beyond degree cap " +
                                          std::to_string(degree_cap_));
    }
    std::vector<Path> next;
    for (const auto& w : frontier) {
      for (std::size_t a = 0; a < quiver_.arrow_count(); ++a) {
        if (quiver_.arrows()[a].source != w.target) continue;
        Path ext = *concat(w, Path::of_arrow(quiver_, a));
        bool normal = true;
        for (const auto& rel : groebner_) {
          const auto& lt = rel.leading_path().arrows;
          if (lt.size() <= ext.arrows.size() &&
              std::equal(lt.begin(), lt.end(), ext.arrows.end() - static_cast<std::ptrdiff_t>(lt.size()))) {
            normal = false;
            break;
          }
        }
        if (normal) next.push_back(std::move(ext));
      }
    }
    basis_.insert(basis_.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(basis_.begin(), basis_.end());
  index_.clear();
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  const std::size_t n = quiver_.vertex_count();
  between_.assign(n * n, {});
  for (std::size_t i = 0; i < basis_.size(); ++i) between_[basis_[i].source * n + basis_[i].target].push_back(i);
}

void Algebra::build_tables() {
  const std::size_t d = basis_.size();
  table_.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      auto pq = concat(basis_[i], basis_[j]);
      if (!pq) continue;
      AlgElement nf = normal_form(make_element(*pq));
      SparseVec sv;
      for (const auto& [p, c] : nf.terms) sv.emplace_back(static_cast<std::uint32_t>(index_.at(p)), c);
      table_[i * d + j] = std::move(sv);
    }
  }
}

void Algebra::compute_radical_layers() {
  const std::size_t d = basis_.size();
  Mat current(0, d, field_);
  for (std::size_t i = 0; i < d; ++i) {
    if (basis_[i].is_trivial()) continue;
    std::vector<std::uint32_t> e(d, 0);
    e[i] = 1;
    current.append_row(e);
  }
  layers_.assign(1, d - current.rows());
  std::size_t prev_dim = current.rows();
  std::size_t power = 1;
  while (current.rows() > 0) {
    Mat next(0, d, field_);
    for (std::size_t r = 0; r < current.rows(); ++r) {
      for (std::size_t a = 0; a < quiver_.arrow_count(); ++a) {
        std::vector<std::uint32_t> ea(d, 0);
        ea[arrow_index_in_basis(a)] = 1;
        auto prod = multiply(current.row(r), ea);
        if (std::any_of(prod.begin(), prod.end(), [](std::uint32_t x) { return x != 0; })) next.append_row(prod);
      }
    }
    next = next.rows() ? row_space(next) : next;
    ++power;
    if (next.rows() == prev_dim) {
      throw NotFiniteDimensionalWithinCap("arrow ideal is not nilpotent modulo the relations");
    }
    if (power > degree_cap_ + 1) {
      throw NotFiniteDimensionalWithinCap("no arrow-ideal power vanishes within degree cap " +
                                          std::to_string(degree_cap_));
    }
    layers_.push_back(prev_dim - next.rows());
    prev_dim = next.rows();
    current = std::move(next);
  }
  nilpotency_ = power;
}

std::shared_ptr<const Algebra> Algebra::build(Quiver quiver, std::vector<AlgElement> relations, FieldSpec field,
                                              std::size_t degree_cap) {
  if (degree_cap < 2) throw std::invalid_argument("degree_cap must be at least 2");
  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->quiver_ = std::move(quiver);
  alg->field_ = field;
  alg->degree_cap_ = degree_cap;
  for (std::size_t r = 0; r < relations.size(); ++r) {
    const auto& rel = relations[r];
    if (rel.is_zero()) continue;
    const Path& first = rel.terms.begin()->first;
    for (const auto& [p, c] : rel.terms) {
      if (p.length() < 2) {
        throw NonAdmissibleRelation("relation " + std::to_string(r + 1) + " has a term of length < 2: " +
                                    to_string(p, alg->quiver_));
      }
      if (p.source != first.source || p.target != first.target) {
        throw NonAdmissibleRelation("relation " + std::to_string(r + 1) + " is not a sum of parallel paths");
      }
      if (c >= field.p()) throw NonAdmissibleRelation("coefficient not reduced mod p");
    }
  }
  alg->relations_ = std::move(relations);
  alg->compute_groebner();
  alg->enumerate_basis();
  alg->build_tables();
  alg->compute_radical_layers();
  return alg;
}

std::optional<std::size_t> Algebra::basis_index(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Algebra::arrow_index_in_basis(std::size_t a) const {
  return index_.at(Path::of_arrow(quiver_, a));
}

AlgElement Algebra::normal_form(const AlgElement& x) const {
  for (const auto& [p, c] : x.terms) {
    if (c >= field_.p()) throw std::invalid_argument("normal_form: coefficient not reduced");
  }
  return reduce(x, groebner_);
}

std::vector<std::uint32_t> Algebra::coordinates(const AlgElement& x) const {
  AlgElement nf = normal_form(x);
  std::vector<std::uint32_t> v(basis_.size(), 0);
  for (const auto& [p, c] : nf.terms) v[index_.at(p)] = c;
  return v;
}

AlgElement Algebra::element(std::span<const std::uint32_t> coords) const {
  AlgElement x;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) x.terms.emplace(basis_[i], coords[i]);
  return x;
}

std::vector<std::uint32_t> Algebra::multiply(std::span<const std::uint32_t> a,
                                             std::span<const std::uint32_t> b) const {
  const std::size_t d = basis_.size();
  std::vector<std::uint32_t> out(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      const std::uint32_t c = field_.mul(a[i], b[j]);
      for (const auto& [idx, v] : product(i, j)) out[idx] = field_.add(out[idx], field_.mul(c, v));
    }
  }
  return out;
}

bool Algebra::is_monomial() const {
  return std::all_of(groebner_.begin(), groebner_.end(), [](const AlgElement& g) { return g.terms.size() == 1; });
}

std::shared_ptr<const Algebra> Algebra::opposite() const {
  if (auto origin = origin_.lock()) return origin;
  std::call_once(opposite_once_, [this] {
    Quiver oq = quiver_.opposite();
    std::vector<AlgElement> rels;
    for (const auto& r : relations_) rels.push_back(reversed(r, oq));
    auto op = std::const_pointer_cast<Algebra>(build(std::move(oq), std::move(rels), field_, degree_cap_));
    op->origin_ = shared_from_this();
    opposite_ = std::move(op);
  });
  return opposite_;
}

}  // namespace gorelab
