#include "gorelab/presenter.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace gorelab {

namespace {

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

// Row basis of e S f for a subspace S given by rows.
Mat corner(const AbstractAlgebra& c, const Vec& e, const Mat& s, const Vec& f) {
  Mat out(0, c.dim(), c.field());
  for (std::size_t r = 0; r < s.rows(); ++r) {
    Vec x = c.multiply(c.multiply(e, s.row(r)), f);
    if (!is_zero_vec(x)) out.append_row(x);
  }
  return out.rows() ? row_space(out) : out;
}

std::size_t stacked_rank(const Mat& a, const Mat& b) {
  if (a.rows() == 0) return b.rows() ? rank(b) : 0;
  if (b.rows() == 0) return rank(a);
  return rank(a.vstack(b));
}

// All paths of the given length from v, in arrow order.
void paths_of_length(const Quiver& q, std::size_t len, std::vector<Path>& out) {
  std::function<void(Path&)> grow = [&](Path& p) {
    if (p.length() == len) {
      out.push_back(p);
      return;
    }
    for (std::uint32_t a = 0; a < q.arrow_count(); ++a) {
      if (q.arrows()[a].source != p.target) continue;
      Path next = p;
      next.arrows.push_back(a);
      next.target = q.arrows()[a].target;
      grow(next);
    }
  };
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Path p = Path::trivial(v);
    grow(p);
  }
}

Vec evaluate_path(const AbstractAlgebra& c, const Path& p, const std::vector<Vec>& vertex_images,
                  const std::vector<Vec>& arrow_images) {
  if (p.is_trivial()) return vertex_images[p.source];
  Vec x = arrow_images[p.arrows[0]];
  for (std::size_t i = 1; i < p.arrows.size() && !is_zero_vec(x); ++i) x = c.multiply(x, arrow_images[p.arrows[i]]);
  return x;
}

std::size_t max_length(const AlgElement& x) {
  std::size_t m = 0;
  for (const auto& [p, coeff] : x.terms) m = std::max(m, p.length());
  return m;
}

}  // namespace

Vec evaluate(const AbstractAlgebra& c, const AlgElement& x, const std::vector<Vec>& vertex_images,
             const std::vector<Vec>& arrow_images) {
  const FieldSpec k = c.field();
  Vec acc(c.dim(), 0);
  for (const auto& [p, coeff] : x.terms) {
    Vec y = evaluate_path(c, p, vertex_images, arrow_images);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = k.add(acc[i], k.mul(coeff, y[i]));
  }
  return acc;
}

AbstractAlgebra as_abstract(const Algebra& a) {
  const std::size_t d = a.dim();
  std::vector<Mat> right;
  for (std::size_t j = 0; j < d; ++j) {
    Mat r(d, d, a.field());
    for (std::size_t i = 0; i < d; ++i)
      for (const auto& [idx, coeff] : a.product(i, j)) r(i, idx) = coeff;
    right.push_back(std::move(r));
  }
  Vec unit(d, 0);
  for (std::size_t v = 0; v < a.quiver().vertex_count(); ++v) unit[a.vertex_index_in_basis(v)] = 1;
  return AbstractAlgebra(a.field(), std::move(right), std::move(unit));
}

QuiverPresentation quiver_presentation(const AbstractAlgebra& c, std::uint64_t seed) {
  const FieldSpec k = c.field();
  QuiverPresentation pres;
  pres.idempotents = primitive_idempotents(c, seed);
  const std::size_t n = pres.idempotents.size();
  Mat rad = jacobson_radical(c);
  if (c.dim() - rad.rows() != n) throw NotBasic();
  Mat rad2 = product_space(c, rad, rad);

  for (std::size_t v = 0; v < n; ++v) pres.quiver.add_vertex(std::to_string(v + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat layer = corner(c, pres.idempotents[i], rad, pres.idempotents[j]);
      Mat below = corner(c, pres.idempotents[i], rad2, pres.idempotents[j]);
      Mat chosen = below;
      for (std::size_t r = 0; r < layer.rows(); ++r) {
        Mat trial = chosen.rows() ? chosen.vstack(Mat::row_vector(layer.row(r), k)) : Mat::row_vector(layer.row(r), k);
        if (rank(trial) == chosen.rows() + 1) {
          chosen = trial;
          pres.quiver.add_arrow("a" + std::to_string(pres.arrow_images.size() + 1), i, j);
          pres.arrow_images.emplace_back(layer.row(r).begin(), layer.row(r).end());
        }
      }
    }

  // rad^N = 0, so every path of length N maps to zero
  const std::size_t nil = radical_layers(c).size();
  const Quiver& q = pres.quiver;
  std::vector<std::vector<Path>> by_len(nil + 1);
  for (std::size_t len = 0; len <= nil; ++len) paths_of_length(q, len, by_len[len]);

  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      std::vector<Path> space;
      for (std::size_t d = 2; d <= nil; ++d) {
        for (const auto& p : by_len[d])
          if (p.source == s && p.target == t) space.push_back(p);
        if (space.empty()) continue;
        std::map<Path, std::size_t> pos;
        for (std::size_t i = 0; i < space.size(); ++i) pos[space[i]] = i;
        Mat eval(0, c.dim(), k);
        for (const auto& p : space) eval.append_row(evaluate_path(c, p, pres.idempotents, pres.arrow_images));
        Mat kernel = kernel_basis(eval);
        // consequences u r w of relations already chosen that stay within length d
        Mat known(0, space.size(), k);
        for (const auto& r : pres.relations) {
          const Path& lead = r.terms.begin()->first;
          if (max_length(r) > d) continue;
          const std::size_t slack = d - max_length(r);
          for (std::size_t lu = 0; lu <= slack; ++lu)
            for (const auto& u : by_len[lu]) {
              if (u.source != s || u.target != lead.source) continue;
              for (std::size_t lw = 0; lu + lw <= slack; ++lw)
                for (const auto& w : by_len[lw]) {
                  if (w.source != lead.target || w.target != t) continue;
                  AlgElement x = multiply(u, r, w, k);
                  if (x.is_zero()) continue;
                  std::vector<std::uint32_t> row(space.size(), 0);
                  for (const auto& [p, coeff] : x.terms) row[pos.at(p)] = coeff;
                  known.append_row(row);
                }
            }
        }
        std::size_t have = known.rows() ? rank(known) : 0;
        for (std::size_t r = 0; r < kernel.rows(); ++r) {
          Mat trial = known.rows() ? known.vstack(Mat::row_vector(kernel.row(r), k))
                                   : Mat::row_vector(kernel.row(r), k);
          if (rank(trial) == have + 1) {
            known = trial;
            ++have;
            AlgElement rel;
            for (std::size_t i = 0; i < space.size(); ++i) add_term(rel, space[i], kernel(r, i), k);
            pres.relations.push_back(std::move(rel));
          }
        }
      }
    }

  pres.rebuilt = build_algebra(pres.quiver, pres.relations, k);
  if (pres.rebuilt->dim() != c.dim()) throw std::logic_error("presentation does not recover the algebra dimension");
  return pres;
}

bool verify_witness(const AbstractAlgebra& c, const AlgebraPtr& target, const PresentationWitness& w) {
  if (target->dim() != c.dim()) return false;
  const auto& vertex_images = w.vertex_images;
  Vec sum(c.dim(), 0);
  for (const auto& e : vertex_images) {
    if (c.multiply(e, e) != e) return false;
    sum = c.add(sum, e);
  }
  if (sum != c.unit()) return false;
  for (const auto& r : target->relations())
    if (!is_zero_vec(evaluate(c, r, vertex_images, w.arrow_images))) return false;
  // images of the basis paths of the target span c
  Mat span(0, c.dim(), c.field());
  for (const auto& p : target->basis()) span.append_row(evaluate_path(c, p, vertex_images, w.arrow_images));
  return rank(span) == c.dim();
}

MatchResult find_presentation_match(const AbstractAlgebra& c, const AlgebraPtr& target, std::uint64_t budget,
                                    std::uint64_t seed) {
  const FieldSpec k = c.field();
  if (target->field() != k) throw std::invalid_argument("target is over a different field");
  QuiverPresentation pres = quiver_presentation(c, seed);
  const Quiver& tq = target->quiver();
  const std::size_t n = pres.idempotents.size();
  if (tq.vertex_count() != n || tq.arrow_count() != pres.quiver.arrow_count())
    throw std::invalid_argument("target quiver has a different shape from the presentation");

  MatchResult result;
  if (target->dim() != c.dim()) {
    result.exhaustive = true;
    result.reason = "dimension mismatch";
    return result;
  }
  Mat rad = jacobson_radical(c);
  Mat rad2 = product_space(c, rad, rad);
  const std::size_t m = tq.arrow_count();

  // relation r is checked once its last arrow is assigned
  std::vector<std::vector<std::size_t>> check_at(m);
  for (std::size_t r = 0; r < target->relations().size(); ++r) {
    std::size_t last = 0;
    for (const auto& [p, coeff] : target->relations()[r].terms)
      for (auto a : p.arrows) last = std::max<std::size_t>(last, a);
    if (m) check_at[last].push_back(r);
  }

  struct Plan {
    std::vector<std::size_t> perm;
    std::vector<Mat> spaces;  // per target arrow, basis of e rad f
    double size = 1;
  };
  std::vector<Plan> plans;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Plan pl;
    pl.perm = perm;
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a) {
      const auto& arr = tq.arrows()[a];
      std::size_t want = 0;
      for (const auto& b : pres.quiver.arrows())
        if (b.source == perm[arr.source] && b.target == perm[arr.target]) ++want;
      std::size_t have = 0;
      for (const auto& b : tq.arrows())
        if (b.source == arr.source && b.target == arr.target) ++have;
      if (want != have) ok = false;
      Mat sp = corner(c, pres.idempotents[perm[arr.source]], rad, pres.idempotents[perm[arr.target]]);
      pl.size *= std::pow(static_cast<double>(k.p()), static_cast<double>(sp.rows()));
      pl.spaces.push_back(std::move(sp));
    }
    if (ok) plans.push_back(std::move(pl));
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (const auto& pl : plans) result.space += pl.size;

  auto combine = [&](const Mat& basis, std::span<const std::uint32_t> coeffs) {
    Vec x(c.dim(), 0);
    for (std::size_t r = 0; r < basis.rows(); ++r)
      for (std::size_t i = 0; coeffs[r] && i < x.size(); ++i) x[i] = k.add(x[i], k.mul(coeffs[r], basis(r, i)));
    return x;
  };
  auto vertex_images = [&](const Plan& pl) {
    std::vector<Vec> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(pres.idempotents[pl.perm[i]]);
    return v;
  };
  auto spans_top = [&](const std::vector<Vec>& images) {
    Mat top(0, c.dim(), k);
    for (const auto& x : images) top.append_row(x);
    return stacked_rank(rad2, top) == rad2.rows() + m;
  };
  auto relations_hold = [&](const std::vector<Vec>& vimg, const std::vector<Vec>& images, std::size_t level) {
    for (std::size_t r : check_at[level])
      if (!is_zero_vec(evaluate(c, target->relations()[r], vimg, images))) return false;
    return true;
  };

  if (result.space <= static_cast<double>(budget)) {
    result.exhaustive = true;
    for (const auto& pl : plans) {
      auto vimg = vertex_images(pl);
      std::vector<Vec> images(m);
      std::function<bool(std::size_t)> search = [&](std::size_t a) -> bool {
        if (a == m) {
          ++result.tried;
          return spans_top(images);
        }
        const Mat& sp = pl.spaces[a];
        std::vector<std::uint32_t> coeffs(sp.rows(), 0);
        while (true) {
          images[a] = combine(sp, coeffs);
          if (relations_hold(vimg, images, a) && search(a + 1)) return true;
          std::size_t i = 0;
          while (i < coeffs.size() && ++coeffs[i] == k.p()) coeffs[i++] = 0;
          if (i == coeffs.size()) break;
        }
        return false;
      };
      if (m == 0 ? spans_top(images) : search(0)) {
        result.witness = PresentationWitness{pl.perm, vertex_images(pl), images};
        break;
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    for (; result.tried < budget && !plans.empty(); ++result.tried) {
      const Plan& pl = plans[rng() % plans.size()];
      auto vimg = vertex_images(pl);
      std::vector<Vec> images(m);
      bool ok = true;
      for (std::size_t a = 0; a < m && ok; ++a) {
        std::vector<std::uint32_t> coeffs(pl.spaces[a].rows());
        for (auto& x : coeffs) x = static_cast<std::uint32_t>(rng() % k.p());
        images[a] = combine(pl.spaces[a], coeffs);
        ok = relations_hold(vimg, images, a);
      }
      if (ok && spans_top(images)) {
        result.witness = PresentationWitness{pl.perm, vertex_images(pl), images};
        ++result.tried;
        break;
      }
    }
    if (!result.witness) throw SearchBudgetExceeded(result.tried, static_cast<double>(result.tried) / result.space);
  }
  if (result.witness && !verify_witness(c, target, *result.witness))
    throw std::logic_error("presentation witness failed verification");
  if (!result.witness) result.reason = "no assignment satisfies the relations";
  return result;
}

}  // namespace gorelab
