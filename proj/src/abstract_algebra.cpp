#include "gorelab/abstract_algebra.hpp"

#include <random>

#include "gorelab/polynomial.hpp"

namespace gorelab {

AbstractAlgebra::AbstractAlgebra(FieldSpec field, std::vector<Mat> right, Vec unit)
    : field_(field), right_(std::move(right)), unit_(std::move(unit)) {
  const std::size_t d = right_.size();
  if (unit_.size() != d) throw DimensionMismatch("unit has wrong length");
  for (const auto& m : right_)
    if (m.rows() != d || m.cols() != d) throw DimensionMismatch("structure matrix has wrong shape");
}

Vec AbstractAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim(), 0);
  v[i] = 1;
  return v;
}

Vec AbstractAlgebra::multiply(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) const {
  const std::size_t d = dim();
  std::vector<std::uint64_t> acc(d, 0);
  const std::uint64_t p = field_.p();
  for (std::size_t j = 0; j < d; ++j) {
    if (!y[j]) continue;
    const Mat& r = right_[j];
    for (std::size_t i = 0; i < d; ++i) {
      if (!x[i]) continue;
      const std::uint64_t c = std::uint64_t{x[i]} * y[j] % p;
      auto row = r.row(i);
      for (std::size_t k = 0; k < d; ++k)
        if (row[k]) acc[k] = (acc[k] + c * row[k]) % p;
    }
  }
  return Vec(acc.begin(), acc.end());
}

Vec AbstractAlgebra::add(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) const {
  Vec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = field_.add(x[i], y[i]);
  return out;
}

Vec AbstractAlgebra::scaled(std::span<const std::uint32_t> x, std::uint32_t c) const {
  Vec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = field_.mul(x[i], c);
  return out;
}

Vec AbstractAlgebra::power(std::span<const std::uint32_t> x, std::uint64_t e) const {
  Vec result = unit_;
  Vec base(x.begin(), x.end());
  while (e) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return result;
}

Mat AbstractAlgebra::right_matrix(std::span<const std::uint32_t> x) const {
  Mat out(dim(), dim(), field_);
  for (std::size_t j = 0; j < dim(); ++j)
    if (x[j]) out = out + right_[j].scaled(x[j]);
  return out;
}

Mat AbstractAlgebra::left_matrix(std::span<const std::uint32_t> x) const {
  Mat out(dim(), dim(), field_);
  Mat xr = Mat::row_vector(x, field_);
  for (std::size_t j = 0; j < dim(); ++j) {
    Mat r = xr * right_[j];
    std::copy(r.row(0).begin(), r.row(0).end(), out.row(j).begin());
  }
  return out;
}

bool AbstractAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j) {
      auto a = right_[j].row(i);
      auto b = right_[i].row(j);
      if (!std::equal(a.begin(), a.end(), b.begin())) return false;
    }
  return true;
}

bool AbstractAlgebra::check_axioms() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i) {
    Vec ei = basis_vector(i);
    if (multiply(unit_, ei) != ei || multiply(ei, unit_) != ei) return false;
    for (std::size_t j = 0; j < d; ++j) {
      Vec ij = multiply(ei, basis_vector(j));
      for (std::size_t k = 0; k < d; ++k) {
        Vec ek = basis_vector(k);
        if (multiply(ij, ek) != multiply(ei, multiply(basis_vector(j), ek))) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Radical

namespace {

using IMat = std::vector<std::uint64_t>;

IMat imul(const IMat& a, const IMat& b, std::size_t n, std::uint64_t m) {
  IMat c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t x = a[i * n + k];
      if (!x) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t y = b[k * n + j];
        if (y) c[i * n + j] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y + c[i * n + j]) % m);
      }
    }
  return c;
}

// Trace of lift(x)^e modulo m.
std::uint64_t lifted_power_trace(const Mat& x, std::uint64_t e, std::uint64_t m) {
  const std::size_t n = x.rows();
  IMat base(x.data().begin(), x.data().end());
  IMat result(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) result[i * n + i] = 1 % m;
  while (e) {
    if (e & 1) result = imul(result, base, n, m);
    e >>= 1;
    if (e) base = imul(base, base, n, m);
  }
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < n; ++i) t = (t + result[i * n + i]) % m;
  return t;
}

bool ideal_is_nilpotent(const AbstractAlgebra& a, const Mat& ideal) {
  Mat power = ideal;
  for (std::size_t k = 0; k <= a.dim() && power.rows(); ++k) {
    Mat next = product_space(a, power, ideal);
    if (next.rows() == power.rows()) return false;
    power = next;
  }
  return power.rows() == 0;
}

}  // namespace

Mat product_space(const AbstractAlgebra& a, const Mat& i, const Mat& j) {
  Mat span(0, a.dim(), a.field());
  for (std::size_t r = 0; r < i.rows(); ++r)
    for (std::size_t s = 0; s < j.rows(); ++s) {
      Vec x = a.multiply(i.row(r), j.row(s));
      if (std::any_of(x.begin(), x.end(), [](std::uint32_t c) { return c != 0; })) span.append_row(x);
    }
  return span.rows() ? row_space(span) : span;
}

Mat jacobson_radical(const AbstractAlgebra& a) {
  const std::size_t d = a.dim();
  const FieldSpec k = a.field();
  if (d == 0) return Mat(0, 0, k);
  const std::uint64_t p = k.p();
  std::size_t l = 0;
  for (std::uint64_t q = p; q <= d; q *= p) ++l;

  std::vector<std::uint32_t> traces(d);
  for (std::size_t j = 0; j < d; ++j) {
    Mat r = a.right_matrix(a.basis_vector(j));
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < d; ++i) t += r(i, i);
    traces[j] = static_cast<std::uint32_t>(t % p);
  }

  Mat ideal = Mat::identity(d, k);
  std::uint64_t pi = 1;  // p^i
  for (std::size_t i = 0; i <= l; ++i) {
    if (i > 0 && ideal_is_nilpotent(a, ideal)) break;
    const std::uint64_t m = pi * p;
    Mat g(ideal.rows(), d, k);
    for (std::size_t r = 0; r < ideal.rows(); ++r)
      for (std::size_t j = 0; j < d; ++j) {
        Vec x = a.multiply(ideal.row(r), a.basis_vector(j));
        if (i == 0) {
          std::uint64_t t = 0;
          for (std::size_t c = 0; c < d; ++c) t = (t + std::uint64_t{x[c]} * traces[c]) % p;
          g(r, j) = static_cast<std::uint32_t>(t);
        } else {
          g(r, j) = static_cast<std::uint32_t>(lifted_power_trace(a.right_matrix(x), pi, m) / pi);
        }
      }
    Mat ker = kernel_basis(g);
    if (ker.rows() == 0) return Mat(0, d, k);
    ideal = row_space(ker * ideal);
    pi *= p;
  }
  return ideal;
}

std::vector<std::size_t> radical_layers(const AbstractAlgebra& a) {
  std::vector<std::size_t> layers;
  Mat rad = jacobson_radical(a);
  Mat power = Mat::identity(a.dim(), a.field());
  while (power.rows()) {
    Mat next = product_space(a, power, rad);
    layers.push_back(power.rows() - next.rows());
    power = next;
  }
  return layers;
}

// ---------------------------------------------------------------------------
// Quotients and corners

Vec QuotientAlgebra::project(std::span<const std::uint32_t> x) const {
  Vec r = ideal.dim() ? ideal.reduce(x) : Vec(x.begin(), x.end());
  Vec out(complement.size());
  for (std::size_t i = 0; i < complement.size(); ++i) out[i] = r[complement[i]];
  return out;
}

QuotientAlgebra quotient_algebra(const AbstractAlgebra& a, const Mat& ideal) {
  const std::size_t d = a.dim();
  const FieldSpec k = a.field();
  QuotientAlgebra q;
  if (ideal.rows()) q.ideal = RowSpaceSolver(ideal);
  std::vector<bool> piv(d, false);
  if (ideal.rows())
    for (auto c : q.ideal.pivots()) piv[c] = true;
  for (std::size_t j = 0; j < d; ++j)
    if (!piv[j]) q.complement.push_back(j);
  const std::size_t n = q.complement.size();
  q.lift = Mat(n, d, k);
  for (std::size_t i = 0; i < n; ++i) q.lift(i, q.complement[i]) = 1;
  std::vector<Mat> right;
  for (std::size_t j = 0; j < n; ++j) {
    Mat r(n, n, k);
    for (std::size_t i = 0; i < n; ++i) {
      Vec prod = q.project(a.multiply(q.lift.row(i), q.lift.row(j)));
      std::copy(prod.begin(), prod.end(), r.row(i).begin());
    }
    right.push_back(std::move(r));
  }
  q.algebra = AbstractAlgebra(k, std::move(right), q.project(a.unit()));
  return q;
}

CornerAlgebra corner_algebra(const AbstractAlgebra& a, std::span<const std::uint32_t> e) {
  const std::size_t d = a.dim();
  const FieldSpec k = a.field();
  Mat span(0, d, k);
  for (std::size_t i = 0; i < d; ++i) span.append_row(a.multiply(a.multiply(e, a.basis_vector(i)), e));
  CornerAlgebra c;
  c.basis = row_space(span);
  RowSpaceSolver solver(c.basis);
  const std::size_t n = c.basis.rows();
  std::vector<Mat> right;
  for (std::size_t j = 0; j < n; ++j) {
    Mat r(n, n, k);
    for (std::size_t i = 0; i < n; ++i) {
      auto coords = solver.coordinates(a.multiply(c.basis.row(i), c.basis.row(j)));
      std::copy(coords->begin(), coords->end(), r.row(i).begin());
    }
    right.push_back(std::move(r));
  }
  c.algebra = AbstractAlgebra(k, std::move(right), *solver.coordinates(e));
  return c;
}

Mat center(const AbstractAlgebra& a) {
  const std::size_t d = a.dim();
  const FieldSpec k = a.field();
  if (d == 0) return Mat(0, 0, k);
  // x is central iff x * e_j - e_j * x = 0 for all j
  Mat sys(d, d * d, k);
  for (std::size_t j = 0; j < d; ++j) {
    Mat diff = a.right_matrix(a.basis_vector(j)) - a.left_matrix(a.basis_vector(j));
    sys.set_block(0, j * d, diff);
  }
  Mat ker = kernel_basis(sys);
  return ker.rows() ? row_space(ker) : ker;
}

namespace {

bool is_zero_vec(std::span<const std::uint32_t> x) {
  return std::all_of(x.begin(), x.end(), [](std::uint32_t c) { return c == 0; });
}

// Basis of the commutative subalgebra generated by x (powers of x).
Mat generated_subalgebra(const AbstractAlgebra& a, std::span<const std::uint32_t> x) {
  Mat span(0, a.dim(), a.field());
  Vec pw = a.unit();
  while (true) {
    Mat trial = span;
    trial.append_row(pw);
    if (rank(trial) == span.rows()) break;
    span = std::move(trial);
    pw = a.multiply(pw, x);
  }
  return span;
}

// Frobenius-fixed elements of a commutative subalgebra (given by a basis
// containing the unit in its span) split it into local factors; return a
// nontrivial idempotent when there are at least two.
std::optional<Vec> split_commutative(const AbstractAlgebra& a, const Mat& sub) {
  const FieldSpec k = a.field();
  const std::size_t n = sub.rows();
  if (n < 2) return std::nullopt;
  RowSpaceSolver solver(sub);
  Mat frob(n, n, k);
  for (std::size_t i = 0; i < n; ++i) {
    auto c = solver.coordinates(a.power(sub.row(i), k.p()));
    if (!c) throw IdempotentLiftFailure("subalgebra is not closed under powers");
    for (std::size_t j = 0; j < n; ++j) frob(i, j) = (*c)[j];
    frob(i, i) = k.sub(frob(i, i), 1);
  }
  Mat fixed = kernel_basis(frob);
  Mat unit_row = Mat::row_vector(a.unit(), k);
  for (std::size_t r = 0; r < fixed.rows(); ++r) {
    Mat f = Mat::row_vector(fixed.row(r), k) * sub;
    if (rank(unit_row.vstack(f)) < 2) continue;
    Vec fv(f.row(0).begin(), f.row(0).end());
    // minimal polynomial of f; it splits into distinct linear factors
    Mat powers = generated_subalgebra(a, fv);
    const std::size_t deg = powers.rows();
    Vec top = a.power(fv, deg);
    auto coeffs = RowSpaceSolver(powers).coordinates(top);
    poly::Poly mp(deg + 1, 0);
    for (std::size_t i = 0; i < deg; ++i) mp[i] = k.neg((*coeffs)[i]);
    mp[deg] = 1;
    auto roots = poly::split_roots(mp, k);
    if (roots.empty()) throw IdempotentLiftFailure("Frobenius-fixed element without rational eigenvalue");
    Vec shifted = a.add(fv, a.scaled(a.unit(), k.neg(roots.front())));
    Vec nil = a.power(shifted, k.p() - 1);
    Vec e = a.add(a.unit(), a.scaled(nil, k.neg(1)));
    return e;
  }
  return std::nullopt;
}

// Nontrivial idempotent of a semisimple algebra that is not a field, or
// nullopt when it is a field.
std::optional<Vec> semisimple_idempotent(const AbstractAlgebra& s, std::mt19937_64& rng) {
  const std::size_t n = s.dim();
  if (n <= 1) return std::nullopt;
  if (s.is_commutative()) return split_commutative(s, Mat::identity(n, s.field()));
  if (auto e = split_commutative(s, center(s))) return e;
  // Simple but not a field: a full matrix algebra over an extension field.
  std::uniform_int_distribution<std::uint32_t> dist(0, s.field().p() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    Vec x(n);
    for (auto& c : x) c = dist(rng);
    if (auto e = split_commutative(s, generated_subalgebra(s, x))) return e;
  }
  throw IdempotentLiftFailure("no idempotent found in a noncommutative semisimple algebra");
}

}  // namespace

bool is_local(const AbstractAlgebra& a) {
  if (a.dim() == 0) return false;
  auto q = quotient_algebra(a, jacobson_radical(a));
  if (q.algebra.dim() == 1) return true;
  if (!q.algebra.is_commutative()) return false;
  return !split_commutative(q.algebra, Mat::identity(q.algebra.dim(), a.field())).has_value();
}

Vec lift_idempotent(const AbstractAlgebra& a, Vec e) {
  const FieldSpec k = a.field();
  for (int it = 0; it < 128; ++it) {
    Vec e2 = a.multiply(e, e);
    if (e2 == e) return e;
    Vec e3 = a.multiply(e2, e);
    e = a.add(a.scaled(e2, 3 % k.p()), a.scaled(e3, k.neg(2 % k.p())));
  }
  throw IdempotentLiftFailure("Newton iteration did not converge");
}

std::vector<Vec> primitive_idempotents(const AbstractAlgebra& a, std::uint64_t seed) {
  std::vector<Vec> out;
  if (a.dim() == 0) return out;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<Vec> todo{a.unit()};
  while (!todo.empty()) {
    Vec e = std::move(todo.back());
    todo.pop_back();
    CornerAlgebra c = corner_algebra(a, e);
    if (c.algebra.dim() == 1) {
      out.push_back(std::move(e));
      continue;
    }
    QuotientAlgebra q = quotient_algebra(c.algebra, jacobson_radical(c.algebra));
    auto bar = semisimple_idempotent(q.algebra, rng);
    if (!bar) {
      out.push_back(std::move(e));
      continue;
    }
    Mat pre = Mat::row_vector(*bar, a.field()) * q.lift;
    Vec f = lift_idempotent(c.algebra, Vec(pre.row(0).begin(), pre.row(0).end()));
    Mat fa = Mat::row_vector(f, a.field()) * c.basis;
    Vec fv(fa.row(0).begin(), fa.row(0).end());
    if (is_zero_vec(fv) || fv == e) throw IdempotentLiftFailure("lifted idempotent is trivial");
    Vec rest = a.add(e, a.scaled(fv, a.field().neg(1)));
    todo.push_back(std::move(rest));
    todo.push_back(std::move(fv));
  }
  return out;
}

}  // namespace gorelab
