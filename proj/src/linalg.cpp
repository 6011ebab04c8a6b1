#include "gorelab/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace gorelab {

FieldSpec::FieldSpec(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31)) {
    throw std::invalid_argument("field characteristic out of range: " + std::to_string(p));
  }
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument("field characteristic is not prime: " + std::to_string(p));
  }
  p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t FieldSpec::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint64_t result = 1 % p_;
  std::uint64_t base = a % p_;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t);
}

std::uint32_t FieldSpec::reduce(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<std::uint32_t>(m);
}

std::int64_t FieldSpec::lift_signed(std::uint32_t a) const {
  if (a > p_ / 2) return static_cast<std::int64_t>(a) - p_;
  return a;
}

Mat::Mat(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

Mat Mat::identity(std::size_t n, FieldSpec field) {
  Mat m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols,
                   FieldSpec field) {
  Mat m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix literal");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.reduce(rows[r][c]);
  }
  return m;
}

Mat Mat::row_vector(std::span<const std::uint32_t> v, FieldSpec field) {
  Mat m(1, v.size(), field);
  std::copy(v.begin(), v.end(), m.data_.begin());
  return m;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_) {
    throw DimensionMismatch("matrix product: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                            " times " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  }
  const std::uint64_t p = field_.p();
  Mat out(rows_, rhs.cols_, field_);
  std::vector<std::uint64_t> acc(rhs.cols_);
  // Accumulate unreduced products while they provably fit in 64 bits.
  const std::uint64_t max_prod = (p - 1) * (p - 1);
  const std::uint64_t budget = max_prod == 0 ? ~std::uint64_t{0} : (~std::uint64_t{0} - p) / max_prod;
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    std::uint64_t pending = 0;
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = data_[i * cols_ + k];
      if (a == 0) continue;
      const std::uint32_t* brow = rhs.data_.data() + k * rhs.cols_;
      for (std::size_t j = 0; j < rhs.cols_; ++j) acc[j] += a * brow[j];
      if (++pending >= budget) {
        for (auto& x : acc) x %= p;
        pending = 0;
      }
    }
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = static_cast<std::uint32_t>(acc[j] % p);
  }
  return out;
}

Mat Mat::operator+(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum shape");
  Mat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

Mat Mat::operator-(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix difference shape");
  Mat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

Mat Mat::scaled(std::uint32_t c) const {
  Mat out = *this;
  for (auto& x : out.data_) x = field_.mul(x, c);
  return out;
}

Mat Mat::transposed() const {
  Mat out(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

bool Mat::operator==(const Mat& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

Mat Mat::vstack(const Mat& below) const {
  // An empty operand adopts the other's width.
  if (rows_ == 0 && below.cols_ != cols_) return below;
  if (below.rows_ == 0 && below.cols_ != cols_) return *this;
  if (below.cols_ != cols_) throw DimensionMismatch("vstack column mismatch");
  Mat out(rows_ + below.rows_, cols_, field_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

Mat Mat::hstack(const Mat& right) const {
  if (right.rows_ != rows_) throw DimensionMismatch("hstack row mismatch");
  Mat out(rows_, cols_ + right.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) out(i, cols_ + j) = right(i, j);
  }
  return out;
}

Mat Mat::select_rows(std::span<const std::size_t> idx) const {
  Mat out(idx.size(), cols_, field_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    auto src = row(idx[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Mat out(nr, nc, field_);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

void Mat::append_row(std::span<const std::uint32_t> v) {
  if (v.size() != cols_) throw DimensionMismatch("append_row width");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << field_.lift_signed((*this)(i, j));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

// row[dst] -= f * row[src], starting at column c0.
void axpy_row(Mat& m, std::size_t dst, std::size_t src, std::uint32_t f, std::size_t c0) {
  if (f == 0) return;
  const FieldSpec k = m.field();
  const std::uint64_t p = k.p();
  const std::uint64_t nf = k.neg(f);
  auto d = m.row(dst);
  auto s = m.row(src);
  for (std::size_t j = c0; j < d.size(); ++j) {
    if (s[j] == 0) continue;
    d[j] = static_cast<std::uint32_t>((d[j] + nf * s[j]) % p);
  }
}

void scale_row(Mat& m, std::size_t r, std::uint32_t f, std::size_t c0) {
  const FieldSpec k = m.field();
  auto d = m.row(r);
  for (std::size_t j = c0; j < d.size(); ++j) d[j] = k.mul(d[j], f);
}

void swap_rows(Mat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

// In-place Gauss-Jordan restricted to the first ncols columns; returns pivot columns.
std::vector<std::size_t> gauss_jordan(Mat& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const FieldSpec k = m.field();
  for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    swap_rows(m, r, piv);
    scale_row(m, r, k.inv(m(r, c)), c);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r && m(i, c) != 0) axpy_row(m, i, r, m(i, c), c);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const Mat& m) {
  RrefResult out{m, 0, {}};
  out.pivot_cols = gauss_jordan(out.reduced, m.cols());
  out.rank = out.pivot_cols.size();
  return out;
}

std::size_t rank(const Mat& m) {
  if (m.rows() > m.cols()) return rref(m.transposed()).rank;
  return rref(m).rank;
}

Mat kernel_basis(const Mat& m) {
  // Left kernel of m is the right kernel of m^T.
  const FieldSpec k = m.field();
  const std::size_t n = m.rows();
  RrefResult r = rref(m.transposed());
  std::vector<bool> is_pivot(n, false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  Mat basis(n - r.rank, n, k);
  std::size_t out_row = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(out_row, free) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) {
      basis(out_row, r.pivot_cols[i]) = k.neg(r.reduced(i, free));
    }
    ++out_row;
  }
  return basis;
}

std::optional<Mat> solve(const Mat& m, const Mat& b) {
  if (b.cols() != m.cols()) throw DimensionMismatch("solve: right-hand side width differs from matrix width");
  const FieldSpec k = m.field();
  // m^T X^T = b^T
  Mat aug = m.transposed().hstack(b.transposed());
  auto pivots = gauss_jordan(aug, m.rows());
  const std::size_t rk = pivots.size();
  for (std::size_t i = rk; i < aug.rows(); ++i) {
    for (std::size_t j = m.rows(); j < aug.cols(); ++j) {
      if (aug(i, j) != 0) return std::nullopt;
    }
  }
  Mat x(b.rows(), m.rows(), k);
  for (std::size_t i = 0; i < rk; ++i) {
    for (std::size_t s = 0; s < b.rows(); ++s) x(s, pivots[i]) = aug(i, m.rows() + s);
  }
  return x;
}

Mat row_space(const Mat& m) {
  RrefResult r = rref(m);
  std::vector<std::size_t> idx(r.rank);
  for (std::size_t i = 0; i < r.rank; ++i) idx[i] = i;
  return r.reduced.select_rows(idx);
}

RowSpaceSolver::RowSpaceSolver(const Mat& basis)
    : field_(basis.field()), width_(basis.cols()) {
  const std::size_t k = basis.rows();
  Mat aug = basis.hstack(Mat::identity(k, field_));
  pivots_ = gauss_jordan(aug, width_);
  dim_ = pivots_.size();
  echelon_ = aug.block(0, 0, dim_, width_);
  transform_ = aug.block(0, width_, dim_, k);
}

std::vector<std::uint32_t> RowSpaceSolver::reduce(std::span<const std::uint32_t> v) const {
  if (v.size() != width_) throw DimensionMismatch("RowSpaceSolver::reduce width");
  std::vector<std::uint32_t> r(v.begin(), v.end());
  const std::uint64_t p = field_.p();
  for (std::size_t i = 0; i < dim_; ++i) {
    const std::uint32_t c = r[pivots_[i]];
    if (c == 0) continue;
    const std::uint64_t nc = field_.neg(c);
    auto e = echelon_.row(i);
    for (std::size_t j = 0; j < width_; ++j) {
      if (e[j] != 0) r[j] = static_cast<std::uint32_t>((r[j] + nc * e[j]) % p);
    }
  }
  return r;
}

bool RowSpaceSolver::contains(std::span<const std::uint32_t> v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

std::optional<std::vector<std::uint32_t>> RowSpaceSolver::coordinates(
    std::span<const std::uint32_t> v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<std::uint32_t> coords(transform_.cols(), 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    const std::uint32_t c = v[pivots_[i]];
    if (c == 0) continue;
    auto t = transform_.row(i);
    for (std::size_t j = 0; j < coords.size(); ++j) coords[j] = field_.add(coords[j], field_.mul(c, t[j]));
  }
  return coords;
}

std::vector<std::size_t> complement_units(const Mat& rows, std::size_t n) {
  RrefResult r = rref(rows);
  std::vector<bool> is_pivot(n, false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) out.push_back(j);
  return out;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Mat aug = m.hstack(Mat::identity(n, m.field()));
  auto piv = gauss_jordan(aug, n);
  if (piv.size() != n) throw std::domain_error("matrix is singular");
  return aug.block(0, n, n, n);
}

}  // namespace gorelab
