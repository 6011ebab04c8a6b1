#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gorelab {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Prime field F_p, 2 <= p < 2^31. Primality is checked by trial division.
class FieldSpec {
 public:
  FieldSpec() = default;
  explicit FieldSpec(std::uint64_t p);

  std::uint32_t p() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p_ - b);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Multiplicative inverse; a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t reduce(std::int64_t v) const;
  /// Signed representative in (-p/2, p/2], used for printing.
  std::int64_t lift_signed(std::uint32_t a) const;

  bool operator==(const FieldSpec&) const = default;

 private:
  std::uint32_t p_ = 2;
};

/// Dense matrix over F_p, row-major. Vectors are rows; maps act by right
/// multiplication.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, FieldSpec field);

  static Mat identity(std::size_t n, FieldSpec field);
  static Mat from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols,
                       FieldSpec field);
  static Mat row_vector(std::span<const std::uint32_t> v, FieldSpec field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldSpec field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const std::uint32_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<std::uint32_t>& data() const { return data_; }

  Mat operator*(const Mat& rhs) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;
  Mat scaled(std::uint32_t c) const;
  Mat transposed() const;

  bool is_zero() const;
  bool operator==(const Mat& rhs) const;

  /// Rows of *this followed by rows of below.
  Mat vstack(const Mat& below) const;
  /// Columns of *this followed by columns of right.
  Mat hstack(const Mat& right) const;
  Mat select_rows(std::span<const std::size_t> idx) const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  void append_row(std::span<const std::uint32_t> v);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec field_{};
  std::vector<std::uint32_t> data_;
};

struct RrefResult {
  Mat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);

/// Basis (as rows) of { x : x * m = 0 }. Row count = rows(m) - rank(m).
Mat kernel_basis(const Mat& m);

/// Some x with x * m = b, or nullopt when inconsistent. b.cols() must equal m.cols().
std::optional<Mat> solve(const Mat& m, const Mat& b);

/// Reduced row basis of the row space.
Mat row_space(const Mat& m);

/// Solves repeatedly against a fixed row space: coordinates of vectors in the
/// span of the given (independent) rows.
class RowSpaceSolver {
 public:
  RowSpaceSolver() = default;
  explicit RowSpaceSolver(const Mat& basis);

  std::size_t dim() const { return dim_; }
  bool contains(std::span<const std::uint32_t> v) const;
  /// Coordinates with respect to the original basis rows; nullopt if outside the span.
  std::optional<std::vector<std::uint32_t>> coordinates(std::span<const std::uint32_t> v) const;
  /// Reduces v modulo the span; the result is zero on every pivot column.
  std::vector<std::uint32_t> reduce(std::span<const std::uint32_t> v) const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  FieldSpec field_{};
  std::size_t dim_ = 0;
  std::size_t width_ = 0;
  Mat echelon_;     // reduced rows
  Mat transform_;   // echelon_ = transform_ * basis
  std::vector<std::size_t> pivots_;
};

/// Extends the span of the given rows to a full basis of F_p^n with unit vectors,
/// returning the indices of the added unit vectors (ascending).
std::vector<std::size_t> complement_units(const Mat& rows, std::size_t n);

Mat inverse(const Mat& m);

}  // namespace gorelab
