#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "gorelab/linalg.hpp"

namespace gorelab {

class IdempotentLiftFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Vec = std::vector<std::uint32_t>;

/// Finite-dimensional associative unital algebra given by structure constants
/// on a basis e_0 .. e_{d-1}.
class AbstractAlgebra {
 public:
  AbstractAlgebra() = default;
  /// right[j] is the matrix whose row i is e_i * e_j.
  AbstractAlgebra(FieldSpec field, std::vector<Mat> right, Vec unit);

  std::size_t dim() const { return right_.size(); }
  FieldSpec field() const { return field_; }
  const Vec& unit() const { return unit_; }
  Vec basis_vector(std::size_t i) const;

  Vec multiply(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) const;
  Vec add(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) const;
  Vec scaled(std::span<const std::uint32_t> x, std::uint32_t c) const;
  Vec power(std::span<const std::uint32_t> x, std::uint64_t e) const;

  /// Matrix of y -> y * x (row i is e_i * x).
  Mat right_matrix(std::span<const std::uint32_t> x) const;
  /// Matrix of y -> x * y.
  Mat left_matrix(std::span<const std::uint32_t> x) const;

  bool is_commutative() const;
  /// Associativity on all basis triples and the unit laws.
  bool check_axioms() const;

 private:
  FieldSpec field_{};
  std::vector<Mat> right_;
  Vec unit_;
};

/// Jacobson radical as a row basis, by iterated trace-form kernels over F_p.
Mat jacobson_radical(const AbstractAlgebra& a);

/// Span of all products x*y with x in the rows of i and y in the rows of j.
Mat product_space(const AbstractAlgebra& a, const Mat& i, const Mat& j);

/// dim rad^k / rad^(k+1) for k = 0, 1, ... while nonzero.
std::vector<std::size_t> radical_layers(const AbstractAlgebra& a);

struct QuotientAlgebra {
  AbstractAlgebra algebra;
  /// Row i is a preimage of quotient basis vector i.
  Mat lift;
  /// Coordinates of the image of an element of the source algebra.
  Vec project(std::span<const std::uint32_t> x) const;

  RowSpaceSolver ideal;
  std::vector<std::size_t> complement;
};

/// Quotient by a two-sided ideal given as a row basis.
QuotientAlgebra quotient_algebra(const AbstractAlgebra& a, const Mat& ideal);

/// e A e for an idempotent e, with the inclusion of its basis as rows.
struct CornerAlgebra {
  AbstractAlgebra algebra;
  Mat basis;
};
CornerAlgebra corner_algebra(const AbstractAlgebra& a, std::span<const std::uint32_t> e);

Mat center(const AbstractAlgebra& a);

bool is_local(const AbstractAlgebra& a);

/// Newton iteration e <- 3e^2 - 2e^3 starting from an idempotent modulo a nilpotent ideal.
Vec lift_idempotent(const AbstractAlgebra& a, Vec e);

/// Complete set of orthogonal primitive idempotents summing to the unit.
std::vector<Vec> primitive_idempotents(const AbstractAlgebra& a, std::uint64_t seed = 0);

}  // namespace gorelab
