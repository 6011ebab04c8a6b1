#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gorelab/linalg.hpp"

namespace gorelab {

class NotFiniteDimensionalWithinCap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonAdmissibleRelation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  std::size_t add_vertex(std::string label);
  std::size_t add_arrow(std::string name, std::size_t source, std::size_t target);
  std::size_t add_arrow(std::string name, std::string_view source, std::string_view target);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  std::optional<std::size_t> vertex_index(std::string_view label) const;
  std::optional<std::size_t> arrow_index(std::string_view name) const;

  /// Same vertices, every arrow reversed, names kept.
  Quiver opposite() const;

  bool operator==(const Quiver&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A path read left to right: `pq` traverses p first. Trivial paths carry a
/// vertex and no arrows.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::uint32_t> arrows;

  static Path trivial(std::size_t v) { return Path{v, v, {}}; }
  static Path of_arrow(const Quiver& q, std::size_t a);
  static Path of_arrows(const Quiver& q, std::vector<std::uint32_t> arrows);
  std::size_t length() const { return arrows.size(); }
  bool is_trivial() const { return arrows.empty(); }

  bool operator==(const Path&) const = default;
};

/// Length-lexicographic order; ties broken by arrow declaration order, trivial
/// paths by vertex.
std::strong_ordering operator<=>(const Path& a, const Path& b);

std::optional<Path> concat(const Path& a, const Path& b);
std::string to_string(const Path& p, const Quiver& q);

/// Finite linear combination of paths with nonzero coefficients.
struct AlgElement {
  std::map<Path, std::uint32_t> terms;

  bool is_zero() const { return terms.empty(); }
  const Path& leading_path() const { return terms.rbegin()->first; }
  std::uint32_t leading_coefficient() const { return terms.rbegin()->second; }
  bool operator==(const AlgElement&) const = default;
};

AlgElement make_element(const Path& p, std::uint32_t c = 1);
void add_term(AlgElement& x, const Path& p, std::uint32_t c, FieldSpec k);
AlgElement add(const AlgElement& a, const AlgElement& b, FieldSpec k);
AlgElement scale(const AlgElement& a, std::uint32_t c, FieldSpec k);
/// Product in kQ (concatenation, zero on mismatched endpoints).
AlgElement multiply(const AlgElement& a, const AlgElement& b, FieldSpec k);
AlgElement multiply(const Path& u, const AlgElement& a, const Path& w, FieldSpec k);
AlgElement reversed(const AlgElement& a, const Quiver& opposite);
std::string to_string(const AlgElement& a, const Quiver& q, FieldSpec k);

/// Sparse coordinate vector over an algebra basis.
using SparseVec = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Finite-dimensional quotient kQ/I of a path algebra by an admissible ideal,
/// with a length-lexicographic Groebner basis and a normal-form monomial basis.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  static constexpr std::size_t kDefaultDegreeCap = 64;

  static std::shared_ptr<const Algebra> build(Quiver quiver, std::vector<AlgElement> relations,
                                              FieldSpec field,
                                              std::size_t degree_cap = kDefaultDegreeCap);

  const Quiver& quiver() const { return quiver_; }
  FieldSpec field() const { return field_; }
  std::size_t degree_cap() const { return degree_cap_; }
  const std::vector<AlgElement>& relations() const { return relations_; }
  const std::vector<AlgElement>& groebner_basis() const { return groebner_; }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Path>& basis() const { return basis_; }
  std::optional<std::size_t> basis_index(const Path& p) const;
  std::size_t vertex_index_in_basis(std::size_t v) const { return *basis_index(Path::trivial(v)); }
  std::size_t arrow_index_in_basis(std::size_t a) const;
  /// Basis indices of paths from v to w, ascending.
  const std::vector<std::size_t>& basis_between(std::size_t v, std::size_t w) const {
    return between_[v * quiver_.vertex_count() + w];
  }

  /// Smallest N with rad^N = 0.
  std::size_t nilpotency_index() const { return nilpotency_; }
  /// dim rad^k / rad^(k+1) for k = 0 .. N-1.
  const std::vector<std::size_t>& radical_layers() const { return layers_; }

  AlgElement normal_form(const AlgElement& x) const;
  std::vector<std::uint32_t> coordinates(const AlgElement& x) const;
  AlgElement element(std::span<const std::uint32_t> coords) const;

  /// Product of basis elements i and j in normal form.
  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * basis_.size() + j]; }
  std::vector<std::uint32_t> multiply(std::span<const std::uint32_t> a,
                                      std::span<const std::uint32_t> b) const;

  bool is_monomial() const;
  std::shared_ptr<const Algebra> opposite() const;

 private:
  Algebra() = default;

  void compute_groebner();
  void enumerate_basis();
  void build_tables();
  void compute_radical_layers();
  AlgElement reduce(const AlgElement& x, const std::vector<AlgElement>& g) const;

  Quiver quiver_;
  FieldSpec field_{};
  std::size_t degree_cap_ = kDefaultDegreeCap;
  std::vector<AlgElement> relations_;
  std::vector<AlgElement> groebner_;
  std::vector<Path> basis_;
  std::map<Path, std::size_t> index_;
  std::vector<std::vector<std::size_t>> between_;
  std::vector<SparseVec> table_;
  std::size_t nilpotency_ = 0;
  std::vector<std::size_t> layers_;

  mutable std::once_flag opposite_once_;
  mutable std::shared_ptr<const Algebra> opposite_;
  std::weak_ptr<const Algebra> origin_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

inline std::shared_ptr<const Algebra> build_algebra(Quiver q, std::vector<AlgElement> rels, FieldSpec k,
                                                    std::size_t degree_cap = Algebra::kDefaultDegreeCap) {
  return Algebra::build(std::move(q), std::move(rels), k, degree_cap);
}
inline AlgElement normal_form(const Algebra& a, const AlgElement& x) { return a.normal_form(x); }
inline bool is_monomial(const Algebra& a) { return a.is_monomial(); }
inline std::shared_ptr<const Algebra> opposite_algebra(const Algebra& a) { return a.opposite(); }

class RelationSyntaxError : public std::invalid_argument {
 public:
  RelationSyntaxError(const std::string& what, std::size_t column)
      : std::invalid_argument(what), column_(column) {}
  /// 1-based column inside the relation text.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parses `alpha*alpha - beta1*beta2`, `2*a*b + c*d` etc. against a quiver.
/// A term may also be a trivial path written `e_<vertex>`.
AlgElement parse_relation(std::string_view text, const Quiver& q, FieldSpec k);

}  // namespace gorelab
