#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gorelab/linalg.hpp"
#include "gorelab/path_algebra.hpp"

namespace gorelab {

class InvalidRepresentation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Right module over kQ/I as a quiver representation. The matrix of an arrow
/// a: v -> w has shape dims(v) x dims(w) and acts on row vectors.
class Representation {
 public:
  Representation() = default;
  /// Validates shapes and that every relation acts as zero.
  Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Mat> mats);

  static Representation zero(AlgebraPtr algebra);
  /// Shape checks only; for modules assembled from valid ones (submodules, quotients, sums, duals).
  static Representation unchecked(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Mat> mats);

  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const Algebra& algebra() const { return *algebra_; }
  FieldSpec field() const { return algebra_->field(); }

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  const std::vector<Mat>& mats() const { return mats_; }
  const Mat& mat(std::size_t arrow) const { return mats_[arrow]; }

  /// Matrix of a path: the product of its arrow matrices (identity for e_v).
  Mat path_matrix(const Path& p) const;
  /// Matrix of the algebra basis element with the given index.
  Mat basis_matrix(std::size_t basis_index) const;

  /// Byte string identifying dims and matrices exactly.
  std::string fingerprint() const;

 private:
  void check_shapes() const;

  AlgebraPtr algebra_;
  std::vector<std::size_t> dims_;
  std::vector<Mat> mats_;
};

bool same_quiver(const Representation& a, const Representation& b);

/// Per-vertex components f_v of shape dims_M(v) x dims_N(v).
struct ModuleHom {
  std::vector<Mat> components;

  bool is_zero() const;
  bool operator==(const ModuleHom&) const = default;
};

bool is_homomorphism(const Representation& m, const Representation& n, const ModuleHom& f);
ModuleHom identity_hom(const Representation& m);
ModuleHom zero_hom(const Representation& m, const Representation& n);
/// First f, then g.
ModuleHom compose(const ModuleHom& f, const ModuleHom& g);
ModuleHom add(const ModuleHom& f, const ModuleHom& g);
ModuleHom scale(const ModuleHom& f, std::uint32_t c);
bool is_isomorphism(const ModuleHom& f);

/// Flattened coordinates of a hom in the variable order used by hom_basis.
std::vector<std::uint32_t> flatten(const ModuleHom& f);
ModuleHom unflatten(std::span<const std::uint32_t> v, const Representation& m, const Representation& n);

/// Basis of Hom(M, N), the kernel of the linear system of intertwining
/// constraints f_v N_a = M_a f_w.
std::vector<ModuleHom> hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);
/// Hom(M, N) as the generator images in N killing the relations of a minimal presentation of M.
/// hom_basis switches to this when the per-entry system gets large.
std::vector<ModuleHom> hom_basis_presented(const Representation& m, const Representation& n);

/// Per-vertex row bases describing a subspace of a representation.
using VertexBasis = std::vector<Mat>;

/// Subrepresentation on the given (independent, arrow-stable) row bases.
Representation subrepresentation(const Representation& m, const VertexBasis& basis);

struct Quotient {
  Representation module;
  ModuleHom projection;
};
Quotient quotient_representation(const Representation& m, const VertexBasis& sub);

/// Smallest subrepresentation containing the given (vertex, vector) pairs.
VertexBasis submodule_generated(const Representation& m,
                                const std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>>& gens);
/// Span of all arrow images.
VertexBasis radical_basis(const Representation& m);
VertexBasis image_basis(const Representation& m, const Representation& n, const ModuleHom& f);
VertexBasis kernel_basis(const Representation& m, const ModuleHom& f);

Representation direct_sum(std::span<const Representation> parts);

/// Projective e_v A on the normal-form paths starting at v.
Representation indecomposable_projective(const AlgebraPtr& a, std::size_t v);
Representation simple_module(const AlgebraPtr& a, std::size_t v);
/// The right regular module A_A.
Representation regular_module(const AlgebraPtr& a);
/// Direct sum of e_v A over the listed generator vertices, in order.
Representation free_module(const AlgebraPtr& a, std::span<const std::size_t> generators);
/// Offset of generator j's block inside the free module's space at vertex w.
std::vector<std::size_t> free_module_offsets(const Algebra& a, std::span<const std::size_t> generators,
                                             std::size_t w);

Representation radical(const Representation& m);
Representation top(const Representation& m);

struct ProjectiveCover {
  std::vector<std::size_t> generators;               // vertex of each summand e_v A
  std::vector<std::vector<std::uint32_t>> images;    // image of each generator in M_v
  Representation cover;
  ModuleHom map;                                     // cover -> M, surjective
};

/// Minimal projective cover lifting a basis of the top.
ProjectiveCover projective_cover(const Representation& m);
bool is_projective(const Representation& m);

/// Homomorphism from a free module given by the images of its generators.
ModuleHom hom_from_free(const Representation& free, std::span<const std::size_t> generators,
                        const std::vector<std::vector<std::uint32_t>>& images, const Representation& target);

std::string dims_string(const Representation& m);

}  // namespace gorelab
