#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gorelab/abstract_algebra.hpp"
#include "gorelab/representation.hpp"

namespace gorelab {

struct EndomorphismRing {
  std::vector<ModuleHom> basis;
  /// Product x*y is "x then y", the matrix product in the row convention.
  AbstractAlgebra algebra;

  ModuleHom to_hom(std::span<const std::uint32_t> coords) const;
};

EndomorphismRing endomorphism_ring(const Representation& m);
AbstractAlgebra endomorphism_algebra(const Representation& m);

struct Summand {
  Representation module;
  ModuleHom inclusion;   // summand -> M
  ModuleHom projection;  // M -> summand
};

struct DecompositionReport {
  std::vector<Summand> summands;
  /// Index of the iso class of each summand.
  std::vector<std::size_t> class_of;
  /// (first summand of the class, multiplicity), in order of first appearance.
  std::vector<std::pair<std::size_t, std::size_t>> classes;

  std::size_t summand_count() const { return summands.size(); }
  /// The splitting maps compose to the identity on M and on each summand.
  bool verify(const Representation& m) const;
};

/// Endomorphism rings above this dimension are refused; the structure constants grow cubically.
inline constexpr std::size_t kMaxEndomorphismDim = 256;

class DecompositionTooLarge : public std::runtime_error {
 public:
  explicit DecompositionTooLarge(std::size_t end_dim)
      : std::runtime_error("endomorphism ring of dimension " + std::to_string(end_dim) + " exceeds " +
                           std::to_string(kMaxEndomorphismDim)) {}
};

/// Throws DecompositionTooLarge when dim End(M) exceeds kMaxEndomorphismDim.
DecompositionReport decompose(const Representation& m, std::uint64_t seed = 0);

bool is_indecomposable(const Representation& m);
/// Isomorphism test for two indecomposable modules: some composite X -> Y -> X is invertible.
bool indecomposables_isomorphic(const Representation& x, const Representation& y);
bool is_isomorphic(const Representation& m, const Representation& n);

}  // namespace gorelab
