#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gorelab/abstract_algebra.hpp"
#include "gorelab/path_algebra.hpp"

namespace gorelab {

class NotBasic : public std::invalid_argument {
 public:
  NotBasic() : std::invalid_argument("algebra is not basic over its prime field") {}
};

class SearchBudgetExceeded : public std::runtime_error {
 public:
  SearchBudgetExceeded(std::uint64_t tried, double coverage)
      : std::runtime_error("presentation search budget exhausted after " + std::to_string(tried) +
                           " assignments, coverage " + std::to_string(coverage)),
        tried_(tried),
        coverage_(coverage) {}
  std::uint64_t tried() const { return tried_; }
  double coverage() const { return coverage_; }

 private:
  std::uint64_t tried_;
  double coverage_;
};

struct QuiverPresentation {
  Quiver quiver;
  std::vector<Vec> idempotents;   // vertex i -> primitive idempotent of c
  std::vector<Vec> arrow_images;  // lifted basis of e_i (rad/rad^2) e_j for arrows i -> j
  std::vector<AlgElement> relations;
  AlgebraPtr rebuilt;             // kQ modulo the relations
};

/// Structure constants of a path-algebra quotient on its normal-form basis.
AbstractAlgebra as_abstract(const Algebra& a);

/// Throws NotBasic when c/rad c is not a product of copies of F_p.
QuiverPresentation quiver_presentation(const AbstractAlgebra& c, std::uint64_t seed = 0);

/// Evaluates a path-algebra element on given vertex and arrow images.
Vec evaluate(const AbstractAlgebra& c, const AlgElement& x, const std::vector<Vec>& vertex_images,
             const std::vector<Vec>& arrow_images);

struct PresentationWitness {
  std::vector<std::size_t> vertex_map;  // target vertex -> vertex of quiver_presentation(c)
  std::vector<Vec> vertex_images;
  std::vector<Vec> arrow_images;
};

struct MatchResult {
  std::optional<PresentationWitness> witness;
  bool exhaustive = false;
  std::uint64_t tried = 0;
  double space = 0;  // number of assignments, as a double to survive overflow
  std::string reason;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// Images of the target arrows in rad c that satisfy the target relations and
/// span rad/rad^2. Exhaustive within the budget, otherwise a seeded random
/// search that throws SearchBudgetExceeded when nothing is found.
MatchResult find_presentation_match(const AbstractAlgebra& c, const AlgebraPtr& target,
                                    std::uint64_t budget = kDefaultSearchBudget, std::uint64_t seed = 0);

/// Relations vanish, images generate c, dimensions agree.
bool verify_witness(const AbstractAlgebra& c, const AlgebraPtr& target, const PresentationWitness& w);

}  // namespace gorelab
