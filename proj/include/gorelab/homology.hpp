#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gorelab/representation.hpp"

namespace gorelab {

class PropertyViolation : public std::logic_error {
 public:
  PropertyViolation(const std::string& what, std::size_t index) : std::logic_error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

struct SyzygyData {
  ProjectiveCover cover;
  VertexBasis basis;     // kernel of the cover map, inside the cover
  Representation module;
  ModuleHom inclusion;   // module -> cover
};

SyzygyData syzygy_data(const Representation& m);
Representation syzygy(const Representation& m);

struct ProjectiveResolution {
  Representation module;
  std::vector<ProjectiveCover> covers;     // covers[i]: P_i -> syzygies[i]
  std::vector<Representation> syzygies;    // syzygies[i] = Omega^i M
  std::vector<ModuleHom> differentials;    // differentials[i-1]: P_i -> P_{i-1}

  std::size_t length() const { return covers.empty() ? 0 : covers.size() - 1; }
  const Representation& projective(std::size_t i) const { return covers[i].cover; }
  bool is_complex() const;
  bool is_exact() const;
  /// Every differential lands in the radical of its codomain.
  bool is_minimal() const;
};

/// Minimal resolution P_0 <- ... <- P_n, stopping early once a syzygy vanishes.
ProjectiveResolution minimal_projective_resolution(const Representation& m, std::size_t n);

using ClassId = std::size_t;
/// Direct sum of indecomposable classes with multiplicities.
using Multiset = std::map<ClassId, std::uint64_t>;

/// Interned indecomposable modules over one algebra with their syzygies.
/// Not thread-safe; use one world per thread or guard externally.
class SyzygyWorld {
 public:
  explicit SyzygyWorld(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t size() const { return nodes_.size(); }

  /// Class of an indecomposable module, adding it when new.
  ClassId intern(const Representation& indecomposable);
  Multiset classify(const Representation& m);

  const Representation& representative(ClassId c) const { return nodes_[c].rep; }
  bool is_projective(ClassId c) const { return nodes_[c].projective; }
  const Multiset& syzygy(ClassId c);
  Multiset syzygy(const Multiset& m);
  const SyzygyData& syzygy_data(ClassId c);
  /// Records Omega of c computed by other means; checked against dimensions.
  void set_syzygy(ClassId c, Multiset omega);
  bool has_syzygy(ClassId c) const { return nodes_[c].omega.has_value(); }
  std::size_t syzygy_dim(ClassId c);
  std::size_t hom(ClassId c, const Representation& n);

  /// dim Ext^1(X, N) for the class X.
  std::size_t ext1(ClassId c, const Representation& n);
  std::size_t stable_hom(ClassId x, ClassId y);

  Representation realize(const Multiset& m) const;

 private:
  struct Node {
    Representation rep;
    bool projective = false;
    std::optional<SyzygyData> omega_data;
    std::optional<Multiset> omega;
    std::vector<std::size_t> top_dims;
  };
  AlgebraPtr algebra_;
  std::vector<Node> nodes_;
  std::map<std::vector<std::size_t>, std::vector<ClassId>> by_dims_;
  std::map<std::pair<ClassId, std::string>, std::size_t> ext1_cache_;
  std::map<std::pair<ClassId, ClassId>, std::size_t> stable_cache_;
  std::map<std::pair<ClassId, std::string>, std::size_t> hom_cache_;

  const std::vector<std::size_t>& top_dims(ClassId c);
};

/// Shared world for an algebra, created on first use.
std::shared_ptr<SyzygyWorld> world_for(const AlgebraPtr& a);
void release_worlds();

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
void add_into(Multiset& acc, const Multiset& m, std::uint64_t factor = 1);
std::uint64_t total_count(const Multiset& m);

std::size_t ext_dim(const Representation& m, const Representation& n, std::size_t i);
std::vector<std::size_t> ext_table(const Representation& m, const Representation& n, std::size_t depth);
std::size_t stable_hom_dim(const Representation& m, const Representation& n);

struct SyzygyOrbit {
  std::vector<Multiset> entries;  // entries[k] = Omega^k M
  std::optional<std::pair<std::size_t, std::size_t>> period;  // (l, r): entries[l + r] = entries[l]
  bool terminated = false;  // last entry is zero
  bool overflow = false;    // multiplicities left uint64 before a repeat or the cap
  std::size_t cap = 0;
  std::shared_ptr<SyzygyWorld> world;

  /// Omega^k M for any k, using the period or termination when beyond the computed entries.
  Multiset level(std::size_t k);
};

SyzygyOrbit syzygy_orbit(const Representation& m, std::size_t cap);

enum class Status { certified_yes, certified_no, inconclusive };
std::string to_string(Status s);

struct Verdict {
  Status status = Status::inconclusive;
  /// For certified_no: an index i with a nonzero Ext and its dimension.
  std::size_t ext_index = 0;
  std::size_t ext_value = 0;
  /// "module" when the witness concerns Ext(M, A), "dual" for Ext(D(A), tau M).
  std::string side = "module";
  std::optional<std::pair<std::size_t, std::size_t>> period;
  std::optional<std::size_t> terminated_at;  // first k with Omega^k M = 0
  std::optional<std::pair<std::size_t, std::size_t>> dual_period;
  std::optional<std::size_t> dual_terminated_at;
  std::size_t depth = 0;
  std::size_t orbit_cap = 0;
  /// Degrees i for which Ext(D(A), tau M) was also computed directly and matched Ext(Tr M, A^op).
  std::size_t dual_crosscheck = 0;
};

/// Syzygies larger than this end the direct Ext(D(A), tau M) cross-check.
inline constexpr std::size_t kCrossCheckModuleDim = 48;

Verdict semi_gp_test(const Representation& m, std::size_t depth = 20, std::size_t orbit_cap = 50);
Verdict gorenstein_projective_test(const Representation& m, std::size_t depth = 20, std::size_t orbit_cap = 50);
std::optional<std::size_t> gpd_upper(const Representation& m, std::size_t depth = 20, std::size_t orbit_cap = 50);

bool is_selfinjective(const AlgebraPtr& a);
/// Linear form on the algebra basis with lambda(xy) = lambda(yx) and nondegenerate pairing.
std::optional<std::vector<std::uint32_t>> symmetrizing_form(const AlgebraPtr& a, std::uint64_t seed = 0);
std::size_t injective_dim_lower(const Representation& m, std::size_t depth = 10);

struct PropReport {
  bool precondition = false;  // semi_gp_test certified the module
  std::vector<std::pair<std::size_t, std::size_t>> ext_vs_stable;     // (ext_dim(M,N,i), stable(Omega^i M, N))
  std::vector<std::pair<std::size_t, std::size_t>> stable_shift;      // (stable(M,N), stable(Omega^i M, Omega^i N))
  std::vector<std::size_t> summand_counts;                            // summands of Omega^k M
  std::size_t checks = 0;
};

/// Checks the Ext / stable Hom identities and single-summand syzygies; throws
/// PropertyViolation on the first failure.
PropReport verify_prop1(const Representation& m, const Representation& n, std::size_t depth = 6,
                        std::size_t orbit_cap = 50);

struct ArReport {
  bool hypothesis = false;           // Ext^i(M, M + A) = 0 for i = 1..depth
  std::size_t witness_index = 0;     // first failing i when the hypothesis fails
  std::size_t witness_value = 0;
  std::string witness_target;        // "M" or "A"
  bool certified = false;            // semi-GP periodicity certificate present
  bool projective = false;
  bool conclusion_holds = true;      // hypothesis and certificate imply projective
  std::optional<std::pair<std::size_t, std::size_t>> period;
  // stable Hom chain at the period (l, t)
  std::size_t ext_at_period = 0;           // Ext^t(M, M)
  std::size_t ext_shifted = 0;             // Ext^t(Omega^l M, Omega^l M)
  std::size_t stable_shifted = 0;          // stable Hom(Omega^{l+t} M, Omega^l M)
  std::size_t stable_end = 0;              // stable End(Omega^l M)
};

ArReport ar_conjecture_check(const Representation& m, std::size_t depth = 20, std::size_t orbit_cap = 50);

}  // namespace gorelab
