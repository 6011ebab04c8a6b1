#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gorelab/homology.hpp"

namespace gorelab {

class NotMonomial : public std::invalid_argument {
 public:
  NotMonomial() : std::invalid_argument("algebra is not monomial") {}
};

class NodeCapExceeded : public std::runtime_error {
 public:
  explicit NodeCapExceeded(std::size_t cap)
      : std::runtime_error("syzygy graph exceeded node cap " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class ClassificationMismatch : public std::logic_error {
 public:
  ClassificationMismatch(const std::string& what, std::size_t node) : std::logic_error(what), node_(node) {}
  std::size_t node() const { return node_; }

 private:
  std::size_t node_;
};

/// Cyclic right ideal pA for a nonzero normal-form path p.
struct PathModule {
  Path path;
  Representation module;
};

/// All pA, deduplicated up to isomorphism; trivial paths give the projectives.
std::vector<PathModule> second_syzygy_candidates(const AlgebraPtr& a);

struct GraphNode {
  std::string origin;  // generating path, "S_<v>" for a seeded simple, or "omega" when reached by closure
  bool projective = false;
  bool ext1_vanishes = false;
  Multiset omega;  // edges: node index -> multiplicity
};

struct SyzygyGraph {
  AlgebraPtr algebra;
  std::shared_ptr<SyzygyWorld> world;  // node i is class i of this world
  std::vector<GraphNode> nodes;
  std::size_t seeded = 0;  // nodes before closure

  std::size_t size() const { return nodes.size(); }
  const Representation& module(std::size_t i) const { return world->representative(i); }
  /// Nodes reachable from i by syzygy edges, including i.
  std::vector<std::size_t> reachable(std::size_t i) const;
};

inline constexpr std::size_t kDefaultNodeCap = 4096;

SyzygyGraph build_syzygy_graph(const AlgebraPtr& a, std::size_t node_cap = kDefaultNodeCap);

struct WeaklyGorensteinReport {
  SyzygyGraph graph;
  std::vector<bool> semi_gp;           // every reachable node has Ext^1(-, A) = 0
  std::vector<Verdict> gp_verdicts;    // gorenstein_projective_test per node
  std::vector<std::size_t> phi_part;
  std::vector<std::size_t> gp_part;
  std::string verdict;
};

/// Throws ClassificationMismatch when a semi-GP node is not certified GP or
/// the converse.
WeaklyGorensteinReport classify(const AlgebraPtr& a, std::size_t depth = 20, std::size_t orbit_cap = 50,
                                std::size_t node_cap = kDefaultNodeCap);

}  // namespace gorelab
