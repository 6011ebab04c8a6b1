#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gorelab/homology.hpp"
#include "gorelab/suite.hpp"

namespace gorelab {

struct CampaignOptions {
  std::uint64_t seed = 1;
  std::size_t random_algebras = 6;
  std::size_t random_modules = 8;   // random quotients drawn per algebra
  std::size_t max_modules = 12;     // indecomposables kept per algebra
  std::size_t test_modules = 6;     // partners N per certified module in verify_prop1
  std::size_t depth = 20;
  std::size_t orbit_cap = 50;
  std::size_t prop_depth = 6;
  std::size_t shift_depth = 4;
};

struct CampaignEntry {
  std::string algebra;
  std::string label;
  Representation module;
  Verdict semi;
  ArReport ar;
  std::size_t shift_checks = 0;
  std::size_t shift_failures = 0;
  bool minimal = true;
  std::string error;  // non-empty when a check threw
};

struct PropTriple {
  std::string algebra;
  std::string module;
  std::string test;
  PropReport report;
  std::string error;  // PropertyViolation text, empty when passed
};

struct CampaignReport {
  CampaignOptions options;
  std::vector<NamedAlgebra> algebras;
  std::vector<CampaignEntry> entries;
  std::vector<PropTriple> triples;

  std::size_t violations() const;
  /// Stable key=value lines, one record per line.
  std::vector<std::string> machine_lines() const;
};

/// Indecomposable test modules of an algebra: the extra ones, simples, projectives, random
/// quotients, for monomial algebras the path modules pA, and first and second
/// syzygies of all of these; up to isomorphism.
std::vector<std::pair<std::string, Representation>> campaign_modules(
    const AlgebraPtr& a, std::uint64_t seed, const CampaignOptions& o,
    const std::vector<std::pair<std::string, Representation>>& extra = {});

CampaignReport run_campaign(const CampaignOptions& o);

}  // namespace gorelab
