#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gorelab/path_algebra.hpp"
#include "gorelab/representation.hpp"

namespace gorelab {

/// k[x]/x^n on one loop.
AlgebraPtr loop_algebra(std::size_t n, FieldSpec k = FieldSpec(3));
/// k<x,y>/(x^2, y^2, xy)
AlgebraPtr two_loop_algebra(FieldSpec k = FieldSpec(3));
/// 1 -a-> 2 -b-> 3 with ab = 0
AlgebraPtr line_algebra(FieldSpec k = FieldSpec(3));

/// The worked example over F_3: alpha loop at 1, beta1: 1 -> 2, beta2: 2 -> 1.
AlgebraPtr example_algebra();
Representation example_module(const AlgebraPtr& a);
Quiver three_loops();
std::vector<AlgElement> example_L(const Quiver& q, FieldSpec k);
AlgebraPtr example_C();

struct NamedAlgebra {
  std::string name;
  AlgebraPtr algebra;
};

/// Monomial algebra with at most max_vertices vertices and rad^N = 0 for some N <= max_nilpotency.
AlgebraPtr random_monomial_algebra(std::uint64_t seed, std::size_t max_vertices = 4, std::size_t max_nilpotency = 5);

/// P(v) modulo the submodule generated by up to two random vectors.
Representation random_quotient(const AlgebraPtr& a, std::mt19937_64& rng);

/// Fixed algebras followed by seeded random monomial ones.
std::vector<NamedAlgebra> campaign_algebras(std::uint64_t seed, std::size_t random_count);

}  // namespace gorelab
