#pragma once

#include <cstdint>
#include <vector>

#include "gorelab/linalg.hpp"

namespace gorelab::poly {

/// Dense univariate polynomial over F_p, coefficients from degree 0 upward.
/// The zero polynomial is the empty vector.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& f);
int degree(const Poly& f);
Poly mul(const Poly& a, const Poly& b, FieldSpec k);
Poly sub(const Poly& a, const Poly& b, FieldSpec k);
/// Remainder of a modulo nonzero b.
Poly mod(const Poly& a, const Poly& b, FieldSpec k);
Poly quotient(const Poly& a, const Poly& b, FieldSpec k);
Poly monic(const Poly& f, FieldSpec k);
Poly gcd(Poly a, Poly b, FieldSpec k);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, FieldSpec k);
std::uint32_t eval(const Poly& f, std::uint32_t x, FieldSpec k);

/// All roots of a squarefree polynomial that splits into linear factors over F_p.
/// Small fields are scanned; large odd fields use equal-degree splitting with
/// deterministic shifts.
std::vector<std::uint32_t> split_roots(const Poly& f, FieldSpec k);

}  // namespace gorelab::poly
