#pragma once

// Roots of polynomials over Q(zeta_n) that lie in Q(zeta_n).

#include "flk/qarith.hpp"

#include <vector>

namespace flk::field_roots {

using qarith::CyclotomicNumber;

/// All distinct roots in Q(zeta_n) of a squarefree polynomial with
/// coefficients in Q(zeta_n) (ascending order). Works p-adically at a prime p
/// that stays inert in Q(zeta_n), so n must have a primitive root modulo it
/// (n = 1, 2, 4, q^k or 2q^k for an odd prime q); other conductors throw
/// InvalidArgument. Every returned root is verified exactly.
std::vector<CyclotomicNumber> roots(const std::vector<CyclotomicNumber>& poly, int conductor);

}  // namespace flk::field_roots
